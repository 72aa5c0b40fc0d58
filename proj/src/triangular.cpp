#include "pfrob/triangular.hpp"

#include <array>
#include <string>

#include "pfrob/checked.hpp"
#include "pfrob/error.hpp"

namespace pfrob {

using namespace checked;

namespace {

bool is_odd(std::int64_t n) { return n % 2 != 0; }

void require_n(std::int64_t n, std::int64_t lo, const char* what) {
    if (n < lo)
        throw Error(Errc::domain_error,
                    std::string(what) + " needs n >= " + std::to_string(lo) + ", got " +
                        std::to_string(n));
}

// (c)(n+1)(n+2)/den - 1
std::int64_t shape(std::int64_t c, std::int64_t n, std::int64_t den) {
    return exact_div(mul(c, n + 1, n + 2), den) - 1;
}

} // namespace

std::int64_t g_p0_floor_form(std::int64_t n) {
    require_n(n, 1, "g_p0");
    auto s = triangular(n) + triangular(n + 1) + triangular(n + 2) - 1;
    return mul(n / 2, s) - 1;
}

std::int64_t g_p0_parity_form(std::int64_t n) {
    require_n(n, 1, "g_p0");
    return is_odd(n) ? shape(3 * n - 3, n, 4) : shape(3 * n, n, 4);
}

std::int64_t g_p0(std::int64_t n) {
    require_n(n, 2, "g_p0");
    auto a = g_p0_floor_form(n);
    auto b = g_p0_parity_form(n);
    if (a != b)
        throw Error(Errc::non_integral_result,
                    "Frobenius forms disagree at n=" + std::to_string(n));
    return a;
}

Theorem1Point theorem1_point(std::int64_t n, std::int64_t p) {
    if (p < 0) throw Error(Errc::domain_error, "p must be nonnegative");
    if (n == 1) throw Error(Errc::odd_n_too_small, "odd n must be at least 3");
    require_n(n, 2, "theorem1_point");

    Theorem1Point pt{n, p, 0, 0};
    if (!is_odd(n)) {
        // p(p+1) + sum ceil(6j/n)
        pt.p_index = mul(p, p + 1);
        for (std::int64_t j = 1; j <= p; ++j) pt.p_index = add(pt.p_index, ceil_div(6 * j, n));
        pt.g_value = exact_div(mul(n + 1, n + 2, add(mul(2 * (n + 3), p), 3 * n)), 4) - 1;
    } else {
        // sum ceil((j/2)(1 + 3/n)) = sum ceil(j(n+3) / 2n)
        for (std::int64_t j = 1; j <= p; ++j)
            pt.p_index = add(pt.p_index, ceil_div(mul(j, n + 3), 2 * n));
        pt.g_value = exact_div(mul(n + 1, n + 2, add(mul(n + 3, p), 3 * (n - 1))), 4) - 1;
    }
    return pt;
}

std::int64_t g_p1(std::int64_t n) {
    require_n(n, 2, "g_p1");
    return mul(n, n + 1, n + 2) - 1;
}

std::int64_t g_p2(std::int64_t n) {
    require_n(n, 2, "g_p2");
    if (n == 3) return 59;  // no integer has exactly two representations
    return is_odd(n) ? shape(5 * n - 3, n, 4) : shape(5 * n, n, 4);
}

bool theorem4_valid(std::int64_t n, std::int64_t p) {
    if (n < 1) return false;
    const bool odd = is_odd(n);
    switch (p) {
    case 3: return odd ? n >= 3 : n >= 6;
    case 4: return n == 5 || n >= 7;
    case 5: return n == 6 || n >= 8;
    case 6: return odd ? n >= 11 : n >= 8;
    case 7: return odd ? n >= 5 : n >= 6;
    case 8: return odd ? n >= 9 : n >= 12;
    case 9: return n == 11 || n >= 13;
    case 10: return n == 3 || n == 4 || n >= 8;
    default: return false;
    }
}

std::optional<std::int64_t> g_p3_to_10(std::int64_t n, std::int64_t p) {
    if (p < 3 || p > 10)
        throw Error(Errc::unsupported_p, "closed form only covers 3 <= p <= 10");
    if (!theorem4_valid(n, p)) return std::nullopt;
    const bool odd = is_odd(n);
    switch (p) {
    case 3: return odd ? shape(5 * n + 3, n, 4) : shape(5 * n + 6, n, 4);
    case 4: return shape(3 * n, n, 2);
    case 5: return shape(3 * (n + 1), n, 2);
    case 6: return odd ? shape(7 * n - 3, n, 4) : shape(7 * n, n, 4);
    case 7: return odd ? shape(7 * n + 3, n, 4) : shape(7 * n + 6, n, 4);
    case 8: return odd ? shape(7 * n + 9, n, 4) : shape(7 * n + 12, n, 4);
    case 9: return shape(2 * n, n, 1);
    default: return shape(4 * n + 3, n, 2);
    }
}

PropTuple prop1_t345(std::int64_t p) {
    require_n(p, 1, "prop1_t345");
    PropTuple t;
    t.p_index = triangular(p - 1);
    t.g = 30 * p - 1;
    // The uniform form 30p - 16 discards n = 0, which is only counted once
    // the level is at least 1; at level 0 the count is 30p - 15.
    t.n_count = 30 * p - 16 + (t.p_index == 0 ? 1 : 0);
    t.s_sum = mul(15, 30 * p * p - 31 * p + 12);
    t.m_values = {5 * (6 * p - 6), 5 * (6 * p - 1), 5 * (6 * p - 2),
                  5 * (6 * p - 3), 5 * (6 * p - 4), 5 * (6 * p + 1)};
    return t;
}

PropTuple prop2_t234(std::int64_t n, std::int64_t j) {
    require_n(n, 0, "prop2_t234");
    if (j < 1 || j > 5) throw Error(Errc::domain_error, "prop2_t234 needs 1 <= j <= 5");
    PropTuple t;
    t.p_index = exact_div(mul(n + 1, 5 * n + 2 * j), 2);
    t.g = 30 * n + 6 * j + 17;
    t.n_count = 30 * n + 6 * j + 8;
    t.s_sum = mul(3, 150 * n * n + 5 * (12 * j + 17) * n + 6 * j * j + 17 * j + 23);
    t.m_values = {30 * n + 6 * j, 30 * n + 6 * j + 10, 30 * n + 6 * j + 20};
    return t;
}

const char* to_string(Prop3Case c) noexcept {
    switch (c) {
    case Prop3Case::even: return "re";
    case Prop3Case::odd: return "ro";
    case Prop3Case::odd_low: return "roo";
    }
    return "?";
}

bool prop3_valid(std::int64_t n, std::int64_t j, Prop3Case c) {
    if (n < 0 || j < 0) return false;
    switch (c) {
    case Prop3Case::even:
        if (is_odd(n)) return false;
        if (j == 0) return true;
        return n >= 2 && (j == 2 || j == 3 || j == 4 || j == 5 || j == 6 || j == 8);
    case Prop3Case::odd:
        if (!is_odd(n)) return false;
        if (j == 0) return true;
        return n >= 3 && j >= 1 && j <= 4;
    case Prop3Case::odd_low:
        return is_odd(n) && (j == 0 || j == 1);
    }
    return false;
}

std::int64_t prop3_level(std::int64_t n, std::int64_t j, Prop3Case c) {
    switch (c) {
    case Prop3Case::even: return exact_div(mul(n, 7 * n + 8 - 2 * j), 4);
    case Prop3Case::odd: return exact_div(7 * n * n + (8 - 4 * j) * n + 1, 4);
    case Prop3Case::odd_low: return exact_div(7 * n * n + (2 - 4 * j) * n - 1, 4);
    }
    return 0;
}

PropTuple prop3_t456(std::int64_t n, std::int64_t j, Prop3Case c) {
    if (!prop3_valid(n, j, c))
        throw Error(Errc::domain_error, std::string("(n, j) = (") + std::to_string(n) + ", " +
                                            std::to_string(j) + ") is outside the " +
                                            to_string(c) + " validity set");
    PropTuple t;
    t.p_index = prop3_level(n, j, c);

    // Apéry offsets and the residues (mod 10) they land on. The two blocks
    // for the even case differ by the parity of j; odd n always uses the
    // second ordering because 105n = 5 (mod 10).
    static constexpr std::array<std::int64_t, 10> offsets{99, 84, 78, 63, 57, 42, 36, 21, 15, 0};
    static constexpr std::array<std::int64_t, 10> first{9, 4, 8, 3, 7, 2, 6, 1, 5, 0};
    static constexpr std::array<std::int64_t, 10> second{4, 9, 3, 8, 2, 7, 1, 6, 0, 5};

    std::int64_t base = 0;
    const std::array<std::int64_t, 10>* residues = &first;
    std::int64_t shift = 0;
    switch (c) {
    case Prop3Case::even:
        base = 105 * n - 15 * j;
        residues = is_odd(j) ? &second : &first;
        t.g = 105 * n + 89 - 15 * j;
        t.n_count = 105 * n + 44 - 15 * j;
        // 15/2 (735n^2 - 7(30j - 89)n + 15j^2 - 89j + 194)
        t.s_sum = exact_div(mul(15, 735 * n * n - 7 * (30 * j - 89) * n + 15 * j * j - 89 * j + 194), 2);
        break;
    case Prop3Case::odd:
        base = 105 * n - 30 * j;
        residues = &second;
        t.g = 105 * n + 89 - 30 * j;
        t.n_count = 105 * n + 44 - 30 * j;
        // 15/2 (735n^2 - 7(60j - 89)n + 60j^2 - 178j + 194)
        t.s_sum = exact_div(mul(15, 735 * n * n - 7 * (60 * j - 89) * n + 60 * j * j - 178 * j + 194), 2);
        break;
    case Prop3Case::odd_low:
        base = 105 * n - 30 * j;
        shift = -45;
        residues = &first;
        t.g = 105 * n + 44 - 30 * j;
        t.n_count = 105 * n - 1 - 30 * j;
        t.s_sum = exact_div(mul(15, 735 * n * n - 7 * (60 * j + 1) * n + 60 * j * j + 2 * j + 62), 2);
        break;
    }
    // Level 0 has no representable-once zero to discard; see prop1_t345.
    if (t.p_index == 0) t.n_count += 1;

    t.m_values.assign(10, 0);
    for (std::size_t k = 0; k < offsets.size(); ++k)
        t.m_values[static_cast<std::size_t>((*residues)[k])] = base + offsets[k] + shift;
    return t;
}

} // namespace pfrob
