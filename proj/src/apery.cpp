#include "pfrob/apery.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pfrob/checked.hpp"
#include "pfrob/denumerant.hpp"
#include "pfrob/error.hpp"

namespace pfrob {

namespace {

void require_semigroup(const GeneratorSet& gens) {
    if (gens.gcd() != 1)
        throw Error(Errc::gcd_not_one, "gcd is " + std::to_string(gens.gcd()) + ", not 1");
    if (gens.size() < 2)
        throw Error(Errc::needs_two_generators, "at least two generators are required");
}

void require_p(std::int64_t p) {
    if (p < 0) throw Error(Errc::domain_error, "p must be nonnegative");
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
    if (num % den != 0)
        throw Error(Errc::non_integral_result, std::string(what) + " is not integral");
    return num / den;
}

} // namespace

std::int64_t PAperySet::max() const { return *std::max_element(m.begin(), m.end()); }

PAperySet p_apery_set(const GeneratorSet& gens, std::int64_t p) {
    require_semigroup(gens);
    require_p(p);
    const auto a1 = gens.smallest();
    const auto need = static_cast<std::uint64_t>(p) + 1;

    // Every residue class eventually reaches p+1 representations because the
    // gcd is 1; double the table until all thresholds are inside it.
    std::int64_t cap = std::max<std::int64_t>(64, checked::mul(2 * a1, p + 1));
    for (;;) {
        auto table = denumerant_table(gens, cap);
        PAperySet ap{a1, p, std::vector<std::int64_t>(static_cast<std::size_t>(a1), -1)};
        bool complete = true;
        for (std::int64_t i = 0; i < a1 && complete; ++i) {
            std::int64_t x = i;
            while (x <= cap && table[x] < need) x += a1;
            if (x > cap) complete = false;
            else ap.m[static_cast<std::size_t>(i)] = x;
        }
        if (complete) return ap;
        cap = checked::mul(cap, 2);
    }
}

std::int64_t p_frobenius(const PAperySet& ap) { return ap.max() - ap.a1; }

std::int64_t p_frobenius(const GeneratorSet& gens, std::int64_t p) {
    return p_frobenius(p_apery_set(gens, p));
}

std::int64_t p_sylvester_number(const PAperySet& ap, CountDomain domain) {
    BigInt sum = 0;
    for (auto v : ap.m) sum += v;
    // sum m_i / a1 - (a1 - 1) / 2
    BigInt a1 = ap.a1;
    auto n = exact_quotient(2 * sum - a1 * (a1 - 1), 2 * a1, "Sylvester number");
    if (domain == CountDomain::positive && ap.p >= 1) n -= 1;
    return to_int64(n);
}

std::int64_t p_sylvester_number(const GeneratorSet& gens, std::int64_t p, CountDomain domain) {
    return p_sylvester_number(p_apery_set(gens, p), domain);
}

std::int64_t p_sylvester_sum(const PAperySet& ap) {
    BigInt sum = 0, sq = 0;
    for (auto v : ap.m) {
        sum += v;
        sq += BigInt(v) * v;
    }
    // sum m^2 / (2 a1) - sum m / 2 + (a1^2 - 1) / 12, scaled by 12 a1
    BigInt a1 = ap.a1;
    auto s = exact_quotient(6 * sq - 6 * a1 * sum + a1 * (a1 * a1 - 1), 12 * a1,
                            "Sylvester sum");
    return to_int64(s);
}

std::int64_t p_sylvester_sum(const GeneratorSet& gens, std::int64_t p) {
    return p_sylvester_sum(p_apery_set(gens, p));
}

BigInt p_power_sum(const PAperySet& ap, int mu) {
    if (mu < 0) throw Error(Errc::domain_error, "mu must be nonnegative");
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::pow;

    const BigInt a1 = ap.a1;
    ExactRational total = 0;
    for (int kappa = 0; kappa <= mu; ++kappa) {
        BigInt inner = 0;
        for (auto v : ap.m) inner += pow(BigInt(v), static_cast<unsigned>(mu + 1 - kappa));
        // a1^(kappa - 1), which is 1/a1 at kappa = 0
        ExactRational scale = kappa == 0 ? ExactRational(BigInt(1), a1)
                                         : ExactRational(pow(a1, static_cast<unsigned>(kappa - 1)));
        total += ExactRational(binomial(mu + 1, kappa)) * bernoulli(kappa) * scale *
                 ExactRational(inner);
    }
    total /= (mu + 1);
    total += bernoulli(mu + 1) / (mu + 1) *
             ExactRational(pow(a1, static_cast<unsigned>(mu + 1)) - 1);
    if (denominator(total) != 1)
        throw Error(Errc::non_integral_result,
                    "power sum evaluated to " + to_string(total));
    return numerator(total);
}

BigInt p_power_sum(const GeneratorSet& gens, std::int64_t p, int mu) {
    return p_power_sum(p_apery_set(gens, p), mu);
}

PFrobeniusSummary p_frobenius_summary(const GeneratorSet& gens, std::int64_t p,
                                      std::span<const int> mus, CountDomain domain) {
    auto ap = p_apery_set(gens, p);
    PFrobeniusSummary out;
    out.g = p_frobenius(ap);
    out.n_count = p_sylvester_number(ap, domain);
    out.s_sum = p_sylvester_sum(ap);
    for (int mu : mus) out.power_sums[mu] = p_power_sum(ap, mu);
    return out;
}

std::optional<std::int64_t> exact_rep_frobenius(const GeneratorSet& gens, std::int64_t p) {
    const auto gp = p_frobenius(gens, p);
    if (gp < 0) return std::nullopt;
    const auto table = denumerant_table(gens, gp);
    const auto want = static_cast<std::uint64_t>(p);
    if (table[gp] == want) return gp;
    // Here g(A;p) = g(A;p-1): nothing above it has exactly p representations,
    // but something below still might.
    for (auto n = gp - 1; n >= 0; --n)
        if (table[n] == want) return n;
    return std::nullopt;
}

namespace {

void require_coprime_pair(std::int64_t a, std::int64_t b, std::int64_t p) {
    if (a < 1 || b < 1)
        throw Error(Errc::domain_error, "generators must be positive");
    if (std::gcd(a, b) != 1)
        throw Error(Errc::not_coprime,
                    "gcd(" + std::to_string(a) + "," + std::to_string(b) + ") is not 1");
    require_p(p);
}

} // namespace

std::int64_t two_var_g(std::int64_t a, std::int64_t b, std::int64_t p) {
    require_coprime_pair(a, b, p);
    using namespace checked;
    return sub(sub(mul(p + 1, a, b), a), b);
}

std::int64_t two_var_n(std::int64_t a, std::int64_t b, std::int64_t p) {
    require_coprime_pair(a, b, p);
    using namespace checked;
    return exact_div(add(sub(sub(mul(2 * p + 1, a, b), a), b), 1), 2);
}

std::int64_t two_var_s(std::int64_t a, std::int64_t b, std::int64_t p) {
    require_coprime_pair(a, b, p);
    const BigInt A = a, B = b, P = p;
    const BigInt ab = A * B;
    auto first = exact_quotient(ab * P * (ab * (P + 1) - A - B), 2, "two-variable sum");
    auto second = exact_quotient((A - 1) * (B - 1) * (2 * ab - A - B - 1), 12,
                                 "two-variable sum");
    return to_int64(first + second);
}

} // namespace pfrob
