#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pfrob/generators.hpp"

namespace pfrob {

/// (t_n, t_{n+1}, t_{n+2}); the three are coprime as a set for every n >= 1.
struct TriangularTriple {
    std::int64_t n;
    GeneratorSet gens;

    static TriangularTriple make(std::int64_t n) { return {n, triangular_triple(n)}; }
};

/// Frobenius number of the triple, floor form: floor(n/2)(t_n+t_{n+1}+t_{n+2}-1)-1.
std::int64_t g_p0_floor_form(std::int64_t n);
/// The same number, split by the parity of n.
std::int64_t g_p0_parity_form(std::int64_t n);
/// Both forms, asserted equal. Requires n >= 2.
std::int64_t g_p0(std::int64_t n);

/// A level/value pair (P', N') with g(triple; P') = N' and d(N') = P'.
struct Theorem1Point {
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t p_index = 0;
    std::int64_t g_value = 0;
};

Theorem1Point theorem1_point(std::int64_t n, std::int64_t p);

/// g(triple; 1) = n(n+1)(n+2) - 1, n >= 2.
std::int64_t g_p1(std::int64_t n);
/// g(triple; 2), n >= 2; n = 3 is the special value 59.
std::int64_t g_p2(std::int64_t n);

/// Whether the closed form for g(triple; p), 3 <= p <= 10, is stated for n.
bool theorem4_valid(std::int64_t n, std::int64_t p);
/// The closed form for 3 <= p <= 10 when theorem4_valid(n, p), else nullopt.
std::optional<std::int64_t> g_p3_to_10(std::int64_t n, std::int64_t p);

/// One closed-form (level, g, n, s) tuple for a fixed triple, plus the
/// Apéry values it comes from, indexed by residue mod t_smallest.
/// n_count counts positive integers only.
struct PropTuple {
    std::int64_t p_index = 0;
    std::int64_t g = 0;
    std::int64_t n_count = 0;
    std::int64_t s_sum = 0;
    std::vector<std::int64_t> m_values;
};

/// (6, 10, 15) at level t_{p-1}, p >= 1.
PropTuple prop1_t345(std::int64_t p);

/// (3, 6, 10) at level (n+1)(5n+2j)/2, n >= 0, 1 <= j <= 5.
PropTuple prop2_t234(std::int64_t n, std::int64_t j);

enum class Prop3Case { even, odd, odd_low };

const char* to_string(Prop3Case c) noexcept;

bool prop3_valid(std::int64_t n, std::int64_t j, Prop3Case c);

/// Level r_e, r_o or r_oo for (10, 15, 21); r_e and r_o are integral only
/// on their own parity of n.
std::int64_t prop3_level(std::int64_t n, std::int64_t j, Prop3Case c);

/// (10, 15, 21) at the level selected by the case; throws domain_error
/// outside the stated validity set.
PropTuple prop3_t456(std::int64_t n, std::int64_t j, Prop3Case c);

} // namespace pfrob
