#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pfrob/generators.hpp"
#include "pfrob/rational.hpp"

namespace pfrob {

/// p-Apéry set: m[i] is the least value congruent to i mod a1 with at
/// least p+1 representations. Every smaller value of the same residue has
/// at most p of them.
struct PAperySet {
    std::int64_t a1 = 0;
    std::int64_t p = 0;
    std::vector<std::int64_t> m;  // indexed by residue 0..a1-1

    std::int64_t max() const;
};

/// Which nonnegative integers the Sylvester number counts. The generic
/// identities and the two-generator closed forms count n >= 0; the
/// triangular tables count positive n only. The two differ by one exactly
/// when p >= 1, since d(0) = 1.
enum class CountDomain { nonnegative, positive };

struct PFrobeniusSummary {
    std::int64_t g = 0;
    std::int64_t n_count = 0;
    std::int64_t s_sum = 0;
    std::map<int, BigInt> power_sums;  // mu -> s_mu
};

PAperySet p_apery_set(const GeneratorSet& gens, std::int64_t p);

std::int64_t p_frobenius(const PAperySet& ap);
std::int64_t p_frobenius(const GeneratorSet& gens, std::int64_t p);

std::int64_t p_sylvester_number(const PAperySet& ap,
                                CountDomain domain = CountDomain::nonnegative);
std::int64_t p_sylvester_number(const GeneratorSet& gens, std::int64_t p,
                                CountDomain domain = CountDomain::nonnegative);

std::int64_t p_sylvester_sum(const PAperySet& ap);
std::int64_t p_sylvester_sum(const GeneratorSet& gens, std::int64_t p);

/// sum of n^mu over n >= 0 with d(n) <= p, via the Bernoulli-weighted
/// identity over the Apéry set. mu = 0 and mu = 1 reproduce the Sylvester
/// number and sum.
BigInt p_power_sum(const PAperySet& ap, int mu);
BigInt p_power_sum(const GeneratorSet& gens, std::int64_t p, int mu);

PFrobeniusSummary p_frobenius_summary(const GeneratorSet& gens, std::int64_t p,
                                      std::span<const int> mus = {},
                                      CountDomain domain = CountDomain::nonnegative);

/// Largest n with exactly p representations; nullopt when no such n exists.
std::optional<std::int64_t> exact_rep_frobenius(const GeneratorSet& gens, std::int64_t p);

// Two-generator closed forms, valid for coprime a, b.
std::int64_t two_var_g(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t two_var_n(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t two_var_s(std::int64_t a, std::int64_t b, std::int64_t p);

} // namespace pfrob
