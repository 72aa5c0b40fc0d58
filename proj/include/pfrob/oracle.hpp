#pragma once

#include <cstdint>
#include <optional>

#include "pfrob/denumerant.hpp"
#include "pfrob/rational.hpp"

namespace pfrob::oracle {

// Brute-force quantities read straight off a DenumerantTable. Nothing here
// goes through Apéry sets; the table is grown until the top a1 entries all
// exceed p, which by shift monotonicity certifies every later entry does too.

struct BruteForce {
    std::int64_t g;          // largest n with d(n) <= p (-1 if none)
    std::int64_t count;      // #{n >= 0 : d(n) <= p}
    std::int64_t count_pos;  // #{n >= 1 : d(n) <= p}
    std::int64_t sum;        // sum of those n
};

/// Table large enough that every n beyond its capacity - a1 has d(n) > p.
DenumerantTable certified_table(const GeneratorSet& gens, std::int64_t p);

BruteForce brute_force(const GeneratorSet& gens, std::int64_t p);

/// sum of n^mu over n >= 0 with d(n) <= p (0^0 counts as 1).
BigInt brute_force_power_sum(const GeneratorSet& gens, std::int64_t p, int mu);

/// Largest n with d(n) == p exactly, if any.
std::optional<std::int64_t> brute_force_exact(const GeneratorSet& gens, std::int64_t p);

} // namespace pfrob::oracle
