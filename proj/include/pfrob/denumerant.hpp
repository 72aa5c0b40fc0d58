#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pfrob/generators.hpp"

namespace pfrob {

/// Upper bound on the number of cells a DenumerantTable may allocate.
/// Read once from the PFROB_MAX_TABLE environment variable; defaults to 10^8.
std::size_t max_table_cells();

/// counts[n] = d(n; A) for 0 <= n <= capacity, the coefficient of x^n in
/// 1 / prod (1 - x^{a_i}). Immutable once built.
class DenumerantTable {
public:
    DenumerantTable(GeneratorSet gens, std::int64_t capacity);

    const GeneratorSet& generators() const noexcept { return gens_; }
    std::int64_t capacity() const noexcept { return capacity_; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    /// d(n; A); zero for negative n. Throws domain_error past the capacity.
    std::uint64_t operator[](std::int64_t n) const;

private:
    GeneratorSet gens_;
    std::int64_t capacity_;
    std::vector<std::uint64_t> counts_;
};

DenumerantTable denumerant_table(const GeneratorSet& gens, std::int64_t capacity);

std::uint64_t denumerant(const GeneratorSet& gens, std::int64_t n);

/// Coefficients x_1..x_k aligned with the generator order.
struct Representation {
    std::vector<std::int64_t> coeffs;

    friend bool operator==(const Representation&, const Representation&) = default;
    friend auto operator<=>(const Representation&, const Representation&) = default;
};

struct RepresentationList {
    std::vector<Representation> items;
    bool truncated = false;  // more solutions exist past the limit
};

/// All solutions of sum a_i x_i = n in ascending lexicographic order of
/// (x_1, ..., x_k), stopping after `limit` of them.
RepresentationList enumerate_representations(const GeneratorSet& gens, std::int64_t n,
                                             std::size_t limit);

/// floor((n+2)/2) - floor((n+2)/3), which equals d(n; 2, 3).
std::int64_t closed_form_d23(std::int64_t n);

} // namespace pfrob
