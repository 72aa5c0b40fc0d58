#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pfrob {

/// Sorted, deduplicated positive generators a1 < a2 < ... < ak of a
/// numerical semigroup, with their gcd cached.
class GeneratorSet {
public:
    static GeneratorSet normalize(std::span<const std::int64_t> gens);
    static GeneratorSet normalize(std::initializer_list<std::int64_t> gens);

    std::span<const std::int64_t> gens() const noexcept { return gens_; }
    std::int64_t gcd() const noexcept { return gcd_; }
    std::int64_t smallest() const noexcept { return gens_.front(); }
    std::int64_t largest() const noexcept { return gens_.back(); }
    std::size_t size() const noexcept { return gens_.size(); }

    GeneratorSet scaled(std::int64_t factor) const;
    std::string to_string() const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    GeneratorSet(std::vector<std::int64_t> gens, std::int64_t g)
        : gens_(std::move(gens)), gcd_(g) {}

    std::vector<std::int64_t> gens_;
    std::int64_t gcd_;
};

inline GeneratorSet normalize(std::span<const std::int64_t> gens) {
    return GeneratorSet::normalize(gens);
}

/// t_n = n(n+1)/2.
std::int64_t triangular(std::int64_t n);

/// The triple (t_n, t_{n+1}, t_{n+2}); requires n >= 1.
GeneratorSet triangular_triple(std::int64_t n);

/// gcd(t_{n+1}, t_{n+2}): (n+2)/2 for even n, n+2 for odd n.
std::int64_t gcd_consecutive_triangular(std::int64_t n);

} // namespace pfrob
