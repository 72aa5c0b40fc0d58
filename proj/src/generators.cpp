#include "pfrob/generators.hpp"

#include <algorithm>
#include <numeric>

#include "pfrob/checked.hpp"
#include "pfrob/error.hpp"

namespace pfrob {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::non_positive_element: return "NonPositiveElement";
    case Errc::count_overflow: return "CountOverflow";
    case Errc::table_limit: return "TableLimit";
    case Errc::gcd_not_one: return "GcdNotOne";
    case Errc::needs_two_generators: return "NeedsTwoGenerators";
    case Errc::non_integral_result: return "NonIntegralResult";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::domain_error: return "DomainError";
    case Errc::odd_n_too_small: return "OddNTooSmall";
    case Errc::unsupported_p: return "UnsupportedP";
    case Errc::unknown_claim: return "UnknownClaim";
    }
    return "Unknown";
}

GeneratorSet GeneratorSet::normalize(std::span<const std::int64_t> gens) {
    if (gens.empty())
        throw Error(Errc::empty_input, "generator list is empty");
    std::vector<std::int64_t> v(gens.begin(), gens.end());
    for (auto a : v)
        if (a < 1)
            throw Error(Errc::non_positive_element,
                        "generator " + std::to_string(a) + " is not positive");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::int64_t g = 0;
    for (auto a : v) g = std::gcd(g, a);
    return GeneratorSet(std::move(v), g);
}

GeneratorSet GeneratorSet::normalize(std::initializer_list<std::int64_t> gens) {
    return normalize(std::span<const std::int64_t>(gens.begin(), gens.size()));
}

GeneratorSet GeneratorSet::scaled(std::int64_t factor) const {
    if (factor < 1)
        throw Error(Errc::non_positive_element, "scale factor must be positive");
    std::vector<std::int64_t> v;
    v.reserve(gens_.size());
    for (auto a : gens_) v.push_back(checked::mul(a, factor));
    return GeneratorSet(std::move(v), checked::mul(gcd_, factor));
}

std::string GeneratorSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(gens_[i]);
    }
    return s;
}

std::int64_t triangular(std::int64_t n) {
    return checked::mul(n, n + 1) / 2;
}

GeneratorSet triangular_triple(std::int64_t n) {
    if (n < 1)
        throw Error(Errc::domain_error, "triangular index must be >= 1");
    return GeneratorSet::normalize({triangular(n), triangular(n + 1), triangular(n + 2)});
}

std::int64_t gcd_consecutive_triangular(std::int64_t n) {
    if (n < 1)
        throw Error(Errc::domain_error, "n must be >= 1");
    return n % 2 == 0 ? (n + 2) / 2 : n + 2;
}

} // namespace pfrob
