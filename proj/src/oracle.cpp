#include "pfrob/oracle.hpp"

#include <algorithm>

#include "pfrob/checked.hpp"
#include "pfrob/error.hpp"

namespace pfrob::oracle {

namespace {

// Largest index with counts <= p, or -1.
std::int64_t last_at_most(const DenumerantTable& t, std::uint64_t p) {
    auto c = t.counts();
    for (auto n = static_cast<std::int64_t>(c.size()) - 1; n >= 0; --n)
        if (c[static_cast<std::size_t>(n)] <= p) return n;
    return -1;
}

} // namespace

DenumerantTable certified_table(const GeneratorSet& gens, std::int64_t p) {
    if (gens.gcd() != 1)
        throw Error(Errc::gcd_not_one, "gcd is " + std::to_string(gens.gcd()) + ", not 1");
    if (p < 0) throw Error(Errc::domain_error, "p must be nonnegative");
    const auto a1 = gens.smallest();
    std::int64_t cap = std::max<std::int64_t>(64, 4 * a1);
    for (;;) {
        auto t = denumerant_table(gens, cap);
        auto last = last_at_most(t, static_cast<std::uint64_t>(p));
        if (cap - last >= a1) return t;
        cap = checked::mul(cap, 2);
    }
}

BruteForce brute_force(const GeneratorSet& gens, std::int64_t p) {
    auto t = certified_table(gens, p);
    auto c = t.counts();
    BruteForce r{-1, 0, 0, 0};
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n] > static_cast<std::uint64_t>(p)) continue;
        auto v = static_cast<std::int64_t>(n);
        r.g = v;
        ++r.count;
        if (v >= 1) ++r.count_pos;
        r.sum = checked::add(r.sum, v);
    }
    return r;
}

BigInt brute_force_power_sum(const GeneratorSet& gens, std::int64_t p, int mu) {
    if (mu < 0) throw Error(Errc::domain_error, "mu must be nonnegative");
    auto t = certified_table(gens, p);
    auto c = t.counts();
    BigInt total = 0;
    for (std::size_t n = 0; n < c.size(); ++n)
        if (c[n] <= static_cast<std::uint64_t>(p)) total += boost::multiprecision::pow(BigInt(n), mu);
    return total;
}

std::optional<std::int64_t> brute_force_exact(const GeneratorSet& gens, std::int64_t p) {
    auto t = certified_table(gens, p);
    auto c = t.counts();
    for (auto n = static_cast<std::int64_t>(c.size()) - 1; n >= 0; --n)
        if (c[static_cast<std::size_t>(n)] == static_cast<std::uint64_t>(p)) return n;
    return std::nullopt;
}

} // namespace pfrob::oracle
