#include "pfrob/denumerant.hpp"

#include <cstdlib>
#include <string>

#include "pfrob/error.hpp"

namespace pfrob {

std::size_t max_table_cells() {
    static const std::size_t limit = [] {
        constexpr std::size_t fallback = 100'000'000;
        const char* env = std::getenv("PFROB_MAX_TABLE");
        if (env == nullptr || *env == '\0') return fallback;
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) return fallback;
        return static_cast<std::size_t>(v);
    }();
    return limit;
}

DenumerantTable::DenumerantTable(GeneratorSet gens, std::int64_t capacity)
    : gens_(std::move(gens)), capacity_(capacity) {
    if (capacity < 0)
        throw Error(Errc::domain_error, "table capacity must be nonnegative");
    auto cells = static_cast<std::uint64_t>(capacity) + 1;
    if (cells > max_table_cells())
        throw Error(Errc::table_limit,
                    "denumerant table of " + std::to_string(cells) +
                        " cells exceeds PFROB_MAX_TABLE=" + std::to_string(max_table_cells()));
    counts_.assign(cells, 0);
    counts_[0] = 1;
    // One generator at a time: unordered solutions, not compositions.
    for (auto a : gens_.gens()) {
        for (std::int64_t n = a; n <= capacity; ++n) {
            std::uint64_t sum;
            if (__builtin_add_overflow(counts_[n], counts_[n - a], &sum))
                throw Error(Errc::count_overflow,
                            "d(" + std::to_string(n) + ") overflows 64 bits");
            counts_[n] = sum;
        }
    }
}

std::uint64_t DenumerantTable::operator[](std::int64_t n) const {
    if (n < 0) return 0;
    if (n > capacity_)
        throw Error(Errc::domain_error, "index " + std::to_string(n) +
                                            " exceeds table capacity " +
                                            std::to_string(capacity_));
    return counts_[static_cast<std::size_t>(n)];
}

DenumerantTable denumerant_table(const GeneratorSet& gens, std::int64_t capacity) {
    return DenumerantTable(gens, capacity);
}

std::uint64_t denumerant(const GeneratorSet& gens, std::int64_t n) {
    if (n < 0) return 0;
    return DenumerantTable(gens, n)[n];
}

namespace {

struct Enumerator {
    std::span<const std::int64_t> gens;
    // reachable[j][r]: r is representable by gens[j..k-1].
    std::vector<std::vector<bool>> reachable;
    std::size_t limit;
    RepresentationList out;
    std::vector<std::int64_t> coeffs;

    // Returns false once the limit has been hit.
    bool walk(std::size_t j, std::int64_t rest) {
        if (j + 1 == gens.size()) {
            if (rest % gens[j] != 0) return true;
            coeffs[j] = rest / gens[j];
            if (out.items.size() == limit) {
                out.truncated = true;
                return false;
            }
            out.items.push_back({coeffs});
            return true;
        }
        for (std::int64_t x = 0; x * gens[j] <= rest; ++x) {
            auto r = rest - x * gens[j];
            if (!reachable[j + 1][static_cast<std::size_t>(r)]) continue;
            coeffs[j] = x;
            if (!walk(j + 1, r)) return false;
        }
        return true;
    }
};

} // namespace

RepresentationList enumerate_representations(const GeneratorSet& gens, std::int64_t n,
                                             std::size_t limit) {
    if (n < 0) return {};
    auto g = gens.gens();
    const auto k = g.size();
    if (static_cast<std::uint64_t>(n) + 1 > max_table_cells())
        throw Error(Errc::table_limit, "representation search exceeds PFROB_MAX_TABLE");

    Enumerator e{g, {}, limit, {}, std::vector<std::int64_t>(k, 0)};
    e.reachable.assign(k + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    e.reachable[k][0] = true;
    for (std::size_t j = k; j-- > 0;) {
        auto& cur = e.reachable[j];
        cur = e.reachable[j + 1];
        for (std::int64_t r = g[j]; r <= n; ++r)
            if (cur[static_cast<std::size_t>(r - g[j])]) cur[static_cast<std::size_t>(r)] = true;
    }
    if (e.reachable[0][static_cast<std::size_t>(n)]) e.walk(0, n);
    return std::move(e.out);
}

std::int64_t closed_form_d23(std::int64_t n) {
    if (n < 0)
        throw Error(Errc::domain_error, "closed_form_d23 needs n >= 0");
    return (n + 2) / 2 - (n + 2) / 3;
}

} // namespace pfrob
