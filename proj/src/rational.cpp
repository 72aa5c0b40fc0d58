#include "pfrob/rational.hpp"

#include <limits>
#include <vector>

#include "pfrob/error.hpp"

namespace pfrob {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ExactRational bernoulli(int k) {
    if (k < 0)
        throw Error(Errc::domain_error, "Bernoulli index must be nonnegative");
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    std::vector<ExactRational> b(static_cast<std::size_t>(k) + 1);
    b[0] = 1;
    for (int m = 1; m <= k; ++m) {
        ExactRational acc = 0;
        for (int j = 0; j < m; ++j) acc += ExactRational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / (m + 1);
    }
    return b[k];
}

std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw Error(Errc::count_overflow, "value " + v.str() + " does not fit in int64");
    return static_cast<std::int64_t>(v);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const ExactRational& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

} // namespace pfrob
