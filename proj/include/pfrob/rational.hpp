#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pfrob {

using BigInt = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

/// B_k from x/(e^x - 1), so B_1 = -1/2.
ExactRational bernoulli(int k);

BigInt binomial(int n, int k);

/// Narrow to int64, throwing count_overflow when out of range.
std::int64_t to_int64(const BigInt& v);

std::string to_string(const BigInt& v);
std::string to_string(const ExactRational& v);

} // namespace pfrob
