#pragma once

#include <cstdint>
#include <string>

#include "pfrob/error.hpp"

// Overflow-checked int64 helpers for the closed forms. Every rational
// expression goes through exact_div so a non-integral value is caught.
namespace pfrob::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::count_overflow, "int64 overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::count_overflow, "int64 overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::count_overflow, "int64 overflow in multiplication");
    return r;
}

template <typename... Ts>
std::int64_t mul(std::int64_t a, std::int64_t b, Ts... rest) {
    return mul(mul(a, b), rest...);
}

inline std::int64_t exact_div(std::int64_t num, std::int64_t den) {
    if (den == 0 || num % den != 0)
        throw Error(Errc::non_integral_result,
                    std::to_string(num) + " is not divisible by " + std::to_string(den));
    return num / den;
}

/// ceil(num/den) for num >= 0, den > 0, in integers.
inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    return (num + den - 1) / den;
}

} // namespace pfrob::checked
