#pragma once

#include <stdexcept>
#include <string>

namespace pfrob {

enum class Errc {
    empty_input,
    non_positive_element,
    count_overflow,
    table_limit,
    gcd_not_one,
    needs_two_generators,
    non_integral_result,
    not_coprime,
    domain_error,
    odd_n_too_small,
    unsupported_p,
    unknown_claim,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library. `code()` distinguishes usage errors
/// (bad generators, out-of-domain parameters) from internal invariant
/// violations (`non_integral_result`, `count_overflow`).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace pfrob
