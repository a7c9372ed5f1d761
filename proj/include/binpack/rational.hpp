#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binpack {

/// Exact rational number used for all size arithmetic. Sizes live on a
/// fixed-point grid (multiples of 1/u), but derived quantities such as
/// segment components are general rationals.
using Rat = boost::rational<long long>;

enum class ErrorCode {
    invalid_argument,
    parse,
    io,
    infeasible,
    guard_exceeded,
    validation,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& msg);

long long rat_floor(const Rat& r);
long long rat_ceil(const Rat& r);

/// Largest integer q with q*b <= a. Requires b > 0.
long long floor_div(const Rat& a, const Rat& b);

/// ceil(a/b) for non-negative a, positive b.
long long ceil_div_ll(long long a, long long b);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// Parses "12", "0.21", "4.2" or "3/7" into an exact rational.
Rat parse_decimal(std::string_view text);

/// Exact decimal when the reduced denominator is of the form 2^a*5^b
/// ("0.4", "1.125", "12"), otherwise "num/den".
std::string format_exact(const Rat& r);

/// Fixed-point decimal rounded half-up to `places`; deterministic.
std::string format_fixed(const Rat& r, int places);

}  // namespace binpack
