#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace iet {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n/d in lowest terms with positive denominator; throws Errc::zero_denominator.
Rational make_rational(const Int& n, const Int& d);

inline int sign(const Rational& q) { return q.sign(); }

/// Floor and ceiling division; b must be positive.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

/// Largest integer n with n <= q.
Int rational_floor(const Rational& q);

/// Nearest multiple of 2^-bits (ties toward +inf).
Rational round_dyadic(const Rational& q, unsigned bits);

/// "n" or "n/d"; parse accepts the same two forms.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace iet
