#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "iet/rational.hpp"

namespace iet {

/// Decomposes n >= 1 as k^2 * d with d squarefree; returns {k, d}.
std::pair<std::uint64_t, std::uint64_t> squarefree_decompose(std::uint64_t n);

/// Exact real of the form sum_d q_d * sqrt(d) over distinct squarefree
/// positive integers d, with nonzero rational coefficients q_d.  The key
/// d = 1 carries the rational part.  Because the square roots of distinct
/// squarefree integers are linearly independent over Q, two values are
/// equal as reals exactly when their term maps coincide, so operator==
/// is a plain data comparison while ordering goes through the sign oracle.
class SurdReal {
 public:
  using Terms = std::map<std::uint64_t, Rational>;

  SurdReal() = default;
  SurdReal(const Rational& q);
  SurdReal(int n) : SurdReal(Rational(n)) {}

  /// sqrt(n) normalized to k*sqrt(d) with d squarefree; n = 0 gives zero.
  static SurdReal sqrt_of(std::uint64_t n);
  /// coeff * sqrt(n), normalized the same way.
  static SurdReal term(const Rational& coeff, std::uint64_t n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;
  Rational coeff(std::uint64_t d) const;

  SurdReal& operator+=(const SurdReal& rhs);
  SurdReal& operator-=(const SurdReal& rhs);
  friend SurdReal operator+(SurdReal lhs, const SurdReal& rhs) { return lhs += rhs; }
  friend SurdReal operator-(SurdReal lhs, const SurdReal& rhs) { return lhs -= rhs; }
  SurdReal operator-() const;
  friend SurdReal operator*(const Rational& q, const SurdReal& x);
  friend SurdReal operator*(const SurdReal& x, const Rational& q) { return q * x; }

  friend bool operator==(const SurdReal&, const SurdReal&) = default;

 private:
  void add_term(std::uint64_t d, const Rational& q);
  Terms terms_;
};

/// Exact sign of the real value: -1, 0 or +1.  Zero and single-term values
/// (and any value whose coefficients all share one sign) are immediate; the
/// mixed-sign case refines a dyadic interval enclosure, starting at 64
/// fractional bits and doubling, until the enclosure excludes zero.
int sign(const SurdReal& x);

inline std::strong_ordering operator<=>(const SurdReal& a, const SurdReal& b) {
  int s = sign(a - b);
  return s < 0 ? std::strong_ordering::less
       : s > 0 ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

inline const SurdReal& min(const SurdReal& a, const SurdReal& b) { return b < a ? b : a; }
inline const SurdReal& max(const SurdReal& a, const SurdReal& b) { return a < b ? b : a; }
SurdReal abs(const SurdReal& x);

/// Dyadic approximation m with |x - m| <= 2^-bits.
Rational approx(const SurdReal& x, unsigned bits);

/// Grammar: term (('+'|'-') term)*, term = rat | rat '*' 'sqrt(' uint ')'
/// | 'sqrt(' uint ')', rat = int | int '/' uint; whitespace insignificant.
/// A leading sign before the first term is accepted.  parse normalizes
/// sqrt(k^2*d) to k*sqrt(d) and merges equal-d terms.
SurdReal parse_surd(std::string_view text);

/// Canonical form: terms by ascending d, the d = 1 term written without
/// sqrt, unit coefficients elided.  format/parse round-trip exactly.
std::string format_surd(const SurdReal& x);
std::ostream& operator<<(std::ostream& os, const SurdReal& x);

}  // namespace iet
