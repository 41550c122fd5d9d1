#include "iet/rational.hpp"

#include <cctype>

#include "iet/error.hpp"

namespace iet {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::malformed_text: return "MalformedText";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::empty_interval: return "EmptyInterval";
    case Errc::non_positive_length: return "NonPositiveLength";
    case Errc::length_sum_mismatch: return "LengthSumMismatch";
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::point_outside_domain: return "PointOutsideDomain";
    case Errc::base_mismatch: return "BaseMismatch";
    case Errc::support_outside_base: return "SupportOutsideBase";
    case Errc::overlapping_blocks: return "OverlappingBlocks";
    case Errc::not_finite_order: return "NotFiniteOrder";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::non_positive_input: return "NonPositiveInput";
    case Errc::non_positive_eps: return "NonPositiveEps";
    case Errc::type_mismatch: return "TypeMismatch";
    case Errc::overlapping_supports: return "OverlappingSupports";
    case Errc::precondition_ab: return "PreconditionAB";
    case Errc::identity_input: return "IdentityInput";
    case Errc::eps_too_large: return "EpsTooLarge";
    case Errc::nonzero_saf: return "NonzeroSaf";
    case Errc::not_balanced: return "NotBalanced";
    case Errc::type_too_large: return "TypeTooLarge";
    case Errc::bad_document: return "BadDocument";
  }
  return "UnknownError";
}

Rational make_rational(const Int& n, const Int& d) {
  if (d.is_zero()) fail(Errc::zero_denominator, to_string(Rational(n)) + "/0");
  // Division normalizes both the gcd and the sign of the denominator.
  return Rational(n) / Rational(d);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && a.sign() < 0) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && a.sign() > 0) ++q;
  return q;
}

Int rational_floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

Rational round_dyadic(const Rational& q, unsigned bits) {
  Int scale = Int(1) << bits;
  Int n = rational_floor(q * scale * 2 + 1);  // floor(2*q*scale + 1) = round half up of 2*q*scale... adjusted below
  n = floor_div(n, Int(2));
  return make_rational(n, scale);
}

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto digits = [&]() -> std::string {
    std::string out;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    if (out.empty()) fail(Errc::malformed_text, "expected digits in '" + std::string(text) + "'");
    return out;
  };
  skip_ws();
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
  skip_ws();
  Int num(digits());
  if (neg) num = -num;
  Int den(1);
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = Int(digits());
  }
  skip_ws();
  if (i != text.size()) fail(Errc::malformed_text, "trailing characters in '" + std::string(text) + "'");
  return make_rational(num, den);
}

}  // namespace iet
