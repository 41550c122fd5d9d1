#include "iet/surd.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "iet/error.hpp"

namespace iet {

std::pair<std::uint64_t, std::uint64_t> squarefree_decompose(std::uint64_t n) {
  std::uint64_t k = 1, d = 1, m = n;
  for (std::uint64_t p = 2; static_cast<unsigned __int128>(p) * p * p <= m; ++p) {
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) { m /= p; ++e; }
    for (unsigned j = 0; j < e / 2; ++j) k *= p;
    if (e % 2) d *= p;
  }
  if (m > 1) {
    // The cofactor has at most two prime factors: a perfect square goes
    // into k, anything else is squarefree.
    auto r = static_cast<std::uint64_t>(sqrt(Int(m)));
    if (r * r == m) k *= r;
    else d *= m;
  }
  return {k, d};
}

SurdReal::SurdReal(const Rational& q) {
  if (!q.is_zero()) terms_[1] = q;
}

SurdReal SurdReal::sqrt_of(std::uint64_t n) { return term(Rational(1), n); }

SurdReal SurdReal::term(const Rational& coeff, std::uint64_t n) {
  SurdReal out;
  if (n == 0 || coeff.is_zero()) return out;
  auto [k, d] = squarefree_decompose(n);
  out.terms_[d] = coeff * Rational(Int(k));
  return out;
}

bool SurdReal::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdReal::rational_part() const { return coeff(1); }

Rational SurdReal::coeff(std::uint64_t d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SurdReal::add_term(std::uint64_t d, const Rational& q) {
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SurdReal& SurdReal::operator+=(const SurdReal& rhs) {
  for (const auto& [d, q] : rhs.terms_) add_term(d, q);
  return *this;
}

SurdReal& SurdReal::operator-=(const SurdReal& rhs) {
  for (const auto& [d, q] : rhs.terms_) add_term(d, -q);
  return *this;
}

SurdReal SurdReal::operator-() const {
  SurdReal out;
  for (const auto& [d, q] : terms_) out.terms_.emplace(d, -q);
  return out;
}

SurdReal operator*(const Rational& q, const SurdReal& x) {
  SurdReal out;
  if (q.is_zero()) return out;
  for (const auto& [d, c] : x.terms_) out.terms_.emplace(d, q * c);
  return out;
}

namespace {

// x * 2^bits lies in [lo, hi].
std::pair<Int, Int> enclose_scaled(const SurdReal& x, unsigned bits) {
  Int lo(0), hi(0);
  for (const auto& [d, q] : x.terms()) {
    const Int& n = numerator(q);
    const Int& m = denominator(q);
    if (d == 1) {
      Int t = n << bits;
      lo += floor_div(t, m);
      hi += ceil_div(t, m);
      continue;
    }
    Int s2 = Int(d) << (2 * bits);
    Int s = sqrt(s2);  // s <= sqrt(d)*2^bits < s+1
    if (n.sign() > 0) {
      lo += floor_div(n * s, m);
      hi += ceil_div(n * (s + 1), m);
    } else {
      lo += floor_div(n * (s + 1), m);
      hi += ceil_div(n * s, m);
    }
  }
  return {lo, hi};
}

}  // namespace

int sign(const SurdReal& x) {
  if (x.is_zero()) return 0;
  bool any_pos = false, any_neg = false;
  for (const auto& [d, q] : x.terms()) (q.sign() > 0 ? any_pos : any_neg) = true;
  if (!any_neg) return 1;
  if (!any_pos) return -1;
  // Mixed signs: refine the enclosure until it excludes zero.  A nonzero
  // Q-combination of independent surds is a fixed nonzero real, so this
  // terminates.
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = enclose_scaled(x, bits);
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
  }
}

SurdReal abs(const SurdReal& x) { return sign(x) < 0 ? -x : x; }

Rational approx(const SurdReal& x, unsigned bits) {
  for (unsigned b = bits + 2;; b *= 2) {
    auto [lo, hi] = enclose_scaled(x, b);
    // Need (hi - lo) / 2^(b+1) <= 2^-bits for the midpoint to be within range.
    if (hi - lo <= (Int(1) << (b - bits + 1))) {
      return make_rational(lo + hi, Int(1) << (b + 1));
    }
  }
}

namespace {

struct SurdParser {
  std::string_view text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < text.size() && text[i] == c) { ++i; return true; }
    return false;
  }
  [[noreturn]] void bail(const std::string& msg) {
    fail(Errc::malformed_text, msg + " in surd text '" + std::string(text) + "'");
  }
  Int digits() {
    skip_ws();
    std::string out;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    if (out.empty()) bail("expected digits");
    return Int(out);
  }
  bool at_sqrt() {
    skip_ws();
    return text.compare(i, 5, "sqrt(") == 0;
  }
  std::uint64_t sqrt_arg() {
    i += 5;
    Int n = digits();
    if (!eat(')')) bail("expected ')'");
    if (n > Int(UINT64_MAX)) bail("sqrt argument too large");
    return static_cast<std::uint64_t>(n);
  }
  Rational rat(bool neg) {
    Int num = digits();
    if (neg) num = -num;
    skip_ws();
    if (i < text.size() && text[i] == '/') {
      ++i;
      Int den = digits();
      return make_rational(num, den);
    }
    return Rational(num);
  }

  // term = rat | rat '*' 'sqrt(' uint ')' | 'sqrt(' uint ')'
  SurdReal term(bool neg) {
    if (at_sqrt()) {
      SurdReal t = SurdReal::sqrt_of(sqrt_arg());
      return neg ? -t : t;
    }
    Rational q = rat(neg);
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      if (!at_sqrt()) bail("expected sqrt(...) after '*'");
      return SurdReal::term(q, sqrt_arg());
    }
    return SurdReal(q);
  }

  SurdReal parse() {
    skip_ws();
    if (i == text.size()) bail("empty input");
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
    SurdReal out = term(neg);
    for (;;) {
      skip_ws();
      if (i == text.size()) return out;
      char c = text[i];
      if (c != '+' && c != '-') bail("expected '+' or '-'");
      ++i;
      out += term(c == '-');
    }
  }
};

void format_rat_abs(std::ostream& os, const Rational& q) {
  Int num = abs(numerator(q));
  os << num.str();
  if (denominator(q) != 1) os << "/" << denominator(q).str();
}

}  // namespace

SurdReal parse_surd(std::string_view text) { return SurdParser{text}.parse(); }

std::string format_surd(const SurdReal& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SurdReal& x) {
  if (x.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [d, q] : x.terms()) {
    bool neg = q.sign() < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (d == 1) {
      format_rat_abs(os, q);
      continue;
    }
    if (abs(numerator(q)) != 1 || denominator(q) != 1) {
      format_rat_abs(os, q);
      os << "*";
    }
    os << "sqrt(" << d << ")";
  }
  return os;
}

}  // namespace iet
