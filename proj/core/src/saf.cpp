#include "iet/saf.hpp"

#include "iet/error.hpp"

namespace iet {

TensorQQ saf_of_pieces(const std::vector<Piece>& pieces) {
  TensorQQ out;
  for (const auto& p : pieces) out += tensor_product(p.length, p.translation);
  return out;
}

TensorQQ saf(const Iet& f) { return saf_of_pieces(f.pieces()); }

EuclidTrace euclid_pairs(const SurdReal& a, const SurdReal& b, const SurdReal& eps) {
  if (sign(a) <= 0 || sign(b) <= 0 || sign(eps) <= 0) {
    fail(Errc::non_positive_input, "euclid_pairs needs positive a, b, eps");
  }
  EuclidTrace trace;
  SurdReal x = a, y = b;
  for (;;) {
    trace.pairs.emplace_back(x, y);
    int c = sign(x + y - eps);
    if (c < 0) {
      trace.terminal = EuclidTrace::Terminal::sum_below_eps;
      return trace;
    }
    int d = sign(x - y);
    if (d == 0) {
      trace.terminal = EuclidTrace::Terminal::equal_pair;
      return trace;
    }
    if (d > 0) x -= y; else y -= x;
  }
}

std::pair<SurdReal, SurdReal> shrink_wedge(const SurdReal& a, const SurdReal& b,
                                           const SurdReal& eps) {
  if (sign(eps) <= 0) fail(Errc::non_positive_eps, format_surd(eps));
  if (wedge(a, b).is_zero()) {
    SurdReal c = Rational(1, 4) * eps;
    return {c, c};
  }
  // (-a)^(-b) = a^b and (-a)^b = b^a, so the wedge of the positive pair
  // below equals the original one.
  SurdReal u = a, v = b;
  int sa = sign(u), sb = sign(v);
  if (sa < 0 && sb < 0) {
    u = -u;
    v = -v;
  } else if (sa < 0) {
    SurdReal tmp = v;
    v = -u;
    u = tmp;
  } else if (sb < 0) {
    SurdReal tmp = u;
    u = -v;
    v = tmp;
  }
  EuclidTrace trace = euclid_pairs(u, v, eps);
  // A nonzero wedge means the ratio is irrational, so the equal-pair stop
  // is unreachable and the trace ends below eps.
  return trace.pairs.back();
}

Iet realize_saf(const Interval& base,
                const std::vector<std::pair<SurdReal, SurdReal>>& wedges) {
  Iet out = Iet::identity(base);
  SurdReal width = base.width();
  for (const auto& [a, b] : wedges) {
    auto [a0, b0] = shrink_wedge(a, b, width);
    out = compose(out, restricted_rotation(base, {a0, b0, base.lo}));
  }
  return out;
}

}  // namespace iet
