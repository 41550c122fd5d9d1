#include <cstdint>

#include "iet/error.hpp"
#include "iet/factor.hpp"

#include "check.hpp"

namespace iet {

namespace {

bool open_overlap(const SurdReal& p, const SurdReal& q, const SurdReal& u, const SurdReal& v) {
  return sign(v - p) > 0 && sign(q - u) > 0;
}

// Smallest n >= 1 with n * eps >= a (exponential then binary search).
std::uint64_t ceil_ratio(const SurdReal& a, const SurdReal& eps) {
  std::uint64_t hi = 1;
  while (sign(Rational(Int(hi)) * eps - a) < 0) hi *= 2;
  std::uint64_t lo = hi / 2 + 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (sign(Rational(Int(mid)) * eps - a) >= 0) hi = mid;
    else lo = mid + 1;
  }
  return hi;
}

}  // namespace

Factorization refine_swap(const SwapSpec& s, const SurdReal& eps, const Interval& base) {
  if (sign(eps) <= 0) fail(Errc::non_positive_eps, format_surd(eps));
  Iet target = interval_swap(base, s);
  Factorization out{base, {}, std::move(target)};
  if (sign(s.a - eps) < 0) {
    out.factors = {make_swap_spec(s.a, s.x, s.y)};
    return out;
  }
  std::uint64_t n = ceil_ratio(s.a, eps) + 1;
  Rational inv_n = make_rational(Int(1), Int(n));
  SurdReal piece = inv_n * s.a;
  const SurdReal& x = min(s.x, s.y);
  const SurdReal& y = max(s.x, s.y);
  SurdReal off;
  for (std::uint64_t i = 0; i < n; ++i) {
    out.factors.push_back(make_swap_spec(piece, x + off, y + off));
    off += piece;
  }
  return out;
}

ConjugacyCertificate conjugate_same_type_small(const SwapSpec& s1, const SwapSpec& s2,
                                               const Interval& base) {
  if (!(s1.a == s2.a)) fail(Errc::type_mismatch, format_surd(s1.a) + " vs " + format_surd(s2.a));
  interval_swap(base, s1);
  interval_swap(base, s2);
  SurdReal width = base.width();
  if (sign(Rational(10) * s1.a - width) >= 0) {
    fail(Errc::type_too_large, "type must be below a tenth of the base width");
  }

  // Each support block meets at most two tenths, so at least two tenths are
  // free; the middle swap lives in the leftmost two.
  const SurdReal& a = s1.a;
  SurdReal tenth = Rational(1, 10) * width;
  std::vector<SurdReal> starts{s1.x, s1.y, s2.x, s2.y};
  std::vector<SurdReal> free_los;
  for (int j = 0; j < 10 && free_los.size() < 2; ++j) {
    SurdReal t_lo = base.lo + Rational(j) * tenth;
    SurdReal t_hi = t_lo + tenth;
    bool busy = false;
    for (const auto& u : starts) {
      if (open_overlap(t_lo, t_hi, u, u + a)) { busy = true; break; }
    }
    if (!busy) free_los.push_back(t_lo);
  }
  detail::internal_check(free_los.size() == 2, "fewer than two free tenths");

  SwapSpec middle = make_swap_spec(a, free_los[0], free_los[1]);
  Iet g1 = conjugator_for_disjoint_swaps(middle, s1, base);  // s1 = g1 f0 g1
  Iet g2 = conjugator_for_disjoint_swaps(s2, middle, base);  // f0 = g2 s2 g2
  Iet g = compose(g2, g1);
  Iet expected = compose(invert(g), compose(interval_swap(base, s2), g));
  detail::internal_check(expected == interval_swap(base, s1), "conjugacy identity failed");
  return {std::move(g), std::move(g1), std::move(g2), std::move(middle)};
}

SimplicityCertificate simplicity_witness(const Iet& f, const SurdReal& eps) {
  if (f.is_identity()) fail(Errc::identity_input, "witness needs a nontrivial element");
  TensorQQ invariant = saf(f);
  if (!invariant.is_zero()) fail(Errc::nonzero_saf, "\n" + to_string(invariant));
  const Interval& base = f.base();
  SurdReal bound = min(small_swap_max_eps(f), Rational(1, 10) * base.width());
  if (sign(eps) <= 0) fail(Errc::non_positive_eps, format_surd(eps));
  if (sign(eps - bound) >= 0) {
    fail(Errc::eps_too_large, "eps must be below " + format_surd(bound));
  }

  SmallSwap small = small_swap_from_nontrivial(f, eps);
  SwapCommutator m1 = swap_as_commutator(small.g1, base);
  SwapCommutator m2 = swap_as_commutator(small.g2, base);
  SwapSpec sample = make_swap_spec(eps, base.lo, base.lo + eps);
  ConjugacyCertificate conj = conjugate_same_type_small(sample, small.result, base);
  SimplicityCertificate cert{std::move(small), std::move(m1), std::move(m2), std::move(sample),
                             std::move(conj)};
  detail::internal_check(verify_simplicity(cert, f), "witness chain failed recomposition");
  return cert;
}

bool verify_simplicity(const SimplicityCertificate& cert, const Iet& f) {
  const Interval& base = f.base();
  Iet g1 = interval_swap(base, cert.small.g1);
  Iet g2 = interval_swap(base, cert.small.g2);
  Iet small = interval_swap(base, cert.small.result);

  Iet chain = compose(g2, compose(invert(f), compose(g1, compose(f, compose(g1, g2)))));
  if (!(chain == small)) return false;

  auto member = [&](const SwapSpec& s, const SwapCommutator& m) {
    Iet comm = compose(compose(invert(m.g3), invert(m.g)), compose(m.g3, m.g));
    return comm == interval_swap(base, s) && compose(m.g3, m.g3).is_identity() &&
           compose(m.g, m.g).is_identity();
  };
  if (!member(cert.small.g1, cert.g1_membership)) return false;
  if (!member(cert.small.g2, cert.g2_membership)) return false;

  const ConjugacyCertificate& conj = cert.conjugacy;
  Iet carried = compose(invert(conj.g), compose(small, conj.g));
  if (!(carried == interval_swap(base, cert.sample))) return false;
  if (!compose(conj.g1, conj.g1).is_identity()) return false;
  if (!compose(conj.g2, conj.g2).is_identity()) return false;
  return true;
}

}  // namespace iet
