#include <algorithm>
#include <map>
#include <utility>

#include "iet/error.hpp"
#include "iet/factor.hpp"

#include "check.hpp"

namespace iet {

namespace {

struct SurdPairLess {
  bool operator()(const std::pair<SurdReal, SurdReal>& p,
                  const std::pair<SurdReal, SurdReal>& q) const {
    auto c = p.first <=> q.first;
    if (c != 0) return c < 0;
    return p.second < q.second;
  }
};

using TypeCount = std::map<std::pair<SurdReal, SurdReal>, long, SurdPairLess>;

TypeCount count_types(const std::vector<RotationSpec>& specs) {
  TypeCount counts;
  for (const auto& r : specs) ++counts[{r.a, r.b}];
  return counts;
}

bool is_balanced(const TypeCount& counts) {
  for (const auto& [type, n] : counts) {
    if (type.first == type.second) continue;
    auto it = counts.find({type.second, type.first});
    if (it == counts.end() || it->second != n) return false;
  }
  return true;
}

// Ranks of the image blocks of an explicit description, without merging.
std::vector<std::size_t> perm_of_pieces(const Interval& base, const std::vector<SurdReal>& lengths,
                                        const std::vector<SurdReal>& translations) {
  const std::size_t k = lengths.size();
  std::vector<SurdReal> image(k);
  SurdReal pos = base.lo;
  for (std::size_t i = 0; i < k; ++i) {
    image[i] = pos + translations[i];
    pos += lengths[i];
  }
  std::vector<std::size_t> by_image(k);
  for (std::size_t i = 0; i < k; ++i) by_image[i] = i;
  std::sort(by_image.begin(), by_image.end(),
            [&](std::size_t i, std::size_t j) { return image[i] < image[j]; });
  std::vector<std::size_t> perm(k);
  for (std::size_t r = 0; r < k; ++r) perm[by_image[r]] = r;
  return perm;
}

bool open_overlap(const SurdReal& p, const SurdReal& q, const SurdReal& u, const SurdReal& v) {
  return sign(v - p) > 0 && sign(q - u) > 0;
}

}  // namespace

Factorization balanced_rotations_factorization(const Iet& f) {
  TensorQQ invariant = saf(f);
  if (!invariant.is_zero()) fail(Errc::nonzero_saf, "\n" + to_string(invariant));
  const Interval& base = f.base();
  if (f.is_identity()) {
    SurdReal quarter = Rational(1, 4) * base.width();
    RotationSpec h{quarter, quarter, base.lo};
    return {base, {h, h}, f};
  }

  // Subdivide every canonical block into pieces whose lengths form a
  // Q-independent set; rotation factors over that set are forced to be
  // balanced because their wedges are independent and sum to zero.
  Rebase rb = rebase_nonneg_integer(f.lengths());
  std::vector<SurdReal> ref_lengths, ref_translations;
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    for (std::size_t j = 0; j < rb.basis.size(); ++j) {
      for (Int c = rb.coords[i][j]; c.sign() > 0; --c) {
        ref_lengths.push_back(rb.basis[j]);
        ref_translations.push_back(f.translations()[i]);
      }
    }
  }
  std::vector<std::size_t> perm = perm_of_pieces(base, ref_lengths, ref_translations);
  std::vector<RotationSpec> specs = rotation_factors_of_description(base, ref_lengths, perm);
  detail::internal_check(is_balanced(count_types(specs)), "zero-SAF factorization came out unbalanced");
  Factorization out{base, {}, f};
  out.factors.assign(specs.begin(), specs.end());
  return out;
}

RotationReduction rotation_reduce_small(const RotationSpec& r, const Interval& base,
                                        const SurdReal& eps) {
  if (sign(eps) <= 0) fail(Errc::non_positive_eps, format_surd(eps));
  restricted_rotation(base, r);  // validate
  EuclidTrace trace = euclid_pairs(r.a, r.b, eps);
  const SurdReal& x = r.start;

  // One swap per subtractive step: f_i = f_{i+1} o g_{i+1}, where the next
  // rotation keeps the left end of the support.
  std::vector<SwapSpec> steps;
  for (std::size_t i = 0; i + 1 < trace.pairs.size(); ++i) {
    const auto& [ai, bi] = trace.pairs[i];
    if (ai > bi) steps.push_back(make_swap_spec(bi, x + (ai - bi), x + ai));
    else steps.push_back(make_swap_spec(ai, x, x + bi));
  }

  RotationReduction out;
  const auto& [an, bn] = trace.pairs.back();
  if (trace.terminal == EuclidTrace::Terminal::sum_below_eps) {
    out.head = {an, bn, x};
  } else {
    // Equal pair: the remaining rotation is itself a swap; restart from a
    // default rotation of equal type, which is its own inverse.
    SurdReal a0 = Rational(1, 4) * min(eps, base.width());
    out.head = {a0, a0, base.lo};
    out.tail.push_back(make_swap_spec(a0, base.lo, base.lo + a0));
    out.tail.push_back(make_swap_spec(an, x, x + an));
  }
  out.tail.insert(out.tail.end(), steps.rbegin(), steps.rend());
  return out;
}

Factorization rotation_pair_to_swaps(const RotationSpec& r1, const RotationSpec& r2,
                                     const Interval& base) {
  if (!(r1.a == r2.a && r1.b == r2.b)) fail(Errc::type_mismatch, "rotations have different types");
  Iet f1 = restricted_rotation(base, r1);
  Iet f2 = restricted_rotation(base, r2);
  Factorization out{base, {}, compose(invert(f1), f2)};
  if (r1.start == r2.start) return out;  // identical rotations: empty product

  SurdReal ab = r1.a + r1.b;
  SurdReal width = base.width();
  if (sign(Rational(5) * ab - width) <= 0) {
    // A fifth of the base has interior disjoint from both supports; route
    // both rotations through a copy placed there.
    SurdReal fifth = Rational(1, 5) * width;
    SurdReal s1_end = r1.start + ab, s2_end = r2.start + ab;
    SurdReal free_lo;
    bool found = false;
    for (int j = 0; j < 5 && !found; ++j) {
      SurdReal t_lo = base.lo + Rational(j) * fifth;
      SurdReal t_hi = t_lo + fifth;
      if (!open_overlap(t_lo, t_hi, r1.start, s1_end) &&
          !open_overlap(t_lo, t_hi, r2.start, s2_end)) {
        free_lo = t_lo;
        found = true;
      }
    }
    detail::internal_check(found, "no free fifth for a type fitting in width/5");
    RotationSpec f0{r1.a, r1.b, free_lo};
    Factorization left = disjoint_rotations_to_swaps(r1, f0, base);
    Factorization right = disjoint_rotations_to_swaps(f0, r2, base);
    out.factors = std::move(left.factors);
    out.factors.insert(out.factors.end(), right.factors.begin(), right.factors.end());
    return out;
  }

  SurdReal eps = Rational(1, 5) * width;
  RotationReduction red1 = rotation_reduce_small(r1, base, eps);
  RotationReduction red2 = rotation_reduce_small(r2, base, eps);
  Factorization mid = rotation_pair_to_swaps(red1.head, red2.head, base);
  for (auto it = red1.tail.rbegin(); it != red1.tail.rend(); ++it) out.factors.push_back(*it);
  out.factors.insert(out.factors.end(), mid.factors.begin(), mid.factors.end());
  for (const auto& s : red2.tail) out.factors.push_back(s);
  return out;
}

Factorization rotation_commutator_to_swaps(const RotationSpec& r, const Iet& g,
                                           const Interval& base) {
  if (!(g.base() == base)) fail(Errc::base_mismatch, "different base intervals");
  Iet f = restricted_rotation(base, r);
  Iet ginv = invert(g);
  Factorization out{base, {}, compose(compose(invert(f), ginv), compose(f, g))};
  if (out.target.is_identity()) return out;  // f and g commute: empty product

  // When g^-1 translates the whole support rigidly, the conjugate is a
  // rotation of the same type and the same-type pair machinery applies.
  SurdReal support_end = r.start + r.a + r.b;
  std::size_t blk = ginv.block_of(r.start);
  SurdReal blk_end = ginv.block_starts()[blk] + ginv.lengths()[blk];
  if (sign(blk_end - support_end) >= 0) {
    RotationSpec conj{r.a, r.b, r.start + ginv.translations()[blk]};
    Factorization inner = rotation_pair_to_swaps(r, conj, base);
    out.factors = std::move(inner.factors);
    return out;
  }

  // General case: reduce f below the widest block of g^-1, place a copy f1
  // inside that block, and expand
  //   f^-1 g^-1 f g = G0^-1 (f0^-1 f1) (f1^-1 g^-1 f1 g) g^-1 (f1^-1 f0) G0 g,
  // re-expressing the g-conjugated swaps through their order-2 form.
  std::size_t widest = 0;
  for (std::size_t i = 1; i < ginv.block_count(); ++i) {
    if (ginv.lengths()[i] > ginv.lengths()[widest]) widest = i;
  }
  RotationReduction red = rotation_reduce_small(r, base, ginv.lengths()[widest]);
  RotationSpec f1{red.head.a, red.head.b, ginv.block_starts()[widest]};

  Factorization k1 = rotation_commutator_to_swaps(f1, g, base);
  Factorization p = rotation_pair_to_swaps(red.head, f1, base);

  // g2 = (f1^-1 f0) G0; its factors are the reversed p list (swaps are
  // involutions) followed by the reduction tail.
  std::vector<SwapSpec> g2_swaps;
  for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it) {
    g2_swaps.push_back(std::get<SwapSpec>(*it));
  }
  g2_swaps.insert(g2_swaps.end(), red.tail.begin(), red.tail.end());

  for (auto it = red.tail.rbegin(); it != red.tail.rend(); ++it) out.factors.push_back(*it);
  out.factors.insert(out.factors.end(), p.factors.begin(), p.factors.end());
  out.factors.insert(out.factors.end(), k1.factors.begin(), k1.factors.end());
  for (const SwapSpec& h : g2_swaps) {
    Iet conj = compose(ginv, compose(interval_swap(base, h), g));
    if (conj.is_identity()) continue;
    Factorization sub = finite_order_to_swaps(conj, 4);
    out.factors.insert(out.factors.end(), sub.factors.begin(), sub.factors.end());
  }
  return out;
}

namespace {

std::vector<Factor> balanced_to_swaps_rec(std::vector<RotationSpec> specs, const Interval& base) {
  std::vector<Factor> out;
  while (!specs.empty()) {
    RotationSpec head = specs.front();
    if (head.a == head.b) {
      out.push_back(make_swap_spec(head.a, head.start, head.start + head.a));
      specs.erase(specs.begin());
      continue;
    }
    std::size_t k = 0;
    for (std::size_t i = 1; i < specs.size(); ++i) {
      if (specs[i].a == head.b && specs[i].b == head.a) { k = i; break; }
    }
    detail::internal_check(k != 0, "balanced product lost its matching (b, a) factor");

    // f = (f_1 f_k)(f_k^-1 g_1 f_k g_1^-1)(g_1 g_2) with g_1 the factors
    // strictly between, g_2 the remainder.
    Iet g1 = Iet::identity(base);
    for (std::size_t i = 1; i < k; ++i) g1 = compose(g1, restricted_rotation(base, specs[i]));

    Factorization part1 =
        rotation_pair_to_swaps({head.b, head.a, head.start}, specs[k], base);
    out.insert(out.end(), part1.factors.begin(), part1.factors.end());
    if (!g1.is_identity()) {
      Factorization part2 = rotation_commutator_to_swaps(specs[k], invert(g1), base);
      out.insert(out.end(), part2.factors.begin(), part2.factors.end());
    }
    specs.erase(specs.begin() + static_cast<std::ptrdiff_t>(k));
    specs.erase(specs.begin());
  }
  return out;
}

}  // namespace

Factorization balanced_to_swaps(const std::vector<RotationSpec>& rotations, const Interval& base) {
  if (!is_balanced(count_types(rotations))) {
    fail(Errc::not_balanced, "type counts (a, b) and (b, a) differ");
  }
  Iet target = Iet::identity(base);
  for (const auto& r : rotations) target = compose(target, restricted_rotation(base, r));
  Factorization out{base, balanced_to_swaps_rec(rotations, base), std::move(target)};
  return out;
}

Factorization zero_saf_to_swaps(const Iet& f) {
  Factorization balanced = balanced_rotations_factorization(f);  // rejects nonzero SAF
  std::vector<RotationSpec> specs;
  specs.reserve(balanced.factors.size());
  for (const auto& factor : balanced.factors) specs.push_back(std::get<RotationSpec>(factor));
  Factorization swaps = balanced_to_swaps(specs, f.base());
  return {f.base(), std::move(swaps.factors), f};
}

Factorization zero_saf_to_commutators(const Iet& f) {
  Factorization swaps = zero_saf_to_swaps(f);
  Factorization out{f.base(), {}, f};
  out.factors.reserve(swaps.factors.size());
  for (const auto& factor : swaps.factors) {
    SwapCommutator sc = swap_as_commutator(std::get<SwapSpec>(factor), f.base());
    out.factors.push_back(CommutatorFactor{std::move(sc.g3), std::move(sc.g)});
  }
  return out;
}

}  // namespace iet
