#include <algorithm>
#include <array>
#include <utility>

#include "iet/error.hpp"
#include "iet/factor.hpp"

#include "check.hpp"

namespace iet {

namespace {

RotationSpec default_rotation(const Interval& base) {
  SurdReal quarter = Rational(1, 4) * base.width();
  return {quarter, quarter, base.lo};
}

SwapSpec default_swap(const Interval& base) {
  SurdReal quarter = Rational(1, 4) * base.width();
  return {quarter, base.lo, base.lo + quarter};
}

// Expands perm into transpositions of neighboring positions, listed in
// product order (the last entry acts first): cycles first, then each
// transposition (n l) as the palindrome tau_n ... tau_{l-1} ... tau_n.
std::vector<std::size_t> adjacent_transpositions(const std::vector<std::size_t>& perm) {
  const std::size_t k = perm.size();
  std::vector<std::pair<std::size_t, std::size_t>> transpositions;
  std::vector<bool> visited(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (visited[i] || perm[i] == i) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !visited[j]; j = perm[j]) {
      visited[j] = true;
      cycle.push_back(j);
    }
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j) {
      transpositions.emplace_back(cycle[j], cycle[j + 1]);
    }
  }
  std::vector<std::size_t> taus;
  for (auto [u, v] : transpositions) {
    std::size_t n = std::min(u, v), l = std::max(u, v);
    for (std::size_t i = n; i + 1 < l; ++i) taus.push_back(i);
    taus.push_back(l - 1);
    for (std::size_t i = l - 1; i-- > n;) taus.push_back(i);
  }
  return taus;
}

}  // namespace

Iet realize(const Interval& base, const Factor& factor) {
  struct Visitor {
    const Interval& base;
    Iet operator()(const RotationSpec& r) const { return restricted_rotation(base, r); }
    Iet operator()(const SwapSpec& s) const { return interval_swap(base, s); }
    Iet operator()(const CommutatorFactor& c) const {
      return compose(compose(invert(c.u), invert(c.v)), compose(c.u, c.v));
    }
  };
  return std::visit(Visitor{base}, factor);
}

Iet Factorization::recompose() const {
  Iet out = Iet::identity(base);
  for (const Factor& f : factors) out = compose(out, realize(base, f));
  return out;
}

std::vector<RotationSpec> rotation_factors_of_description(
    const Interval& base, const std::vector<SurdReal>& lengths,
    const std::vector<std::size_t>& perm) {
  const std::size_t k = lengths.size();
  if (perm.size() != k) fail(Errc::invalid_permutation, "perm size does not match lengths");

  std::vector<std::size_t> taus = adjacent_transpositions(perm);
  if (taus.empty()) {
    RotationSpec h = default_rotation(base);
    return {h, h};
  }

  // Walk the suffix products right to left: before step j the array inv is
  // the inverse of sigma_{j+1}...sigma_m, so the permuted length vector of
  // the j-th factor is lengths[inv[...]].
  std::vector<std::size_t> inv(k);
  for (std::size_t i = 0; i < k; ++i) inv[i] = i;
  std::vector<RotationSpec> reversed;
  reversed.reserve(taus.size());
  for (std::size_t j = taus.size(); j-- > 0;) {
    std::size_t i = taus[j];
    SurdReal start = base.lo;
    for (std::size_t r = 0; r < i; ++r) start += lengths[inv[r]];
    reversed.push_back({lengths[inv[i]], lengths[inv[i + 1]], start});
    std::swap(inv[i], inv[i + 1]);
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

Factorization rotations_factorization(const Iet& f) {
  std::vector<RotationSpec> specs =
      rotation_factors_of_description(f.base(), f.lengths(), f.perm());
  Factorization out{f.base(), {}, f};
  out.factors.assign(specs.begin(), specs.end());
  return out;
}

Factorization finite_order_to_swaps(const Iet& f, std::uint64_t max_iter) {
  OrderResult ord = order(f, max_iter);
  if (ord.kind == OrderResult::Kind::infinite) {
    fail(Errc::not_finite_order, "nonzero SAF invariant");
  }
  if (ord.kind == OrderResult::Kind::bound_exceeded) {
    fail(Errc::bound_exceeded, "order not found within " + std::to_string(max_iter) + " iterations");
  }
  const Interval& base = f.base();
  Factorization out{base, {}, f};
  if (ord.value == 1) {
    SwapSpec h0 = default_swap(base);
    out.factors = {h0, h0};
    return out;
  }

  // Partition refined by the breakpoints of all powers; f permutes its
  // blocks by translation.
  std::vector<SurdReal> cuts{base.lo};
  Iet g = f;
  for (std::uint64_t e = 1; e < ord.value; ++e) {
    for (std::size_t i = 1; i < g.block_count(); ++i) cuts.push_back(g.block_starts()[i]);
    if (e + 1 < ord.value) g = compose(g, f);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const std::size_t m = cuts.size();
  auto block_len = [&](std::size_t j) {
    return (j + 1 < m ? cuts[j + 1] : base.hi) - cuts[j];
  };
  std::vector<std::size_t> next(m);
  for (std::size_t j = 0; j < m; ++j) {
    SurdReal y = apply(f, cuts[j]);
    auto it = std::lower_bound(cuts.begin(), cuts.end(), y);
    detail::internal_check(it != cuts.end() && *it == y, "power-refined block not mapped onto a block");
    std::size_t jj = static_cast<std::size_t>(it - cuts.begin());
    detail::internal_check(block_len(j) == block_len(jj), "cycle blocks differ in length");
    next[j] = jj;
  }

  std::vector<bool> visited(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    if (visited[j]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t c = j; !visited[c]; c = next[c]) {
      visited[c] = true;
      cycle.push_back(c);
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      out.factors.push_back(make_swap_spec(block_len(cycle[i]), cuts[cycle[i]], cuts[cycle[i + 1]]));
    }
  }
  return out;
}

SwapCommutator swap_as_commutator(const SwapSpec& s, const Interval& base) {
  interval_swap(base, s);  // validate
  SurdReal half = Rational(1, 2) * s.a;
  const SurdReal& x = min(s.x, s.y);
  const SurdReal& y = max(s.x, s.y);
  Iet g1 = interval_swap(base, {half, x, x + half});
  Iet g2 = interval_swap(base, {half, y, y + half});
  Iet g3 = interval_swap(base, {half, x, y});
  return {std::move(g3), compose(g1, g2)};
}

namespace {

void check_disjoint_blocks(const SurdReal& a, const std::vector<SurdReal>& starts) {
  for (std::size_t i = 0; i < starts.size(); ++i) {
    for (std::size_t j = i + 1; j < starts.size(); ++j) {
      if (sign(abs(starts[i] - starts[j]) - a) < 0) {
        fail(Errc::overlapping_supports,
             "blocks at " + format_surd(starts[i]) + " and " + format_surd(starts[j]) + " overlap");
      }
    }
  }
}

}  // namespace

Iet conjugator_for_disjoint_swaps(const SwapSpec& s1, const SwapSpec& s2, const Interval& base) {
  if (!(s1.a == s2.a)) {
    fail(Errc::type_mismatch, format_surd(s1.a) + " vs " + format_surd(s2.a));
  }
  check_disjoint_blocks(s1.a, {s1.x, s1.y, s2.x, s2.y});
  Iet g1 = interval_swap(base, make_swap_spec(s1.a, s1.x, s2.x));
  Iet g2 = interval_swap(base, make_swap_spec(s1.a, s1.y, s2.y));
  return compose(g1, g2);
}

Factorization disjoint_rotations_to_swaps(const RotationSpec& r1, const RotationSpec& r2,
                                          const Interval& base) {
  if (!(r1.a == r2.a && r1.b == r2.b)) {
    fail(Errc::type_mismatch, "rotations have different types");
  }
  Iet f1 = restricted_rotation(base, r1);
  Iet f2 = restricted_rotation(base, r2);
  SurdReal ab = r1.a + r1.b;
  if (sign(abs(r1.start - r2.start) - ab) < 0) {
    fail(Errc::overlapping_supports, "rotation supports overlap");
  }
  const SurdReal& x = r1.start;
  const SurdReal& y = r2.start;
  Factorization out{base, {}, compose(invert(f1), f2)};
  out.factors = {
      make_swap_spec(ab, x, y),                 // whole supports
      make_swap_spec(r1.b, x, y + r1.a),        // type b
      make_swap_spec(r1.a, x + r1.b, y),        // type a
  };
  return out;
}

StepReduce rotation_step_reduce(const RotationSpec& r, const Interval& base) {
  restricted_rotation(base, r);  // validate
  if (sign(r.a - r.b) <= 0) {
    fail(Errc::precondition_ab, "requires a > b, got (" + format_surd(r.a) + ", " + format_surd(r.b) + ")");
  }
  const SurdReal& x = r.start;
  StepReduce out;
  out.g1 = make_swap_spec(r.b, x, x + r.a);
  out.g2 = make_swap_spec(r.b, x + r.a - r.b, x + r.a);
  out.h = {r.a - r.b, r.b, x};
  return out;
}

namespace {

// Leftmost canonical block with nonzero translation: {start, length, t}.
std::array<SurdReal, 3> leftmost_moved_block(const Iet& f) {
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    if (!f.translations()[i].is_zero()) {
      return {f.block_starts()[i], f.lengths()[i], f.translations()[i]};
    }
  }
  fail(Errc::identity_input, "the identity moves no block");
}

}  // namespace

SurdReal small_swap_max_eps(const Iet& f) {
  auto [start, len, t] = leftmost_moved_block(f);
  return min(len, abs(t));
}

SmallSwap small_swap_from_nontrivial(const Iet& f, const SurdReal& eps) {
  auto [x, len, t] = leftmost_moved_block(f);
  if (sign(eps) <= 0) fail(Errc::non_positive_eps, format_surd(eps));
  SurdReal eps0 = min(len, abs(t));
  if (sign(eps - eps0) >= 0) {
    fail(Errc::eps_too_large, "eps must be below " + format_surd(eps0));
  }
  SurdReal half = Rational(1, 2) * eps;
  SmallSwap out;
  out.g1 = make_swap_spec(half, x + t, x + t + half);
  out.g2 = make_swap_spec(half, x + half, x + t);
  out.result = make_swap_spec(eps, x, x + t);
  return out;
}

}  // namespace iet
