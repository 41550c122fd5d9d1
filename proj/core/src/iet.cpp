#include "iet/iet.hpp"

#include <algorithm>
#include <numeric>

#include "iet/error.hpp"
#include "iet/saf.hpp"

namespace iet {

Interval make_interval(SurdReal lo, SurdReal hi) {
  if (sign(hi - lo) <= 0) fail(Errc::empty_interval, "[" + format_surd(lo) + ", " + format_surd(hi) + ")");
  return {std::move(lo), std::move(hi)};
}

SwapSpec make_swap_spec(const SurdReal& a, const SurdReal& u, const SurdReal& v) {
  return u < v ? SwapSpec{a, u, v} : SwapSpec{a, v, u};
}

void Iet::finish(std::vector<Piece> merged) {
  const std::size_t k = merged.size();
  lengths_.reserve(k);
  translations_.reserve(k);
  starts_.reserve(k);
  SurdReal pos = base_.lo;
  for (auto& p : merged) {
    starts_.push_back(pos);
    pos += p.length;
    lengths_.push_back(std::move(p.length));
    translations_.push_back(std::move(p.translation));
  }
  if (!(pos == base_.hi)) {
    fail(Errc::length_sum_mismatch,
         "lengths sum to " + format_surd(pos - base_.lo) + ", base width is " + format_surd(base_.width()));
  }

  // Rank the image blocks to recover the permutation, and verify they tile
  // the base exactly.
  std::vector<std::size_t> by_image(k);
  std::iota(by_image.begin(), by_image.end(), 0);
  std::vector<SurdReal> image_start(k);
  for (std::size_t i = 0; i < k; ++i) image_start[i] = starts_[i] + translations_[i];
  std::sort(by_image.begin(), by_image.end(),
            [&](std::size_t i, std::size_t j) { return image_start[i] < image_start[j]; });
  perm_.assign(k, 0);
  SurdReal expect = base_.lo;
  for (std::size_t r = 0; r < k; ++r) {
    std::size_t i = by_image[r];
    if (!(image_start[i] == expect)) {
      fail(Errc::invalid_permutation, "image blocks do not tile the base interval");
    }
    expect += lengths_[i];
    perm_[i] = r;
  }
}

Iet Iet::from_pieces(const Interval& base, const std::vector<Piece>& pieces) {
  Iet out;
  out.base_ = make_interval(base.lo, base.hi);
  std::vector<Piece> merged;
  merged.reserve(pieces.size());
  for (const auto& p : pieces) {
    if (sign(p.length) <= 0) fail(Errc::non_positive_length, format_surd(p.length));
    if (!merged.empty() && merged.back().translation == p.translation) {
      merged.back().length += p.length;
    } else {
      merged.push_back(p);
    }
  }
  if (merged.empty()) fail(Errc::length_sum_mismatch, "no blocks");
  out.finish(std::move(merged));
  return out;
}

Iet::Iet(const Interval& base, const std::vector<SurdReal>& lengths,
         const std::vector<std::size_t>& perm) {
  const std::size_t k = lengths.size();
  if (k == 0) fail(Errc::length_sum_mismatch, "no blocks");
  if (perm.size() != k) fail(Errc::invalid_permutation, "perm size does not match lengths");
  std::vector<bool> seen(k, false);
  for (std::size_t r : perm) {
    if (r >= k || seen[r]) fail(Errc::invalid_permutation, "perm is not a bijection");
    seen[r] = true;
  }
  for (const auto& len : lengths) {
    if (sign(len) <= 0) fail(Errc::non_positive_length, format_surd(len));
  }

  // Translation of block i: its image starts after every block of smaller
  // image rank.
  std::vector<SurdReal> image_starts(k);
  {
    std::vector<const SurdReal*> len_at_rank(k);
    for (std::size_t i = 0; i < k; ++i) len_at_rank[perm[i]] = &lengths[i];
    SurdReal pos = base.lo;
    std::vector<SurdReal> rank_start(k);
    for (std::size_t r = 0; r < k; ++r) {
      rank_start[r] = pos;
      pos += *len_at_rank[r];
    }
    for (std::size_t i = 0; i < k; ++i) image_starts[i] = rank_start[perm[i]];
  }

  std::vector<Piece> ps;
  ps.reserve(k);
  SurdReal pos = base.lo;
  for (std::size_t i = 0; i < k; ++i) {
    ps.push_back({lengths[i], image_starts[i] - pos});
    pos += lengths[i];
  }
  *this = from_pieces(base, ps);
}

Iet Iet::identity(const Interval& base) {
  return from_pieces(base, {{base.width(), SurdReal()}});
}

std::vector<Piece> Iet::pieces() const {
  std::vector<Piece> out;
  out.reserve(lengths_.size());
  for (std::size_t i = 0; i < lengths_.size(); ++i) out.push_back({lengths_[i], translations_[i]});
  return out;
}

std::size_t Iet::block_of(const SurdReal& x) const {
  if (!base_.contains(x)) {
    fail(Errc::point_outside_domain, format_surd(x) + " outside " + format_surd(base_.lo) + ".." + format_surd(base_.hi));
  }
  auto it = std::upper_bound(starts_.begin(), starts_.end(), x,
                             [](const SurdReal& a, const SurdReal& b) { return a < b; });
  return static_cast<std::size_t>(it - starts_.begin()) - 1;
}

SurdReal apply(const Iet& f, const SurdReal& x) {
  return x + f.translations()[f.block_of(x)];
}

Iet compose(const Iet& f, const Iet& g) {
  if (!(f.base() == g.base())) fail(Errc::base_mismatch, "different base intervals");
  const Interval& base = f.base();

  // Cut points: g's breakpoints plus the g-preimages of f's breakpoints.
  std::vector<SurdReal> cuts = g.block_starts();
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    const SurdReal& u = g.block_starts()[i];
    SurdReal v = u + g.lengths()[i];
    const SurdReal& t = g.translations()[i];
    for (const SurdReal& b : f.block_starts()) {
      if (u + t < b && b < v + t) cuts.push_back(b - t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Piece> ps;
  ps.reserve(cuts.size());
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const SurdReal& x = cuts[j];
    const SurdReal& end = (j + 1 < cuts.size()) ? cuts[j + 1] : base.hi;
    const SurdReal& tg = g.translations()[g.block_of(x)];
    SurdReal mid = x + tg;
    const SurdReal& tf = f.translations()[f.block_of(mid)];
    ps.push_back({end - x, tg + tf});
  }
  return Iet::from_pieces(base, ps);
}

Iet invert(const Iet& f) {
  const std::size_t k = f.block_count();
  std::vector<std::size_t> by_image(k);
  for (std::size_t i = 0; i < k; ++i) by_image[f.perm()[i]] = i;
  std::vector<Piece> ps;
  ps.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    std::size_t i = by_image[r];
    ps.push_back({f.lengths()[i], -f.translations()[i]});
  }
  return Iet::from_pieces(f.base(), ps);
}

std::vector<Interval> support(const Iet& f) {
  std::vector<Interval> out;
  const std::size_t k = f.block_count();
  for (std::size_t i = 0; i < k;) {
    if (f.translations()[i].is_zero()) { ++i; continue; }
    std::size_t j = i;
    while (j + 1 < k && !f.translations()[j + 1].is_zero()) ++j;
    out.push_back({f.block_starts()[i], f.block_starts()[j] + f.lengths()[j]});
    i = j + 1;
  }
  return out;
}

OrderResult order(const Iet& f, std::uint64_t max_iter) {
  if (f.is_identity()) return OrderResult::finite(1);
  if (!saf(f).is_zero()) return OrderResult::infinite();
  Iet g = f;
  for (std::uint64_t n = 1; n <= max_iter; ++n) {
    if (g.is_identity()) return OrderResult::finite(n);
    if (n == max_iter) break;
    g = compose(g, f);
  }
  return OrderResult::exceeded(max_iter);
}

Iet restricted_rotation(const Interval& base, const RotationSpec& spec) {
  if (sign(spec.a) <= 0 || sign(spec.b) <= 0) {
    fail(Errc::non_positive_length, "rotation type (" + format_surd(spec.a) + ", " + format_surd(spec.b) + ")");
  }
  SurdReal end = spec.start + spec.a + spec.b;
  if (sign(spec.start - base.lo) < 0 || sign(end - base.hi) > 0) {
    fail(Errc::support_outside_base, "support [" + format_surd(spec.start) + ", " + format_surd(end) + ")");
  }
  std::vector<Piece> ps;
  if (sign(spec.start - base.lo) > 0) ps.push_back({spec.start - base.lo, SurdReal()});
  ps.push_back({spec.a, spec.b});
  ps.push_back({spec.b, -spec.a});
  if (sign(base.hi - end) > 0) ps.push_back({base.hi - end, SurdReal()});
  return Iet::from_pieces(base, ps);
}

Iet interval_swap(const Interval& base, const SwapSpec& spec) {
  if (sign(spec.a) <= 0) fail(Errc::non_positive_length, "swap type " + format_surd(spec.a));
  const SurdReal& x = min(spec.x, spec.y);
  const SurdReal& y = max(spec.x, spec.y);
  if (sign(y - x - spec.a) < 0) {
    fail(Errc::overlapping_blocks, "blocks at " + format_surd(x) + " and " + format_surd(y) +
                                       " of length " + format_surd(spec.a));
  }
  if (sign(x - base.lo) < 0 || sign(y + spec.a - base.hi) > 0) {
    fail(Errc::support_outside_base, "blocks outside the base interval");
  }
  SurdReal t = y - x;
  std::vector<Piece> ps;
  if (sign(x - base.lo) > 0) ps.push_back({x - base.lo, SurdReal()});
  ps.push_back({spec.a, t});
  SurdReal gap = y - (x + spec.a);
  if (sign(gap) > 0) ps.push_back({gap, SurdReal()});
  ps.push_back({spec.a, -t});
  SurdReal after = base.hi - (y + spec.a);
  if (sign(after) > 0) ps.push_back({after, SurdReal()});
  return Iet::from_pieces(base, ps);
}

}  // namespace iet
