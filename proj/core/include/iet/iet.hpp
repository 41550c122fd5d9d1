#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "iet/surd.hpp"

namespace iet {

/// Half-closed interval [lo, hi).
struct Interval {
  SurdReal lo;
  SurdReal hi;
  SurdReal width() const { return hi - lo; }
  bool contains(const SurdReal& x) const { return sign(x - lo) >= 0 && sign(x - hi) < 0; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Validates lo < hi.
Interval make_interval(SurdReal lo, SurdReal hi);

/// Exchanges the neighboring blocks [start, start+a) and [start+a, start+a+b),
/// the length-a block moving right, and fixes the rest of the base interval.
struct RotationSpec {
  SurdReal a;
  SurdReal b;
  SurdReal start;
  friend bool operator==(const RotationSpec&, const RotationSpec&) = default;
};

/// Interchanges the disjoint blocks [x, x+a) and [y, y+a) by translation
/// and fixes the rest of the base interval.  Always an involution.
struct SwapSpec {
  SurdReal a;
  SurdReal x;
  SurdReal y;
  friend bool operator==(const SwapSpec&, const SwapSpec&) = default;
};

/// Normalized so that x < y.
SwapSpec make_swap_spec(const SurdReal& a, const SurdReal& u, const SurdReal& v);

struct OrderResult {
  enum class Kind { finite, infinite, bound_exceeded };
  Kind kind;
  std::uint64_t value = 0;  // the order when finite, the bound when exceeded

  static OrderResult finite(std::uint64_t n) { return {Kind::finite, n}; }
  static OrderResult infinite() { return {Kind::infinite, 0}; }
  static OrderResult exceeded(std::uint64_t bound) { return {Kind::bound_exceeded, bound}; }
  bool is_finite() const { return kind == Kind::finite; }
  friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

inline constexpr std::uint64_t kDefaultOrderBound = 4096;

/// One block of a piecewise description: a length and the translation
/// applied on it.  Blocks are listed left to right and tile the base.
struct Piece {
  SurdReal length;
  SurdReal translation;
};

/// Interval exchange transformation in canonical (minimal) form: the unique
/// combinatorial description (lengths, perm) in which no two neighboring
/// blocks share a translation.  perm[i] is the 0-based left-to-right rank of
/// the image of block i.  Values are immutable; all operations are pure.
class Iet {
 public:
  /// Canonicalizes: merges neighboring equal-translation blocks.  Validates
  /// positive lengths, the exact length sum, and that perm is a bijection.
  Iet(const Interval& base, const std::vector<SurdReal>& lengths,
      const std::vector<std::size_t>& perm);

  static Iet identity(const Interval& base);

  /// Builds from explicit blocks (least general description).  The image
  /// blocks must tile the base exactly.
  static Iet from_pieces(const Interval& base, const std::vector<Piece>& pieces);

  const Interval& base() const { return base_; }
  std::size_t block_count() const { return lengths_.size(); }
  const std::vector<SurdReal>& lengths() const { return lengths_; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<SurdReal>& translations() const { return translations_; }
  /// Left endpoints of the canonical blocks (size block_count()).
  const std::vector<SurdReal>& block_starts() const { return starts_; }
  std::vector<Piece> pieces() const;

  bool is_identity() const { return lengths_.size() == 1 && translations_[0].is_zero(); }

  /// Index of the canonical block containing x; x must lie in the base.
  std::size_t block_of(const SurdReal& x) const;

  friend bool operator==(const Iet& f, const Iet& g) {
    return f.base_ == g.base_ && f.lengths_ == g.lengths_ && f.perm_ == g.perm_;
  }

 private:
  Iet() = default;
  void finish(std::vector<Piece> merged);

  Interval base_;
  std::vector<SurdReal> lengths_;
  std::vector<std::size_t> perm_;
  std::vector<SurdReal> starts_;
  std::vector<SurdReal> translations_;
};

SurdReal apply(const Iet& f, const SurdReal& x);

/// x -> f(g(x)); both maps must share the base interval.
Iet compose(const Iet& f, const Iet& g);
Iet invert(const Iet& f);

/// Maximal disjoint half-closed intervals of moved points, left to right.
std::vector<Interval> support(const Iet& f);

/// Infinite is detected through a nonzero SAF invariant; otherwise powers
/// are iterated up to max_iter.
OrderResult order(const Iet& f, std::uint64_t max_iter = kDefaultOrderBound);

Iet restricted_rotation(const Interval& base, const RotationSpec& spec);
Iet interval_swap(const Interval& base, const SwapSpec& spec);

}  // namespace iet
