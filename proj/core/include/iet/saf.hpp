#pragma once

#include <utility>
#include <vector>

#include "iet/iet.hpp"
#include "iet/tensor.hpp"

namespace iet {

/// SAF invariant: sum of length_i (x) translation_i over any piecewise
/// description.  The value does not depend on the description.
TensorQQ saf_of_pieces(const std::vector<Piece>& pieces);
TensorQQ saf(const Iet& f);

/// Subtractive reduction trace of Lemma-3.4 shape.  Each pair follows from
/// the previous one by subtracting the smaller entry from the larger; the
/// trace stops as soon as a_i + b_i < eps (checked first) or a_i = b_i.
struct EuclidTrace {
  enum class Terminal { sum_below_eps, equal_pair };
  std::vector<std::pair<SurdReal, SurdReal>> pairs;
  Terminal terminal;
};

EuclidTrace euclid_pairs(const SurdReal& a, const SurdReal& b, const SurdReal& eps);

/// Positive pair (a0, b0) with a0 + b0 < eps and wedge(a0, b0) = wedge(a, b).
/// Inputs of either sign are accepted; a zero wedge yields (eps/4, eps/4).
std::pair<SurdReal, SurdReal> shrink_wedge(const SurdReal& a, const SurdReal& b,
                                           const SurdReal& eps);

/// An IET on base whose SAF invariant equals the sum of wedge(a_i, b_i):
/// each wedge is shrunk below the base width and realized as a restricted
/// rotation at the left end of the base.
Iet realize_saf(const Interval& base,
                const std::vector<std::pair<SurdReal, SurdReal>>& wedges);

}  // namespace iet
