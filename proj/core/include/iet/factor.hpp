#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "iet/iet.hpp"
#include "iet/saf.hpp"

namespace iet {

/// u^-1 v^-1 u v.
struct CommutatorFactor {
  Iet u;
  Iet v;
};

using Factor = std::variant<RotationSpec, SwapSpec, CommutatorFactor>;

Iet realize(const Interval& base, const Factor& factor);

/// Ordered factor list with its recomposition target.  Factors are written
/// in product order: the composition folds left to right, so the last factor
/// acts first, matching the usual product notation for transformations.
struct Factorization {
  Interval base;
  std::vector<Factor> factors;
  Iet target;

  Iet recompose() const;
  bool verify() const { return recompose() == target; }
};

/// Every IET is a product of restricted rotations; with at least two
/// exchanged intervals all factor types (a, b) draw both entries from the
/// canonical length set.  The identity yields a rotation and its inverse.
Factorization rotations_factorization(const Iet& f);

/// Same construction run on an explicit (not necessarily minimal)
/// description; factor types draw from that description's length set.
std::vector<RotationSpec> rotation_factors_of_description(
    const Interval& base, const std::vector<SurdReal>& lengths,
    const std::vector<std::size_t>& perm);

/// A finite-order IET is a product of interval swap maps: the partition
/// refined by the breakpoints of all powers is permuted blockwise, and each
/// cycle of k blocks contributes k-1 swaps.
Factorization finite_order_to_swaps(const Iet& f, std::uint64_t max_iter = kDefaultOrderBound);

/// swap = g3^-1 g^-1 g3 g with both g3 and g of order 2 (half-block swaps).
struct SwapCommutator {
  Iet g3;
  Iet g;
};
SwapCommutator swap_as_commutator(const SwapSpec& s, const Interval& base);

/// Order-2 conjugator g with swap(s2) = g swap(s1) g; the four blocks must
/// be pairwise disjoint and the types equal.
Iet conjugator_for_disjoint_swaps(const SwapSpec& s1, const SwapSpec& s2, const Interval& base);

/// rot(r1)^-1 rot(r2) as exactly three swaps of types a, b and a+b, for
/// same-type rotations with disjoint supports.
Factorization disjoint_rotations_to_swaps(const RotationSpec& r1, const RotationSpec& r2,
                                          const Interval& base);

/// For a rotation of type (a, b) with a > b: swaps g1, g2 of type b and the
/// rotation h of type (a-b, b) on the left part of the support, with
/// g1 o f = h and f o g2 = h exactly.
struct StepReduce {
  SwapSpec g1;
  RotationSpec h;
  SwapSpec g2;
};
StepReduce rotation_step_reduce(const RotationSpec& r, const Interval& base);

/// Largest admissible eps for small_swap_from_nontrivial: min of the width
/// and the translation magnitude of the leftmost moved canonical block.
SurdReal small_swap_max_eps(const Iet& f);

/// Swaps g1, g2 of type eps/2 such that g2 f^-1 g1 f g1 g2 is the interval
/// swap of type eps interchanging [x, x+eps) and [x+t, x+t+eps), where the
/// leftmost moved block [x, y) of f is translated by t.  Requires
/// 0 < eps < small_swap_max_eps(f).
struct SmallSwap {
  SwapSpec g1;
  SwapSpec g2;
  SwapSpec result;
};
SmallSwap small_swap_from_nontrivial(const Iet& f, const SurdReal& eps);

/// Positive basis independent over Q expressing every input as a nonnegative
/// integer combination: coords[i] are the coefficients of lengths[i].
struct Rebase {
  std::vector<SurdReal> basis;
  std::vector<std::vector<Int>> coords;
};
Rebase rebase_nonneg_integer(const std::vector<SurdReal>& lengths);

/// For zero-SAF input: a product of restricted rotations in which types
/// (a, b) and (b, a) occur equally often.  Blocks are first subdivided into
/// pieces with lengths in a Q-independent basis via rebase_nonneg_integer.
Factorization balanced_rotations_factorization(const Iet& f);

/// rot(r) = rot(head) o (tail product), every tail factor a swap and
/// head type summing below eps; follows the subtractive trace of
/// euclid_pairs, one swap per step.  An equal-pair ending falls back to a
/// default rotation of type (a0, a0) with a0 = min(eps, width)/4 at the
/// left end of the base.
struct RotationReduction {
  RotationSpec head;
  std::vector<SwapSpec> tail;
};
RotationReduction rotation_reduce_small(const RotationSpec& r, const Interval& base,
                                        const SurdReal& eps);

/// rot(r1)^-1 rot(r2) as swaps for any same-type pair: routed through a
/// free fifth of the base when a+b <= width/5, otherwise both rotations are
/// reduced below width/5 first.
Factorization rotation_pair_to_swaps(const RotationSpec& r1, const RotationSpec& r2,
                                     const Interval& base);

/// The commutator rot(r)^-1 g^-1 rot(r) g as swaps.
Factorization rotation_commutator_to_swaps(const RotationSpec& r, const Iet& g,
                                           const Interval& base);

/// A balanced product of restricted rotations as swaps (strong induction on
/// the factor count).
Factorization balanced_to_swaps(const std::vector<RotationSpec>& rotations, const Interval& base);

/// Theorem-1 pipelines for the zero-SAF subgroup.
Factorization zero_saf_to_swaps(const Iet& f);
Factorization zero_saf_to_commutators(const Iet& f);

/// swap(s) as N = ceil(a/eps)+1 swaps of type a/N < eps (or [s] itself when
/// a < eps already).
Factorization refine_swap(const SwapSpec& s, const SurdReal& eps, const Interval& base);

/// Conjugacy of same-type swaps with type below width/10: g = g2 o g1 with
/// swap(s1) = g^-1 swap(s2) g, both conjugator halves of order 2, routed
/// through a swap `middle` placed in two free tenths of the base.
struct ConjugacyCertificate {
  Iet g;
  Iet g1;
  Iet g2;
  SwapSpec middle;
};
ConjugacyCertificate conjugate_same_type_small(const SwapSpec& s1, const SwapSpec& s2,
                                               const Interval& base);

/// Simplicity witness chain for a nontrivial zero-SAF f and
/// 0 < eps < min(small_swap_max_eps(f), width/10):
///   (i) a type-eps swap generated from f via small_swap_from_nontrivial,
///       with commutator certificates placing its two auxiliary swaps in
///       the commutator group;
///   (ii) a conjugacy certificate carrying a sample type-eps swap onto it.
/// Every identity is re-verified by exact recomposition before returning.
struct SimplicityCertificate {
  SmallSwap small;
  SwapCommutator g1_membership;
  SwapCommutator g2_membership;
  SwapSpec sample;
  ConjugacyCertificate conjugacy;
};
SimplicityCertificate simplicity_witness(const Iet& f, const SurdReal& eps);

/// Recomputes every identity in the chain.
bool verify_simplicity(const SimplicityCertificate& cert, const Iet& f);

}  // namespace iet
