#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "iet/factor.hpp"

namespace iet::gen {

/// Deterministic source for the verify runner and the test suites; every
/// draw goes through next() so a fixed seed reproduces the case sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(unsigned percent) { return below(100) < percent; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

/// Atom pool: positive single-term surds q*sqrt(d) with d drawn from
/// {1}, {1,2} or {1,2,3} (basis_kind 0..2) and small rational q.
std::vector<SurdReal> random_atoms(Rng& rng, int basis_kind, std::size_t count);

/// Random IETs sharing the base [0, sum of pool): each map's lengths are
/// sums over a random partition of the pool, so exact totals match.
std::vector<Iet> random_tuple(Rng& rng, const std::vector<SurdReal>& pool, std::size_t max_k,
                              std::size_t count);
Iet random_iet(Rng& rng, const std::vector<SurdReal>& pool, std::size_t max_k);

/// Small zero-SAF element: a commutator of two random maps, optionally
/// composed with swaps; never the identity.
Iet random_zero_saf(Rng& rng, int basis_kind);

/// Nonzero SAF by construction: a rotation of Q-independent type composed
/// with a swap or the identity (needs basis_kind >= 1).
Iet random_nonzero_saf(Rng& rng, int basis_kind);

/// Nontrivial zero-SAF product of swaps on a 16-cell grid, so every
/// canonical length and translation is at least width/16.
Iet random_grid_zero_saf(Rng& rng);

/// Exact random point inside the base of f (a rational offset into a
/// random canonical block).
SurdReal random_point(Rng& rng, const Iet& f);

/// Random positive value built from 1..3 atoms.
SurdReal random_positive(Rng& rng, int basis_kind);

}  // namespace iet::gen
