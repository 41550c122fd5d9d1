#include "gen.hpp"

#include "check_gen.hpp"

namespace iet::gen {

namespace {

Rational small_rational(Rng& rng) {
  static const Rational values[] = {Rational(1),     Rational(2),     Rational(1, 2),
                                    Rational(3, 2),  Rational(1, 3),  Rational(2, 3),
                                    Rational(3),     Rational(1, 4)};
  return values[rng.below(std::size(values))];
}

std::uint64_t pick_d(Rng& rng, int basis_kind) {
  static const std::uint64_t ds[] = {1, 2, 3};
  return ds[rng.below(static_cast<std::size_t>(basis_kind) + 1)];
}

}  // namespace

std::vector<SurdReal> random_atoms(Rng& rng, int basis_kind, std::size_t count) {
  std::vector<SurdReal> pool;
  pool.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    pool.push_back(SurdReal::term(small_rational(rng), pick_d(rng, basis_kind)));
  }
  return pool;
}

SurdReal random_positive(Rng& rng, int basis_kind) {
  std::size_t n = 1 + rng.below(3);
  SurdReal out;
  for (std::size_t i = 0; i < n; ++i) {
    out += SurdReal::term(small_rational(rng), pick_d(rng, basis_kind));
  }
  return out;
}

Iet random_iet(Rng& rng, const std::vector<SurdReal>& pool, std::size_t max_k) {
  SurdReal total;
  for (const auto& a : pool) total += a;
  Interval base = make_interval(SurdReal(), total);

  std::size_t k = 1 + rng.below(std::min(max_k, pool.size()));
  std::vector<std::size_t> group(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) group[i] = i < k ? i : rng.below(k);
  rng.shuffle(group);

  std::vector<SurdReal> lengths(k);
  for (std::size_t i = 0; i < pool.size(); ++i) lengths[group[i]] += pool[i];
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  rng.shuffle(perm);
  return Iet(base, lengths, perm);
}

std::vector<Iet> random_tuple(Rng& rng, const std::vector<SurdReal>& pool, std::size_t max_k,
                              std::size_t count) {
  std::vector<Iet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_iet(rng, pool, max_k));
  return out;
}

Iet random_zero_saf(Rng& rng, int basis_kind) {
  // Keep the length arithmetic tame: integer coefficients over at most one
  // irrational direction, so the rebase step stays near integer coordinates
  // and the rotation certificates stay small.
  std::uint64_t d = basis_kind == 0 ? 1 : pick_d(rng, basis_kind - 1) + 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<SurdReal> pool;
    for (int i = 0; i < 4; ++i) {
      pool.push_back(rng.chance(50) ? SurdReal(1) : SurdReal::sqrt_of(d));
    }
    Iet u = random_iet(rng, pool, 3);
    Iet v = random_iet(rng, pool, 3);
    Iet z = compose(compose(invert(u), invert(v)), compose(u, v));
    if (z.block_count() > 6) continue;  // keep the certificates small
    if (rng.chance(40)) {
      const SurdReal& a = pool[rng.below(pool.size())];
      SurdReal quarter = Rational(1, 4) * a;
      z = compose(z, interval_swap(z.base(), {quarter, z.base().lo, z.base().lo + quarter}));
    } else if (rng.chance(40)) {
      // A rotation whose type pair is Q-dependent has zero SAF; drawing both
      // entries from the pool keeps the lengths on the atom lattice.
      std::size_t i = rng.below(pool.size());
      std::size_t j = rng.below(pool.size());
      if (pool[i].terms().begin()->first == pool[j].terms().begin()->first) {
        z = compose(z, restricted_rotation(z.base(), {pool[i], pool[j], z.base().lo}));
      }
    }
    if (!z.is_identity()) return z;
  }
  // Commutators kept cancelling; a lone swap is always nontrivial.
  std::vector<SurdReal> pool = random_atoms(rng, basis_kind, 4);
  SurdReal total;
  for (const auto& a : pool) total += a;
  Interval base = make_interval(SurdReal(), total);
  SurdReal quarter = Rational(1, 4) * pool[0];
  return interval_swap(base, {quarter, base.lo, base.lo + quarter});
}

Iet random_nonzero_saf(Rng& rng, int basis_kind) {
  detail::gen_check(basis_kind >= 1, "nonzero SAF needs an irrational basis");
  std::vector<SurdReal> pool = random_atoms(rng, basis_kind, 4);
  // Force one rational and one irrational atom so their wedge is nonzero.
  pool[0] = SurdReal(small_rational(rng));
  pool[1] = SurdReal::term(small_rational(rng), pick_d(rng, basis_kind - 1) + 1);
  SurdReal total;
  for (const auto& a : pool) total += a;
  Interval base = make_interval(SurdReal(), total);
  Iet f = restricted_rotation(base, {pool[0], pool[1], base.lo});
  if (rng.chance(50)) {
    SurdReal quarter = Rational(1, 4) * pool[2];
    f = compose(f, interval_swap(base, {quarter, base.lo, base.lo + quarter}));
  }
  return f;
}

Iet random_grid_zero_saf(Rng& rng) {
  SurdReal cell = rng.chance(50) ? SurdReal(1) : SurdReal::sqrt_of(2);
  Interval base = make_interval(SurdReal(), Rational(16) * cell);
  for (int attempt = 0;; ++attempt) {
    Iet f = Iet::identity(base);
    std::size_t swaps = 2 + rng.below(2);
    for (std::size_t s = 0; s < swaps; ++s) {
      long m = rng.range(1, 2);
      long i = rng.range(0, 14 - 2 * m);
      long j = rng.range(i + m, 16 - m);
      SurdReal a = Rational(m) * cell;
      f = compose(f, interval_swap(base, {a, Rational(i) * cell, Rational(j) * cell}));
    }
    if (!f.is_identity()) return f;
    detail::gen_check(attempt < 64, "grid generator failed to produce a nontrivial map");
  }
}

SurdReal random_point(Rng& rng, const Iet& f) {
  std::size_t i = rng.below(f.block_count());
  Rational frac(rng.range(0, 7), 8);
  return f.block_starts()[i] + frac * f.lengths()[i];
}

}  // namespace iet::gen
