#include "verify.hpp"

#include <functional>
#include <iostream>
#include <vector>

#include "document.hpp"
#include "gen.hpp"

#include "iet/error.hpp"

namespace iet::cli {

namespace {

struct Property {
  std::string name;
  std::size_t cases;
  // Returns true on success; on failure fills `reproducer`.
  std::function<bool(gen::Rng&, doc::json& reproducer)> run;
};

int run_properties(const std::string& suite, const std::vector<Property>& properties,
                   std::uint64_t seed) {
  std::size_t passed = 0;
  for (const Property& prop : properties) {
    gen::Rng rng(seed ^ std::hash<std::string>{}(prop.name));
    for (std::size_t i = 0; i < prop.cases; ++i) {
      doc::json reproducer;
      bool ok = false;
      std::string what;
      try {
        ok = prop.run(rng, reproducer);
      } catch (const std::exception& e) {
        what = e.what();
      }
      if (!ok) {
        std::cout << "suite " << suite << ": FAIL " << prop.name << " (case " << i << ")\n";
        if (!what.empty()) std::cerr << "exception: " << what << "\n";
        if (!reproducer.is_null()) std::cerr << "reproducer:\n" << reproducer.dump(2) << "\n";
        return 1;
      }
    }
    ++passed;
    std::cout << "suite " << suite << ": " << prop.name << " ok (" << prop.cases << " cases)\n";
  }
  std::cout << "suite " << suite << ": " << passed << "/" << properties.size()
            << " properties passed\n";
  return 0;
}

int basis_kind_for_case(gen::Rng& rng) { return static_cast<int>(rng.below(3)); }

doc::json pair_doc(const Iet& f, const Iet& g) {
  return doc::json{{"f", doc::iet_to_json(f)}, {"g", doc::iet_to_json(g)}};
}

int run_group_suite(std::uint64_t seed, std::size_t cases) {
  std::vector<Property> properties;
  properties.push_back(
      {"compose-associativity-identity-inverse", cases, [](gen::Rng& rng, doc::json& repro) {
         auto pool = gen::random_atoms(rng, basis_kind_for_case(rng), 6);
         auto maps = gen::random_tuple(rng, pool, 8, 3);
         const Iet &f = maps[0], &g = maps[1], &h = maps[2];
         Iet id = Iet::identity(f.base());
         bool ok = compose(compose(f, g), h) == compose(f, compose(g, h)) &&
                   compose(f, id) == f && compose(id, f) == f &&
                   compose(f, invert(f)).is_identity() && compose(invert(f), f).is_identity() &&
                   invert(invert(f)) == f &&
                   invert(compose(f, g)) == compose(invert(g), invert(f));
         if (!ok) repro = pair_doc(f, g);
         return ok;
       }});
  properties.push_back({"apply-compose-consistency", cases, [](gen::Rng& rng, doc::json& repro) {
                          auto pool = gen::random_atoms(rng, basis_kind_for_case(rng), 6);
                          auto maps = gen::random_tuple(rng, pool, 8, 2);
                          const Iet &f = maps[0], &g = maps[1];
                          for (int t = 0; t < 3; ++t) {
                            SurdReal x = gen::random_point(rng, g);
                            if (!(apply(compose(f, g), x) == apply(f, apply(g, x)))) {
                              repro = pair_doc(f, g);
                              repro["x"] = format_surd(x);
                              return false;
                            }
                          }
                          return true;
                        }});
  properties.push_back({"canonical-form-idempotent", cases, [](gen::Rng& rng, doc::json& repro) {
                          auto pool = gen::random_atoms(rng, basis_kind_for_case(rng), 6);
                          Iet f = gen::random_iet(rng, pool, 8);
                          // Rebuild from a random refinement of the canonical data.
                          std::vector<Piece> pieces;
                          for (const auto& p : f.pieces()) {
                            if (rng.chance(50)) {
                              Rational frac(rng.range(1, 7), 8);
                              pieces.push_back({frac * p.length, p.translation});
                              pieces.push_back({(Rational(1) - frac) * p.length, p.translation});
                            } else {
                              pieces.push_back(p);
                            }
                          }
                          Iet rebuilt = Iet::from_pieces(f.base(), pieces);
                          bool ok = rebuilt == f;
                          if (!ok) repro = doc::iet_to_json(f);
                          return ok;
                        }});
  return run_properties("group", properties, seed);
}

int run_saf_suite(std::uint64_t seed, std::size_t cases) {
  std::vector<Property> properties;
  properties.push_back({"saf-homomorphism", cases, [](gen::Rng& rng, doc::json& repro) {
                          auto pool = gen::random_atoms(rng, basis_kind_for_case(rng), 6);
                          auto maps = gen::random_tuple(rng, pool, 8, 2);
                          const Iet &f = maps[0], &g = maps[1];
                          bool ok = saf(compose(f, g)) == saf(f) + saf(g);
                          if (!ok) repro = pair_doc(f, g);
                          return ok;
                        }});
  properties.push_back({"saf-description-independence", cases, [](gen::Rng& rng, doc::json& repro) {
                          auto pool = gen::random_atoms(rng, basis_kind_for_case(rng), 6);
                          Iet f = gen::random_iet(rng, pool, 8);
                          TensorQQ expected = saf(f);
                          for (int t = 0; t < 3; ++t) {
                            std::vector<Piece> pieces;
                            for (const auto& p : f.pieces()) {
                              if (rng.chance(60)) {
                                Rational frac(rng.range(1, 7), 8);
                                pieces.push_back({frac * p.length, p.translation});
                                pieces.push_back({(Rational(1) - frac) * p.length, p.translation});
                              } else {
                                pieces.push_back(p);
                              }
                            }
                            if (!(saf_of_pieces(pieces) == expected)) {
                              repro = doc::iet_to_json(f);
                              return false;
                            }
                          }
                          return true;
                        }});
  properties.push_back({"saf-antisymmetry", cases, [](gen::Rng& rng, doc::json& repro) {
                          auto pool = gen::random_atoms(rng, basis_kind_for_case(rng), 6);
                          Iet f = gen::random_iet(rng, pool, 8);
                          TensorQQ t = saf(f);
                          for (const auto& [key, q] : t.entries()) {
                            auto mirror = t.entries().find({key.second, key.first});
                            bool ok = key.first != key.second &&
                                      mirror != t.entries().end() && mirror->second == -q;
                            if (!ok) {
                              repro = doc::iet_to_json(f);
                              return false;
                            }
                          }
                          return true;
                        }});
  properties.push_back({"euclid-trace-invariants", cases, [](gen::Rng& rng, doc::json& repro) {
                          int kind = basis_kind_for_case(rng);
                          SurdReal a = gen::random_positive(rng, kind);
                          SurdReal b = gen::random_positive(rng, kind);
                          SurdReal eps = Rational(1, 2) * iet::min(a, b);
                          EuclidTrace trace = euclid_pairs(a, b, eps);
                          for (std::size_t i = 0; i + 1 < trace.pairs.size(); ++i) {
                            const auto& [ai, bi] = trace.pairs[i];
                            const auto& [an, bn] = trace.pairs[i + 1];
                            bool step = (an == ai - bi && bn == bi) || (an == ai && bn == bi - ai);
                            bool monotone = sign((an + bn) - (ai + bi)) < 0;
                            if (!step || !monotone) {
                              repro = doc::json{{"a", format_surd(a)}, {"b", format_surd(b)}};
                              return false;
                            }
                          }
                          const auto& [an, bn] = trace.pairs.back();
                          bool terminal = trace.terminal == EuclidTrace::Terminal::sum_below_eps
                                              ? sign(an + bn - eps) < 0
                                              : an == bn;
                          if (!terminal) repro = doc::json{{"a", format_surd(a)}, {"b", format_surd(b)}};
                          return terminal;
                        }});
  properties.push_back({"shrink-wedge-exact", cases, [](gen::Rng& rng, doc::json& repro) {
                          int kind = basis_kind_for_case(rng);
                          SurdReal a = gen::random_positive(rng, kind);
                          SurdReal b = gen::random_positive(rng, kind);
                          if (rng.chance(30)) a = -a;
                          if (rng.chance(30)) b = -b;
                          SurdReal eps = SurdReal(Rational(1, 3));
                          auto [a0, b0] = shrink_wedge(a, b, eps);
                          bool ok = sign(a0) > 0 && sign(b0) > 0 && sign(a0 + b0 - eps) < 0 &&
                                    wedge(a0, b0) == wedge(a, b);
                          if (!ok) repro = doc::json{{"a", format_surd(a)}, {"b", format_surd(b)}};
                          return ok;
                        }});
  properties.push_back({"realize-saf-round-trip", cases, [](gen::Rng& rng, doc::json& repro) {
                          int kind = basis_kind_for_case(rng);
                          Interval base = make_interval(SurdReal(), SurdReal(10));
                          std::vector<std::pair<SurdReal, SurdReal>> wedges;
                          TensorQQ expected;
                          std::size_t n = rng.below(4);
                          for (std::size_t i = 0; i < n; ++i) {
                            SurdReal a = gen::random_positive(rng, kind);
                            SurdReal b = gen::random_positive(rng, kind);
                            wedges.emplace_back(a, b);
                            expected += wedge(a, b);
                          }
                          Iet f = realize_saf(base, wedges);
                          bool ok = saf(f) == expected;
                          if (!ok) repro = doc::iet_to_json(f);
                          return ok;
                        }});
  return run_properties("saf", properties, seed);
}

int run_factor_suite(std::uint64_t seed, std::size_t cases) {
  // Pipeline properties run fewer cases: each case exercises a full
  // factorization stack.
  std::size_t heavy = std::max<std::size_t>(5, cases / 10);
  std::vector<Property> properties;
  properties.push_back({"rotations-factorization-sound", cases, [](gen::Rng& rng, doc::json& repro) {
                          auto pool = gen::random_atoms(rng, basis_kind_for_case(rng), 6);
                          Iet f = gen::random_iet(rng, pool, 8);
                          Factorization fz = rotations_factorization(f);
                          if (!fz.verify()) {
                            repro = doc::iet_to_json(f);
                            return false;
                          }
                          if (f.block_count() >= 2) {
                            for (const Factor& factor : fz.factors) {
                              const auto& r = std::get<RotationSpec>(factor);
                              bool a_in = false, b_in = false;
                              for (const auto& len : f.lengths()) {
                                if (len == r.a) a_in = true;
                                if (len == r.b) b_in = true;
                              }
                              if (!a_in || !b_in) {
                                repro = doc::iet_to_json(f);
                                return false;
                              }
                            }
                          }
                          return true;
                        }});
  properties.push_back({"elementary-swap-lemmas", cases, [](gen::Rng& rng, doc::json& repro) {
                          Interval base = make_interval(SurdReal(), SurdReal(16));
                          // Random disjoint same-type swaps and rotations on a grid.
                          SurdReal a(Rational(rng.range(1, 2)));
                          SurdReal x(Rational(rng.range(0, 3)));
                          SurdReal y = x + a + Rational(rng.range(0, 2));
                          SwapSpec s1 = make_swap_spec(a, x, y);
                          SwapCommutator sc = swap_as_commutator(s1, base);
                          Iet swap1 = interval_swap(base, s1);
                          bool ok = compose(compose(invert(sc.g3), invert(sc.g)),
                                            compose(sc.g3, sc.g)) == swap1 &&
                                    compose(sc.g3, sc.g3).is_identity() &&
                                    compose(sc.g, sc.g).is_identity();
                          SwapSpec s2 = make_swap_spec(a, y + a + 1, y + 2 * a + Rational(2));
                          Iet g = conjugator_for_disjoint_swaps(s1, s2, base);
                          ok = ok && compose(g, compose(swap1, g)) == interval_swap(base, s2) &&
                               compose(g, g).is_identity();
                          if (!ok) repro = doc::swap_to_json(base, s1);
                          return ok;
                        }});
  properties.push_back({"rotation-pair-and-commutator", heavy, [](gen::Rng& rng, doc::json& repro) {
                          auto pool = gen::random_atoms(rng, basis_kind_for_case(rng), 4);
                          SurdReal total;
                          for (const auto& atom : pool) total += atom;
                          Interval base = make_interval(SurdReal(), total);
                          RotationSpec r1{pool[0], pool[1], base.lo};
                          // The second support fits because the pool sums to the width.
                          Factorization pair =
                              rotation_pair_to_swaps(r1, {pool[0], pool[1], pool[2]}, base);
                          if (!pair.verify()) {
                            repro = doc::json{{"a", format_surd(pool[0])}, {"b", format_surd(pool[1])}};
                            return false;
                          }
                          Iet g = gen::random_iet(rng, pool, 4);
                          Factorization comm = rotation_commutator_to_swaps(r1, g, base);
                          if (!comm.verify()) {
                            repro = doc::iet_to_json(g);
                            return false;
                          }
                          return true;
                        }});
  properties.push_back({"zero-saf-pipelines", heavy, [](gen::Rng& rng, doc::json& repro) {
                          Iet f = gen::random_zero_saf(rng, basis_kind_for_case(rng));
                          Factorization balanced = balanced_rotations_factorization(f);
                          if (!balanced.verify()) {
                            repro = doc::iet_to_json(f);
                            return false;
                          }
                          Factorization swaps = zero_saf_to_swaps(f);
                          if (!swaps.verify()) {
                            repro = doc::iet_to_json(f);
                            return false;
                          }
                          for (const Factor& factor : swaps.factors) {
                            Iet s = realize(f.base(), factor);
                            if (!compose(s, s).is_identity() || !saf(s).is_zero()) {
                              repro = doc::iet_to_json(f);
                              return false;
                            }
                          }
                          Factorization comms = zero_saf_to_commutators(f);
                          if (!comms.verify()) {
                            repro = doc::iet_to_json(f);
                            return false;
                          }
                          return true;
                        }});
  properties.push_back({"nonzero-saf-rejected", cases, [](gen::Rng& rng, doc::json& repro) {
                          Iet f = gen::random_nonzero_saf(rng, 1 + static_cast<int>(rng.below(2)));
                          try {
                            zero_saf_to_swaps(f);
                          } catch (const iet::Error& e) {
                            if (e.code() == iet::Errc::nonzero_saf) return true;
                          }
                          repro = doc::iet_to_json(f);
                          return false;
                        }});
  properties.push_back({"simplicity-chain", heavy, [](gen::Rng& rng, doc::json& repro) {
                          Iet f = gen::random_grid_zero_saf(rng);
                          SurdReal eps = Rational(1, 64) * f.base().width();
                          SimplicityCertificate cert = simplicity_witness(f, eps);
                          bool ok = verify_simplicity(cert, f);
                          if (!ok) repro = doc::iet_to_json(f);
                          return ok;
                        }});
  return run_properties("factor", properties, seed);
}

}  // namespace

int run_verify(const VerifyOptions& options) {
  int rc = 0;
  if (options.suite == "all" || options.suite == "group") {
    rc |= run_group_suite(options.seed, options.cases);
  }
  if (options.suite == "all" || options.suite == "saf") {
    rc |= run_saf_suite(options.seed + 1, options.cases);
  }
  if (options.suite == "all" || options.suite == "factor") {
    rc |= run_factor_suite(options.seed + 2, options.cases);
  }
  return rc;
}

}  // namespace iet::cli
