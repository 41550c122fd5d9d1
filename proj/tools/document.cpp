#include "document.hpp"

#include <fstream>
#include <iostream>

#include "iet/error.hpp"

namespace iet::doc {

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(Errc::bad_document, std::string("missing field '") + name + "'");
  return *it;
}

SurdReal surd_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) fail(Errc::bad_document, std::string("field '") + name + "' must be a surd string");
  return parse_surd(v.get<std::string>());
}

}  // namespace

json interval_to_json(const Interval& iv) {
  return {{"lo", format_surd(iv.lo)}, {"hi", format_surd(iv.hi)}};
}

Interval interval_from_json(const json& j) {
  return make_interval(surd_field(j, "lo"), surd_field(j, "hi"));
}

json iet_to_json(const Iet& f) {
  json lengths = json::array();
  for (const auto& len : f.lengths()) lengths.push_back(format_surd(len));
  json perm = json::array();
  for (std::size_t r : f.perm()) perm.push_back(r + 1);
  return {{"interval", interval_to_json(f.base())}, {"lengths", lengths}, {"perm", perm}};
}

namespace {

std::vector<std::size_t> perm_from_json(const json& j, std::size_t k) {
  std::vector<std::size_t> perm;
  if (j.is_array()) {
    for (const json& v : j) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > k) {
        fail(Errc::invalid_permutation, "one-line perm entries must be 1.." + std::to_string(k));
      }
      perm.push_back(v.get<std::size_t>() - 1);
    }
    if (perm.size() != k) fail(Errc::invalid_permutation, "perm length does not match lengths");
    return perm;
  }
  if (j.is_object() && j.contains("cycles")) {
    perm.resize(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    for (const json& cyc : field(j, "cycles")) {
      if (!cyc.is_array() || cyc.empty()) fail(Errc::invalid_permutation, "cycle must be a nonempty array");
      std::vector<std::size_t> c;
      for (const json& v : cyc) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > k) {
          fail(Errc::invalid_permutation, "cycle entries must be 1.." + std::to_string(k));
        }
        c.push_back(v.get<std::size_t>() - 1);
      }
      for (std::size_t i = 0; i < c.size(); ++i) perm[c[i]] = c[(i + 1) % c.size()];
    }
    return perm;
  }
  fail(Errc::invalid_permutation, "perm must be an array or {\"cycles\": [...]}");
}

}  // namespace

Iet iet_from_json(const json& j) {
  Interval base = interval_from_json(field(j, "interval"));
  std::vector<SurdReal> lengths;
  for (const json& v : field(j, "lengths")) {
    if (!v.is_string()) fail(Errc::bad_document, "lengths entries must be surd strings");
    lengths.push_back(parse_surd(v.get<std::string>()));
  }
  std::vector<std::size_t> perm = perm_from_json(field(j, "perm"), lengths.size());
  return Iet(base, lengths, perm);
}

json swap_to_json(const Interval& base, const SwapSpec& s) {
  return {{"interval", interval_to_json(base)},
          {"a", format_surd(s.a)},
          {"x", format_surd(s.x)},
          {"y", format_surd(s.y)}};
}

std::pair<Interval, SwapSpec> swap_from_json(const json& j) {
  Interval base = interval_from_json(field(j, "interval"));
  SwapSpec s = make_swap_spec(surd_field(j, "a"), surd_field(j, "x"), surd_field(j, "y"));
  return {base, s};
}

json factor_to_json(const Interval& base, const Factor& f) {
  struct Visitor {
    const Interval& base;
    json operator()(const RotationSpec& r) const {
      return {{"kind", "rotation"},
              {"a", format_surd(r.a)},
              {"b", format_surd(r.b)},
              {"start", format_surd(r.start)}};
    }
    json operator()(const SwapSpec& s) const {
      return {{"kind", "swap"},
              {"a", format_surd(s.a)},
              {"x", format_surd(s.x)},
              {"y", format_surd(s.y)}};
    }
    json operator()(const CommutatorFactor& c) const {
      return {{"kind", "commutator"}, {"u", iet_to_json(c.u)}, {"v", iet_to_json(c.v)}};
    }
  };
  return std::visit(Visitor{base}, f);
}

Factor factor_from_json(const json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "rotation") {
    return RotationSpec{surd_field(j, "a"), surd_field(j, "b"), surd_field(j, "start")};
  }
  if (kind == "swap") {
    return SwapSpec{surd_field(j, "a"), surd_field(j, "x"), surd_field(j, "y")};
  }
  if (kind == "commutator") {
    return CommutatorFactor{iet_from_json(field(j, "u")), iet_from_json(field(j, "v"))};
  }
  fail(Errc::bad_document, "unknown factor kind '" + kind + "'");
}

json certificate_to_json(const Factorization& fz) {
  json factors = json::array();
  for (const Factor& f : fz.factors) factors.push_back(factor_to_json(fz.base, f));
  return {{"target", iet_to_json(fz.target)}, {"factors", factors}, {"verified", fz.verify()}};
}

Factorization certificate_from_json(const json& j) {
  Iet target = iet_from_json(field(j, "target"));
  Factorization fz{target.base(), {}, std::move(target)};
  for (const json& f : field(j, "factors")) fz.factors.push_back(factor_from_json(f));
  return fz;
}

json conjugacy_to_json(const Interval& base, const SwapSpec& s1, const SwapSpec& s2,
                       const ConjugacyCertificate& cert) {
  Iet lhs = interval_swap(base, s1);
  Iet rhs = compose(invert(cert.g), compose(interval_swap(base, s2), cert.g));
  return {{"s1", swap_to_json(base, s1)},
          {"s2", swap_to_json(base, s2)},
          {"g", iet_to_json(cert.g)},
          {"g1", iet_to_json(cert.g1)},
          {"g2", iet_to_json(cert.g2)},
          {"middle", swap_to_json(base, cert.middle)},
          {"verified", lhs == rhs}};
}

json simplicity_to_json(const Iet& f, const SurdReal& eps, const SimplicityCertificate& cert) {
  const Interval& base = f.base();
  auto swap_fields = [&](const SwapSpec& s) { return swap_to_json(base, s); };
  auto membership = [&](const SwapCommutator& m) {
    return json{{"g3", iet_to_json(m.g3)}, {"g", iet_to_json(m.g)}};
  };
  return {{"input", iet_to_json(f)},
          {"eps", format_surd(eps)},
          {"small_swap",
           {{"g1", swap_fields(cert.small.g1)},
            {"g2", swap_fields(cert.small.g2)},
            {"result", swap_fields(cert.small.result)}}},
          {"g1_membership", membership(cert.g1_membership)},
          {"g2_membership", membership(cert.g2_membership)},
          {"sample", swap_fields(cert.sample)},
          {"conjugacy", conjugacy_to_json(base, cert.sample, cert.small.result, cert.conjugacy)},
          {"verified", verify_simplicity(cert, f)}};
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_document, "cannot open '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::bad_document, path.string() + ": " + e.what());
  }
  return j;
}

Iet load_iet(const std::filesystem::path& path) { return iet_from_json(load_json(path)); }

void write_output(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::bad_document, "cannot open '" + out_path + "' for writing");
  out << j.dump(2) << "\n";
}

}  // namespace iet::doc
