#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "document.hpp"
#include "gen.hpp"
#include "verify.hpp"

#include "iet/error.hpp"

namespace {

using iet::Errc;
using iet::Error;
namespace doc = iet::doc;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNonzeroSaf = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::malformed_text:
    case Errc::zero_denominator:
    case Errc::bad_document:
      return kExitParse;
    case Errc::nonzero_saf:
      return kExitNonzeroSaf;
    default:
      return kExitPrecondition;
  }
}

std::uint64_t order_bound_from_env() {
  if (const char* env = std::getenv("IET_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return iet::kDefaultOrderBound;
}

void require_same_base(const iet::Iet& f, const iet::Iet& g) {
  if (!(f.base() == g.base())) iet::fail(Errc::base_mismatch, "inputs have different base intervals");
}

int cmd_compose(const std::vector<std::string>& inputs, const std::string& out) {
  iet::Iet result = doc::load_iet(inputs.front());
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    iet::Iet next = doc::load_iet(inputs[i]);
    require_same_base(result, next);
    result = compose(result, next);
  }
  doc::write_output(doc::iet_to_json(result), out);
  return 0;
}

int cmd_invert(const std::string& input, const std::string& out) {
  doc::write_output(doc::iet_to_json(invert(doc::load_iet(input))), out);
  return 0;
}

int cmd_canon(const std::string& input, const std::string& out) {
  doc::write_output(doc::iet_to_json(doc::load_iet(input)), out);
  return 0;
}

int cmd_apply(const std::string& input, const std::string& point) {
  iet::Iet f = doc::load_iet(input);
  std::cout << format_surd(apply(f, iet::parse_surd(point))) << "\n";
  return 0;
}

int cmd_order(const std::string& input, std::uint64_t max_iter) {
  iet::OrderResult r = order(doc::load_iet(input), max_iter);
  switch (r.kind) {
    case iet::OrderResult::Kind::finite: std::cout << "finite " << r.value << "\n"; break;
    case iet::OrderResult::Kind::infinite: std::cout << "infinite\n"; break;
    case iet::OrderResult::Kind::bound_exceeded: std::cout << "bound-exceeded " << r.value << "\n"; break;
  }
  return 0;
}

int cmd_saf(const std::string& input) {
  std::cout << to_string(saf(doc::load_iet(input)));
  return 0;
}

int cmd_factor(const std::string& input, const std::string& mode, const std::string& out) {
  iet::Iet f = doc::load_iet(input);
  iet::Factorization fz = [&] {
    if (mode == "rotations") return rotations_factorization(f);
    if (mode == "balanced") return balanced_rotations_factorization(f);
    if (mode == "swaps") return zero_saf_to_swaps(f);
    if (mode == "commutators") return zero_saf_to_commutators(f);
    iet::fail(Errc::bad_document, "unknown factor mode '" + mode + "'");
  }();
  doc::json j = doc::certificate_to_json(fz);
  if (!j["verified"].get<bool>()) {
    std::cerr << "refusing to emit an unverified certificate\n";
    return 1;
  }
  doc::write_output(j, out);
  return 0;
}

int cmd_refine(const std::string& input, const std::string& eps_text, const std::string& out) {
  auto [base, spec] = doc::swap_from_json(doc::load_json(input));
  iet::Factorization fz = refine_swap(spec, iet::parse_surd(eps_text), base);
  doc::json j = doc::certificate_to_json(fz);
  if (!j["verified"].get<bool>()) {
    std::cerr << "refusing to emit an unverified certificate\n";
    return 1;
  }
  doc::write_output(j, out);
  return 0;
}

int cmd_conjugate(const std::string& in1, const std::string& in2, const std::string& out) {
  auto [base1, s1] = doc::swap_from_json(doc::load_json(in1));
  auto [base2, s2] = doc::swap_from_json(doc::load_json(in2));
  if (!(base1 == base2)) iet::fail(Errc::base_mismatch, "swap inputs have different base intervals");
  iet::ConjugacyCertificate cert = conjugate_same_type_small(s1, s2, base1);
  doc::json j = doc::conjugacy_to_json(base1, s1, s2, cert);
  if (!j["verified"].get<bool>()) {
    std::cerr << "refusing to emit an unverified certificate\n";
    return 1;
  }
  doc::write_output(j, out);
  return 0;
}

int cmd_simplicity(const std::string& input, const std::string& eps_text, const std::string& out) {
  iet::Iet f = doc::load_iet(input);
  iet::SurdReal eps = iet::parse_surd(eps_text);
  iet::SimplicityCertificate cert = simplicity_witness(f, eps);
  doc::json j = doc::simplicity_to_json(f, eps, cert);
  if (!j["verified"].get<bool>()) {
    std::cerr << "refusing to emit an unverified certificate\n";
    return 1;
  }
  doc::write_output(j, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact interval exchange transformations: composition, the SAF invariant, and "
               "certified factorizations"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string input, input2, out, mode = "rotations", point, eps_text;
  std::uint64_t max_iter = order_bound_from_env();
  iet::cli::VerifyOptions verify_options;

  CLI::App* compose_cmd = app.add_subcommand("compose", "Compose two or more maps (last file acts first)");
  compose_cmd->add_option("inputs", inputs, "IET documents")->required()->expected(2, -1);
  compose_cmd->add_option("-o,--out", out, "Output file (stdout when omitted)");

  CLI::App* invert_cmd = app.add_subcommand("invert", "Group inverse");
  invert_cmd->add_option("input", input, "IET document")->required();
  invert_cmd->add_option("-o,--out", out, "Output file");

  CLI::App* canon_cmd = app.add_subcommand("canon", "Canonical (minimal) form");
  canon_cmd->add_option("input", input, "IET document")->required();
  canon_cmd->add_option("-o,--out", out, "Output file");

  CLI::App* apply_cmd = app.add_subcommand("apply", "Evaluate the map at a point");
  apply_cmd->add_option("input", input, "IET document")->required();
  apply_cmd->add_option("-x,--point", point, "Surd text, e.g. '1/2 + sqrt(2)'")->required();

  CLI::App* order_cmd = app.add_subcommand("order", "Order of the element");
  order_cmd->add_option("input", input, "IET document")->required();
  order_cmd->add_option("--max", max_iter, "Iteration bound (env IET_MAX_ORDER)");

  CLI::App* saf_cmd = app.add_subcommand("saf", "SAF invariant, one 'd d-prime coeff' entry per line");
  saf_cmd->add_option("input", input, "IET document")->required();

  CLI::App* factor_cmd = app.add_subcommand("factor", "Certified factorization");
  factor_cmd->add_option("input", input, "IET document")->required();
  factor_cmd->add_option("--mode", mode, "rotations|balanced|swaps|commutators")
      ->check(CLI::IsMember({"rotations", "balanced", "swaps", "commutators"}));
  factor_cmd->add_option("-o,--out", out, "Output file");

  CLI::App* refine_cmd = app.add_subcommand("refine", "Split a swap into swaps of type below eps");
  refine_cmd->add_option("input", input, "Swap document")->required();
  refine_cmd->add_option("--eps", eps_text, "Surd text")->required();
  refine_cmd->add_option("-o,--out", out, "Output file");

  CLI::App* conj_cmd = app.add_subcommand("conjugate", "Conjugate same-type swaps inside the commutator group");
  conj_cmd->add_option("s1", input, "Swap document")->required();
  conj_cmd->add_option("s2", input2, "Swap document")->required();
  conj_cmd->add_option("-o,--out", out, "Output file");

  CLI::App* simp_cmd = app.add_subcommand("simplicity", "Simplicity witness chain");
  simp_cmd->add_option("input", input, "IET document")->required();
  simp_cmd->add_option("--eps", eps_text, "Surd text")->required();
  simp_cmd->add_option("-o,--out", out, "Output file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Randomized property suites");
  verify_cmd->add_option("--seed", verify_options.seed, "RNG seed");
  verify_cmd->add_option("--cases", verify_options.cases, "Cases per property");
  verify_cmd->add_option("--suite", verify_options.suite, "all|group|saf|factor")
      ->check(CLI::IsMember({"all", "group", "saf", "factor"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (compose_cmd->parsed()) return cmd_compose(inputs, out);
    if (invert_cmd->parsed()) return cmd_invert(input, out);
    if (canon_cmd->parsed()) return cmd_canon(input, out);
    if (apply_cmd->parsed()) return cmd_apply(input, point);
    if (order_cmd->parsed()) return cmd_order(input, max_iter);
    if (saf_cmd->parsed()) return cmd_saf(input);
    if (factor_cmd->parsed()) return cmd_factor(input, mode, out);
    if (refine_cmd->parsed()) return cmd_refine(input, eps_text, out);
    if (conj_cmd->parsed()) return cmd_conjugate(input, input2, out);
    if (simp_cmd->parsed()) return cmd_simplicity(input, eps_text, out);
    if (verify_cmd->parsed()) return iet::cli::run_verify(verify_options);
  } catch (const Error& e) {
    // For nonzero_saf the offending tensor rides along in the message.
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
