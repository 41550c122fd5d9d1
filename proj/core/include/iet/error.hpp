#pragma once

#include <stdexcept>
#include <string>

namespace iet {

enum class Errc {
  malformed_text,
  zero_denominator,
  empty_interval,
  non_positive_length,
  length_sum_mismatch,
  invalid_permutation,
  point_outside_domain,
  base_mismatch,
  support_outside_base,
  overlapping_blocks,
  not_finite_order,
  bound_exceeded,
  non_positive_input,
  non_positive_eps,
  type_mismatch,
  overlapping_supports,
  precondition_ab,
  identity_input,
  eps_too_large,
  nonzero_saf,
  not_balanced,
  type_too_large,
  bad_document,
};

const char* errc_name(Errc c) noexcept;

/// Domain error carrying a machine-checkable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace iet
