#pragma once

#include <cstdint>
#include <string>

namespace iet::cli {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::string suite = "all";  // all | group | saf | factor
};

/// Runs the randomized property suites; returns 0 when every property holds,
/// 1 otherwise (a reproducer document is printed on the first failure).
int run_verify(const VerifyOptions& options);

}  // namespace iet::cli
