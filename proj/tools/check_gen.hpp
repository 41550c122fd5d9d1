#pragma once

#include <stdexcept>
#include <string>

namespace iet::detail {

inline void gen_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("generator invariant violated: ") + what);
}

}  // namespace iet::detail
