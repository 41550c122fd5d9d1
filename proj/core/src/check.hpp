#pragma once

#include <stdexcept>
#include <string>

namespace iet::detail {

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace iet::detail
