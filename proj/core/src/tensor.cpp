#include "iet/tensor.hpp"

#include <ostream>
#include <sstream>

namespace iet {

void TensorQQ::add_entry(std::uint64_t d, std::uint64_t dprime, const Rational& q) {
  if (q.is_zero()) return;
  Key key{d, dprime};
  auto [it, inserted] = entries_.emplace(key, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

TensorQQ& TensorQQ::operator+=(const TensorQQ& rhs) {
  for (const auto& [key, q] : rhs.entries_) add_entry(key.first, key.second, q);
  return *this;
}

TensorQQ TensorQQ::operator-() const {
  TensorQQ out;
  for (const auto& [key, q] : entries_) out.entries_.emplace(key, -q);
  return out;
}

TensorQQ tensor_product(const SurdReal& a, const SurdReal& b) {
  TensorQQ out;
  for (const auto& [d, u] : a.terms()) {
    for (const auto& [e, v] : b.terms()) out.add_entry(d, e, u * v);
  }
  return out;
}

TensorQQ wedge(const SurdReal& a, const SurdReal& b) {
  TensorQQ out = tensor_product(a, b);
  out += -tensor_product(b, a);
  return out;
}

std::string to_string(const TensorQQ& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TensorQQ& t) {
  if (t.is_zero()) return os << "0\n";
  for (const auto& [key, q] : t.entries()) {
    os << key.first << " " << key.second << " " << to_string(q) << "\n";
  }
  return os;
}

}  // namespace iet
