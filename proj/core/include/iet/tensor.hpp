#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "iet/surd.hpp"

namespace iet {

/// Element of R (x)_Q R restricted to the surd number system: a sparse
/// rational matrix over ordered basis pairs (d, d'), each entry the
/// coefficient of sqrt(d) (x) sqrt(d').  Entry-map equality is value
/// equality because the basis tensors are linearly independent.
class TensorQQ {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  using Entries = std::map<Key, Rational>;

  TensorQQ() = default;

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Accumulates q * (sqrt(d) (x) sqrt(d')); drops the entry when it cancels.
  void add_entry(std::uint64_t d, std::uint64_t dprime, const Rational& q);

  TensorQQ& operator+=(const TensorQQ& rhs);
  friend TensorQQ operator+(TensorQQ lhs, const TensorQQ& rhs) { return lhs += rhs; }
  TensorQQ operator-() const;
  friend TensorQQ operator-(TensorQQ lhs, const TensorQQ& rhs) { return lhs += -rhs; }

  friend bool operator==(const TensorQQ&, const TensorQQ&) = default;

 private:
  Entries entries_;
};

/// a (x) b expanded bilinearly over the surd coordinates.
TensorQQ tensor_product(const SurdReal& a, const SurdReal& b);

/// a (x) b - b (x) a.
TensorQQ wedge(const SurdReal& a, const SurdReal& b);

/// Entries sorted by (d, d'), one "d d' coeff" triple per line.
std::string to_string(const TensorQQ& t);
std::ostream& operator<<(std::ostream& os, const TensorQQ& t);

}  // namespace iet
