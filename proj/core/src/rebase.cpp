#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

#include "iet/error.hpp"
#include "iet/factor.hpp"

#include "check.hpp"

namespace iet {

namespace {

// Coefficients c with sum c_j * basis_j = target, or nullopt when the target
// lies outside the Q-span.  Works in the surd coordinate space, where the
// basis vectors have full column rank.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<SurdReal>& basis,
                                                   const SurdReal& target) {
  std::set<std::uint64_t> key_set;
  for (const auto& b : basis) {
    for (const auto& [d, q] : b.terms()) key_set.insert(d);
  }
  for (const auto& [d, q] : target.terms()) key_set.insert(d);
  std::vector<std::uint64_t> keys(key_set.begin(), key_set.end());

  const std::size_t rows = keys.size(), cols = basis.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c].coeff(keys[r]);
    m[r][cols] = target.coeff(keys[r]);
  }

  std::vector<std::size_t> pivot_of_col(cols, rows);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    Rational inv_pivot = Rational(1) / m[rank][c];
    for (std::size_t cc = c; cc <= cols; ++cc) m[rank][cc] *= inv_pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rational factor = m[r][c];
      for (std::size_t cc = c; cc <= cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (!m[r][cols].is_zero()) return std::nullopt;
  }

  std::vector<Rational> c(cols);
  for (std::size_t col = 0; col < cols; ++col) {
    detail::internal_check(pivot_of_col[col] < rows, "basis lost independence");
    c[col] = m[pivot_of_col[col]][cols];
  }
  SurdReal check;
  for (std::size_t col = 0; col < cols; ++col) check += c[col] * basis[col];
  detail::internal_check(check == target, "span solve disagrees with exact recombination");
  return c;
}

}  // namespace

Rebase rebase_nonneg_integer(const std::vector<SurdReal>& lengths) {
  for (const auto& len : lengths) {
    if (sign(len) <= 0) fail(Errc::non_positive_input, format_surd(len));
  }

  std::vector<SurdReal> basis;
  std::vector<std::vector<Rational>> rows;

  for (const SurdReal& value : lengths) {
    std::optional<std::vector<Rational>> sol;
    if (!basis.empty()) sol = solve_in_span(basis, value);
    if (!sol) {
      basis.push_back(value);
      for (auto& row : rows) row.emplace_back(0);
      std::vector<Rational> row(basis.size(), Rational(0));
      row.back() = 1;
      rows.push_back(std::move(row));
      continue;
    }

    const std::vector<Rational>& c = *sol;
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].sign() > 0) pos.push_back(j);
      else if (c[j].sign() < 0) neg.push_back(j);
    }
    detail::internal_check(!pos.empty(), "positive value with no positive span term");

    if (neg.empty()) {
      rows.push_back(c);
      continue;
    }

    // value = sum_pos c_t l_t - B with B positive.  Pick positive rationals
    // r_t summing to 1 that keep every l'_t = c_t l_t - r_t B positive; the
    // exact proportions c_t l_t / sum do, so dyadic approximations of them
    // succeed at some precision.
    SurdReal b_part;
    for (std::size_t j : neg) b_part += (-c[j]) * basis[j];

    const std::size_t s = pos.size();
    std::vector<Rational> r(s);
    if (s == 1) {
      r[0] = 1;
    } else {
      std::vector<SurdReal> a_part(s);
      SurdReal total;
      for (std::size_t t = 0; t < s; ++t) {
        a_part[t] = c[pos[t]] * basis[pos[t]];
        total += a_part[t];
      }
      auto feasible = [&](const std::vector<Rational>& cand) {
        for (std::size_t t = 0; t < s; ++t) {
          if (cand[t].sign() <= 0) return false;
          if (sign(a_part[t] - cand[t] * b_part) <= 0) return false;
        }
        return true;
      };
      // The even split keeps denominators (and with them the final integer
      // coordinates) small, so try it before refining toward the exact
      // proportions a_t l_t / total.
      bool ok = false;
      std::vector<Rational> cand(s, Rational(1, Int(s)));
      if (feasible(cand)) {
        r = cand;
        ok = true;
      }
      for (unsigned p = 1; p <= 256 && !ok; ++p) {
        Rational denom = approx(total, p + 8);
        if (denom.sign() <= 0) continue;
        Rational used(0);
        bool valid = true;
        for (std::size_t t = 0; t + 1 < s; ++t) {
          cand[t] = round_dyadic(approx(a_part[t], p + 8) / denom, p);
          if (cand[t].sign() <= 0) { valid = false; break; }
          used += cand[t];
        }
        if (!valid) continue;
        cand[s - 1] = Rational(1) - used;
        if (feasible(cand)) {
          r = cand;
          ok = true;
        }
      }
      detail::internal_check(ok, "r_t search did not converge");
    }

    std::vector<SurdReal> new_basis = basis;
    for (std::size_t t = 0; t < s; ++t) {
      new_basis[pos[t]] = c[pos[t]] * basis[pos[t]] - r[t] * b_part;
      detail::internal_check(sign(new_basis[pos[t]]) > 0, "rebased basis element not positive");
    }

    // Old basis in terms of the new one:
    //   l_t = (1/c_t) l'_t + (r_t/c_t) sum_neg (-c_j) l'_j   for t in pos,
    // everything else unchanged; rewrite the processed rows accordingly.
    for (auto& row : rows) {
      std::vector<Rational> nr(basis.size(), Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (row[i].is_zero()) continue;
        auto t_it = std::find(pos.begin(), pos.end(), i);
        if (t_it == pos.end()) {
          nr[i] += row[i];
          continue;
        }
        std::size_t t = static_cast<std::size_t>(t_it - pos.begin());
        nr[i] += row[i] / c[i];
        for (std::size_t j : neg) nr[j] += row[i] * (r[t] / c[i]) * (-c[j]);
      }
      row = std::move(nr);
    }
    basis = std::move(new_basis);

    std::vector<Rational> row(basis.size(), Rational(0));
    for (std::size_t j : pos) row[j] = 1;
    rows.push_back(std::move(row));
  }

  // Clear denominators: coords over basis/N are nonnegative integers.
  Int n(1);
  for (const auto& row : rows) {
    for (const auto& q : row) n = lcm(n, denominator(q));
  }
  Rebase out;
  Rational inv_n = make_rational(Int(1), n);
  for (const auto& b : basis) out.basis.push_back(inv_n * b);
  for (const auto& row : rows) {
    std::vector<Int> ints;
    ints.reserve(row.size());
    for (const auto& q : row) {
      Rational scaled = q * n;
      detail::internal_check(denominator(scaled) == 1 && numerator(scaled).sign() >= 0,
                             "coords not nonnegative integers");
      ints.push_back(numerator(scaled));
    }
    out.coords.push_back(std::move(ints));
  }
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    SurdReal sum;
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
      sum += Rational(out.coords[i][j]) * out.basis[j];
    }
    detail::internal_check(sum == lengths[i], "rebase does not recombine exactly");
  }
  return out;
}

}  // namespace iet
