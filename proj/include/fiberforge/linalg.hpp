#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fiberforge/error.hpp"
#include "fiberforge/budget.hpp"

namespace fiberforge {

/// Sparse integer row: (column, nonzero entry) sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

/// Row-echelon basis of a growing set of integer rows, built by fraction-free
/// elimination on leading entries. Pivot columns are the leading columns of
/// the stored rows, so with columns sorted by decreasing monomial they are the
/// initial monomials of the row space.
class IntegerEchelon {
 public:
  /// Adds a row; returns true when it was independent of the rows so far.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      if (budget_ && budget_->limited() && (++steps_ & 1023) == 0 && budget_->expired()) {
        throw BudgetExceeded("echelon", rows_.size(), 0, 0);
      }
      const std::size_t lead = row.front().first;
      auto it = pivot_of_.find(lead);
      if (it == pivot_of_.end()) {
        normalize(row);
        pivot_of_.emplace(lead, rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      row = eliminate(row, rows_[it->second]);
    }
    return false;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    out.reserve(pivot_of_.size());
    for (const auto& [c, r] : pivot_of_) out.push_back(c);
    return out;
  }

  void set_budget(const Budget* budget) { budget_ = budget; }

  /// Divides out the content and makes the leading entry positive.
  static void normalize(SparseRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1) {
      for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }

  /// a * piv.lead - piv * a.lead, which cancels the common leading column.
  static SparseRow eliminate(const SparseRow& a, const SparseRow& piv) {
    mpz_class fa = piv.front().second;
    mpz_class fp = a.front().second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), fa.get_mpz_t(), fp.get_mpz_t());
    fa /= g;
    fp /= g;
    SparseRow out;
    out.reserve(a.size() + piv.size());
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < a.size() || j < piv.size()) {
      if (j >= piv.size() || (i < a.size() && a[i].first < piv[j].first)) {
        out.emplace_back(a[i].first, a[i].second * fa);
        ++i;
      } else if (i >= a.size() || piv[j].first < a[i].first) {
        out.emplace_back(piv[j].first, -piv[j].second * fp);
        ++j;
      } else {
        mpz_class v = a[i].second * fa - piv[j].second * fp;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    normalize(out);
    return out;
  }

 private:
  std::vector<SparseRow> rows_;
  std::map<std::size_t, std::size_t> pivot_of_;
  const Budget* budget_ = nullptr;
  std::size_t steps_ = 0;
};

/// Scales rational entries by the common denominator.
inline SparseRow integer_row(std::vector<std::pair<std::size_t, mpq_class>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  mpz_class den = 1;
  for (const auto& [c, v] : entries) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  SparseRow row;
  row.reserve(entries.size());
  for (const auto& [c, v] : entries) {
    if (v == 0) continue;
    mpz_class x = v.get_num() * (den / v.get_den());
    if (!row.empty() && row.back().first == c) {
      row.back().second += x;
      if (row.back().second == 0) row.pop_back();
    } else {
      row.emplace_back(c, std::move(x));
    }
  }
  return row;
}

/// Dense matrix over the rationals with reduced row echelon form, null space
/// and particular solutions.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpq_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && at(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(p, k), at(r, k));
      }
      const mpq_class inv = 1 / at(r, c);
      for (std::size_t k = c; k < cols_; ++k) at(r, k) *= inv;
      for (std::size_t q = 0; q < rows_; ++q) {
        if (q == r || at(q, c) == 0) continue;
        const mpq_class f = at(q, c);
        for (std::size_t k = c; k < cols_; ++k) {
          if (at(r, k) != 0) at(q, k) -= f * at(r, k);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    RationalMatrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of {v : A v = 0}, one vector per free column, in column order.
  std::vector<std::vector<mpq_class>> nullspace() const {
    RationalMatrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<mpq_class> v(cols_);
      v[f] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// A solution of A v = b with all free variables zero, if one exists.
  std::optional<std::vector<mpq_class>> solve(const std::vector<mpq_class>& b) const {
    if (b.size() != rows_) throw Error(ErrorCode::BadParams, "right-hand side size mismatch");
    RationalMatrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_) = b[r];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<mpq_class> v(cols_);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = aug.at(k, cols_);
    return v;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> data_;
};

}  // namespace fiberforge
