#pragma once

// Small, deliberately naive reimplementations used to cross-check the library.

#include <gmpxx.h>
#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

#include "fiberforge/fiberforge.hpp"

namespace oracle {

using fiberforge::Monomial;
using fiberforge::Polynomial;
using fiberforge::Ring;
using fiberforge::RingPtr;

using Exponents = std::vector<int>;
using Naive = std::map<Exponents, mpq_class>;

inline Exponents exponents(const Ring& ring, const Monomial& m) {
  Exponents e(ring.size());
  for (std::size_t v = 0; v < ring.size(); ++v) e[v] = m[v];
  return e;
}

inline Naive naive(const Polynomial& f) {
  Naive out;
  for (const auto& t : f.terms()) out[exponents(*f.ring(), t.mono)] += t.coeff;
  return out;
}

inline void prune(Naive& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Naive add(Naive a, const Naive& b, int sign = 1) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  prune(a);
  return a;
}

inline Naive mul(const Naive& a, const Naive& b) {
  Naive out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out[e] += ca * cb;
    }
  }
  prune(out);
  return out;
}

/// Weighted degree, then the reverse-lexicographic tie break read from the
/// smallest variable: a larger exponent there makes the monomial smaller.
inline int grevlex_cmp(const Exponents& a, const Exponents& b, const std::vector<int>& weights) {
  long da = 0, db = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    da += static_cast<long>(weights[k]) * a[k];
    db += static_cast<long>(weights[k]) * b[k];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  }
  return 0;
}

/// Rank over Q by plain Gaussian elimination on a dense copy.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Dimension of the degree-k part of the ideal, by dense rank of all
/// generator multiples.
inline std::size_t dense_hf(const std::vector<Polynomial>& gens, int k) {
  const RingPtr ring = gens.front().ring();
  const auto basis = fiberforge::monomials_of_degree(*ring, k);
  std::map<Exponents, std::size_t> col;
  for (std::size_t c = 0; c < basis.size(); ++c) col[exponents(*ring, basis[c])] = c;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    if (g.degree() > k) continue;
    for (const auto& m : fiberforge::monomials_of_degree(*ring, k - g.degree())) {
      std::vector<mpq_class> row(basis.size());
      for (const auto& t : g.terms()) row[col.at(exponents(*ring, t.mono * m))] += t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return dense_rank(std::move(rows));
}

/// A random polynomial with small integer coefficients.
inline Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> e(0, max_exp);
  Polynomial f(ring);
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t v = 0; v < ring->size(); ++v) m.set(v, e(rng));
    f += Polynomial::term(ring, coeff(rng), m);
  }
  return f;
}

}  // namespace oracle

#define EXPECT_FF_ERROR(stmt, expected_code)                                   \
  do {                                                                         \
    try {                                                                      \
      stmt;                                                                    \
      ADD_FAILURE() << "no error thrown by " #stmt;                            \
    } catch (const fiberforge::Error& e) {                                     \
      EXPECT_EQ(e.code(), fiberforge::ErrorCode::expected_code) << e.what();   \
    }                                                                          \
  } while (0)
