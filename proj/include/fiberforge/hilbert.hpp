#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "fiberforge/groebner.hpp"
#include "fiberforge/linalg.hpp"

namespace fiberforge {

/// All monomials of weighted degree k, sorted descending under the ring order.
inline std::vector<Monomial> monomials_of_degree(const Ring& ring, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  Monomial m;
  const std::size_t n = ring.size();
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (left == 0) {
      out.push_back(m);
      return;
    }
    if (v == n) return;
    const int w = ring.weight(v);
    for (int e = left / w; e >= 0; --e) {
      m.set(v, e);
      self(self, v + 1, left - e * w);
    }
    m.set(v, 0);
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(),
            [&ring](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

/// The degree-k part of an ideal as a matrix: one row per generator times a
/// monomial of complementary degree, columns the degree-k monomials in
/// descending order.
struct GradedSlice {
  int degree = 0;
  std::vector<Monomial> basis;
  std::vector<SparseRow> rows;
};

inline GradedSlice build_slice(const std::vector<Polynomial>& gens, int k, const RingPtr& ring) {
  GradedSlice slice;
  slice.degree = k;
  slice.basis = monomials_of_degree(*ring, k);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  column.reserve(slice.basis.size() * 2);
  for (std::size_t c = 0; c < slice.basis.size(); ++c) column.emplace(slice.basis[c], c);
  std::unordered_map<int, std::vector<Monomial>> multipliers;
  for (const auto& raw : gens) {
    const Polynomial g = raw.in_ring(ring);
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "generator is not homogeneous");
    const int e = k - g.degree();
    if (e < 0) continue;
    auto it = multipliers.find(e);
    if (it == multipliers.end()) it = multipliers.emplace(e, monomials_of_degree(*ring, e)).first;
    for (const auto& m : it->second) {
      std::vector<std::pair<std::size_t, mpq_class>> entries;
      entries.reserve(g.size());
      for (const auto& t : g.terms()) entries.emplace_back(column.at(t.mono * m), t.coeff);
      slice.rows.push_back(integer_row(std::move(entries)));
    }
  }
  return slice;
}

namespace detail {

inline RingPtr ring_of(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  if (ring) return ring;
  if (gens.empty()) throw Error(ErrorCode::BadParams, "a ring is needed for an empty generator set");
  return gens.front().ring();
}

}  // namespace detail

/// Echelon form of the degree-k slice; its rank is the Hilbert function of
/// the ideal in degree k and its pivot columns are the initial monomials.
inline IntegerEchelon slice_echelon(const std::vector<Polynomial>& gens, int k, RingPtr ring = nullptr,
                                    const Budget* budget = nullptr) {
  IntegerEchelon ech;
  ech.set_budget(budget);
  if (gens.empty()) return ech;
  ring = detail::ring_of(gens, ring);
  for (auto& row : build_slice(gens, k, ring).rows) ech.insert(std::move(row));
  return ech;
}

/// dim_K of the degree-k part of the ideal generated by gens, by exact rank.
inline std::size_t hf_exact(const std::vector<Polynomial>& gens, int k, RingPtr ring = nullptr,
                            const Budget* budget = nullptr) {
  if (gens.empty()) return 0;
  return slice_echelon(gens, k, std::move(ring), budget).rank();
}

/// Initial monomials of degree k read off the echelon form of the slice.
inline std::vector<Monomial> initial_monomials_linear(const std::vector<Polynomial>& gens, int k,
                                                      RingPtr ring = nullptr) {
  if (gens.empty()) return {};
  ring = detail::ring_of(gens, ring);
  const auto basis = monomials_of_degree(*ring, k);
  std::vector<Monomial> out;
  for (auto c : slice_echelon(gens, k, ring).pivot_columns()) out.push_back(basis[c]);
  return out;
}

/// Initial monomials of degree k from a Groebner basis truncated at degree k,
/// in descending order.
inline std::vector<Monomial> initial_monomials(const std::vector<Polynomial>& gens, int k,
                                               const RingPtr& ring,
                                               const Budget& budget = Budget::unlimited()) {
  const GroebnerBasis gb = buchberger(gens, ring, k, budget, "initial_monomials");
  const auto leads = gb.leading_monomials();
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(*ring, k)) {
    for (const auto& l : leads) {
      if (l.divides(m)) {
        out.push_back(m);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms.

enum class HFKind { IX2, IX3, W, Fiber };

inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline long long exact_quotient(const mpz_class& num, long den) {
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
  if (r != 0) throw Error(ErrorCode::BadParams, "closed form is not an integer");
  return q.get_si();
}

/// The Hilbert function values with known closed forms.
inline long long hf_closed(HFKind which, int d, int k) {
  if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "closed forms need d >= 4");
  const mpz_class D = d;
  switch (which) {
    case HFKind::IX2:
      if (k != 2) throw Error(ErrorCode::OutOfTable, "IX2 is tabulated at degree 2 only");
      return exact_quotient(2 * (D + 2) * (D + 1) * D * (D - 3), 24);
    case HFKind::IX3: {
      if (k != 3) throw Error(ErrorCode::OutOfTable, "IX3 is tabulated at degree 3 only");
      const mpz_class d2 = D * D, d3 = d2 * D, d4 = d3 * D, d5 = d4 * D, d6 = d5 * D;
      return exact_quotient(14 * d6 + 30 * d5 - 40 * d4 - 210 * d3 - 334 * d2 - 180 * D, 720);
    }
    case HFKind::W: {
      if (k < 0) throw Error(ErrorCode::OutOfTable, "negative degree");
      const long n = static_cast<long>(d) * (d + 1) / 2 - 1;
      return binomial(k + n - 1, k).get_si();
    }
    case HFKind::Fiber:
      if (k < 2) throw Error(ErrorCode::OutOfTable, "the fiber closed form needs k >= 2");
      return binomial(d + 2L * k - 1, 2L * k).get_si();
  }
  throw Error(ErrorCode::OutOfTable, "unknown closed form");
}

inline std::string to_string(HFKind k) {
  switch (k) {
    case HFKind::IX2: return "IX2";
    case HFKind::IX3: return "IX3";
    case HFKind::W: return "W";
    case HFKind::Fiber: return "fiber";
  }
  return "?";
}

}  // namespace fiberforge
