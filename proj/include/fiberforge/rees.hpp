#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "fiberforge/hilbert.hpp"
#include "fiberforge/lambda.hpp"

namespace fiberforge {

/// The quadrics g_ij in the order of the w variables.
struct QuadricIdeal {
  int d = 0;
  std::vector<VariableId> labels;
  std::vector<Polynomial> gens;
};

inline QuadricIdeal build_ideal_I(int d) {
  if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "d must be at least 4");
  QuadricIdeal out;
  out.d = d;
  out.labels = omega_sequence(RingTag::W_w, d);
  for (const auto& v : out.labels) out.gens.push_back(quadric(v.i(), v.j(), d));
  return out;
}

struct PowerCheck {
  int k = 0;
  std::size_t rank = 0;
  std::size_t full = 0;
  bool equal() const noexcept { return rank == full; }
};

/// Compares the span of all k-fold products of the g_ij with the space of
/// forms of degree 2k.
inline PowerCheck power_check(int d, int k) {
  if (k < 1) throw Error(ErrorCode::BadParams, "exponent must be positive");
  const auto ideal = build_ideal_I(d);
  const RingPtr r = ring_R(d);
  std::vector<Polynomial> products{Polynomial::constant(r, 1)};
  std::vector<std::size_t> last{0};
  for (int step = 0; step < k; ++step) {
    std::vector<Polynomial> next;
    std::vector<std::size_t> next_last;
    for (std::size_t p = 0; p < products.size(); ++p) {
      for (std::size_t g = last[p]; g < ideal.gens.size(); ++g) {
        next.push_back(products[p] * ideal.gens[g]);
        next_last.push_back(g);
      }
    }
    products = std::move(next);
    last = std::move(next_last);
  }
  PowerCheck out;
  out.k = k;
  out.rank = hf_exact(products, 2 * k, r);
  out.full = static_cast<std::size_t>(binomial(d + 2L * k - 1, 2L * k).get_si());
  return out;
}

/// Columns of linear forms (theta_k) with sum_k theta_k g_k = 0.
struct SyzygyMatrix {
  int d = 0;
  std::vector<VariableId> rows;
  std::vector<std::vector<Polynomial>> columns;
};

namespace detail {

/// Scales a rational vector to coprime integers with a positive first nonzero
/// entry.
inline void make_primitive(std::vector<mpq_class>& v) {
  mpz_class den = 1;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& q : v) {
    q *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (g == 0) return;
  for (const auto& q : v) {
    if (q != 0) {
      if (q < 0) g = -g;
      break;
    }
  }
  for (auto& q : v) q /= g;
}

}  // namespace detail

/// A basis of the linear syzygies of the g_ij from the reduced echelon form of
/// the evaluation map R_1^n -> R_3.
inline SyzygyMatrix linear_syzygies(int d) {
  const auto ideal = build_ideal_I(d);
  const RingPtr r = ring_R(d);
  const std::size_t n = ideal.gens.size();
  const auto cubics = monomials_of_degree(*r, 3);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t k = 0; k < cubics.size(); ++k) row_of.emplace(cubics[k], k);
  const auto xs = x_sequence(d);
  RationalMatrix a(cubics.size(), n * xs.size());
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t v = 0; v < xs.size(); ++v) {
      const Polynomial p = Polynomial::variable(r, xs[v]) * ideal.gens[g];
      for (const auto& t : p.terms()) a.at(row_of.at(t.mono), g * xs.size() + v) += t.coeff;
    }
  }
  SyzygyMatrix out;
  out.d = d;
  out.rows = ideal.labels;
  for (auto vec : a.nullspace()) {
    detail::make_primitive(vec);
    std::vector<Polynomial> column;
    for (std::size_t g = 0; g < n; ++g) {
      Polynomial entry(r);
      for (std::size_t v = 0; v < xs.size(); ++v) {
        const mpq_class& c = vec[g * xs.size() + v];
        if (c != 0) entry += Polynomial::term(r, c, r->monomial(xs[v]));
      }
      column.push_back(std::move(entry));
    }
    out.columns.push_back(std::move(column));
  }
  return out;
}

/// The entries of the row vector w . theta, in S.
inline std::vector<Polynomial> sym_algebra_ideal(int d) {
  const auto theta = linear_syzygies(d);
  const RingPtr s = ring_S(d);
  std::vector<Polynomial> out;
  for (const auto& column : theta.columns) {
    Polynomial f(s);
    for (std::size_t g = 0; g < column.size(); ++g) {
      f += column[g].in_ring(s) * Polynomial::variable(s, theta.rows[g]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// The symmetric-algebra relations followed by the generators of Lambda, in S.
inline std::vector<Polynomial> rees_ideal(int d) {
  auto out = sym_algebra_ideal(d);
  const RingPtr s = ring_S(d);
  for (const auto& g : lambda_polynomials(d)) out.push_back(g.in_ring(s));
  return out;
}

/// K[x_1..x_d, t] with t of weight one, largest.
inline RingPtr ring_Rt(int d) {
  auto vars = x_sequence(d);
  vars.push_back(VariableId::t());
  return Ring::make("R[t]", OrderSpec::grevlex(std::move(vars)));
}

/// x_i -> x_i, w_ij -> g_ij t.
inline Homomorphism rees_map(int d) {
  const RingPtr rt = ring_Rt(d);
  const Polynomial t = Polynomial::variable(rt, VariableId::t());
  std::map<VariableId, Polynomial> images;
  for (const auto& x : x_sequence(d)) images.emplace(x, Polynomial::variable(rt, x));
  for (const auto& v : omega_sequence(RingTag::W_w, d)) {
    images.emplace(v, quadric(v.i(), v.j(), d).in_ring(rt) * t);
  }
  return Homomorphism(ring_S(d), rt, images);
}

/// The kernel of rees_map by eliminating t from (w_ij - t g_ij), returned as a
/// reduced Groebner basis in S.
inline std::vector<Polynomial> rees_kernel_oracle(int d, const Budget& budget = Budget::unlimited()) {
  const RingPtr s = ring_S(d);
  OrderBlock t_block{{VariableId::t()}, {1}};
  OrderBlock s_block;
  for (std::size_t k = 0; k < s->size(); ++k) {
    s_block.variables.push_back(s->variable(k));
    s_block.weights.push_back(s->weight(k));
  }
  const RingPtr joint = Ring::make("elim(t>S)", OrderSpec::elimination({t_block, s_block}));
  const Polynomial t = Polynomial::variable(joint, VariableId::t());
  std::vector<Polynomial> graph;
  for (const auto& v : omega_sequence(RingTag::W_w, d)) {
    graph.push_back(Polynomial::variable(joint, v) - t * quadric(v.i(), v.j(), d).in_ring(joint));
  }
  const GroebnerBasis gb = buchberger(graph, joint, std::nullopt, budget, "rees_kernel_oracle");
  const std::uint64_t t_bit = std::uint64_t{1} << joint->index_of(VariableId::t());
  const Homomorphism map = rees_map(d);
  std::vector<Polynomial> kernel;
  for (const auto& g : gb.elements) {
    if (!g.uses_only(~t_bit)) continue;
    Polynomial f = g.in_ring(s);
    if (!map(f).is_zero()) throw Error(ErrorCode::BadParams, "elimination produced a non-kernel element");
    kernel.push_back(std::move(f));
  }
  return buchberger(kernel, s, std::nullopt, budget, "rees_kernel_oracle").elements;
}

/// W[u_dd] -> R extending phi_W by u_dd -> x_d^2.
inline Homomorphism witness_map(int d) {
  const RingPtr r = ring_R(d);
  std::map<VariableId, Polynomial> images;
  for (const auto& v : omega_sequence(RingTag::W_w, d)) images.emplace(v, quadric(v.i(), v.j(), d));
  const Polynomial xd = Polynomial::variable(r, VariableId::x(d));
  images.emplace(VariableId::u(d, d, d), xd * xd);
  return Homomorphism(ring_W_udd(d), r, images);
}

/// h = u_dd^2 - sum a_s g_s with phi_W(sum a_s g_s) = x_d^4, the g_s running
/// over the quadratic monomials of W.
inline Polynomial integrality_witness(int d) {
  const RingPtr w = ring_W(d);
  const RingPtr r = ring_R(d);
  const Homomorphism phi = phi_W(d);
  const auto quads = monomials_of_degree(*w, 2);
  const auto quartics = monomials_of_degree(*r, 4);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t k = 0; k < quartics.size(); ++k) row_of.emplace(quartics[k], k);
  RationalMatrix a(quartics.size(), quads.size());
  for (std::size_t c = 0; c < quads.size(); ++c) {
    const Polynomial image = phi(Polynomial::term(w, 1, quads[c]));
    for (const auto& t : image.terms()) a.at(row_of.at(t.mono), c) += t.coeff;
  }
  std::vector<mpq_class> b(quartics.size());
  b[row_of.at(r->monomial(VariableId::x(d), 4))] = 1;
  const auto sol = a.solve(b);
  if (!sol) throw Error(ErrorCode::BadParams, "x_d^4 is not in the span of the products");
  const RingPtr wu = ring_W_udd(d);
  Polynomial h = Polynomial::variable(wu, VariableId::u(d, d, d)).pow(2);
  for (std::size_t c = 0; c < quads.size(); ++c) {
    if ((*sol)[c] != 0) h -= Polynomial::term(w, (*sol)[c], quads[c]).in_ring(wu);
  }
  return h;
}

}  // namespace fiberforge
