#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fiberforge/budget.hpp"
#include "fiberforge/polynomial.hpp"

namespace fiberforge {

/// A reduced, monic Groebner basis sorted by ascending leading monomial. When
/// truncation is set to D the basis is only valid up to degree D.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  std::optional<int> truncation;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(g.leading_monomial());
    return out;
  }
};

namespace detail {

/// Leading data cached for fast divisor lookup.
struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  Rational lc;
};

inline const Reducer* find_divisor(const std::vector<Reducer>& reducers, const Monomial& m) {
  for (const auto& r : reducers) {
    if (r.lm.divides(m)) return &r;
  }
  return nullptr;
}

/// Complete division of f by the reducers. With `top_only` the loop stops at
/// the first irreducible leading term.
inline Polynomial reduce(const Polynomial& f, const std::vector<Reducer>& reducers,
                         const Budget* budget, const std::string& stage, bool top_only = false) {
  const Ring& ring = *f.ring();
  std::vector<Term> p(f.terms().begin(), f.terms().end());
  std::vector<Term> rem;
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (pos < p.size()) {
    if (budget && budget->limited() && (++steps & 255) == 0 && budget->expired()) {
      throw BudgetExceeded(stage, reducers.size(), 0, ring.weighted_degree(p[pos].mono));
    }
    const Term& lead = p[pos];
    const Reducer* r = find_divisor(reducers, lead.mono);
    if (!r) {
      if (top_only) break;
      rem.push_back(lead);
      ++pos;
      continue;
    }
    const Monomial q = lead.mono / r->lm;
    const Rational c = lead.coeff / r->lc;
    auto terms = r->poly->terms();
    // The leading terms cancel by construction; merge the tails only.
    p = Polynomial::merge(ring, p, pos + 1, Rational(-c), &q, terms.subspan(1));
    pos = 0;
  }
  for (std::size_t k = pos; k < p.size(); ++k) rem.push_back(std::move(p[k]));
  Polynomial out(f.ring());
  out.mutable_terms() = std::move(rem);
  return out;
}

inline std::vector<Reducer> reducers_of(const std::vector<Polynomial>& polys) {
  std::vector<Reducer> out;
  out.reserve(polys.size());
  for (const auto& g : polys) {
    if (!g.is_zero()) out.push_back({&g, g.leading_monomial(), g.leading_coefficient()});
  }
  return out;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(Rational(1) / f.leading_coefficient(), l / f.leading_monomial());
  a.sub_mul_term(Rational(1) / g.leading_coefficient(), l / g.leading_monomial(), g);
  return a;
}

/// Fully inter-reduces a set whose leading monomials form a minimal generating
/// set of the initial ideal; returns monic elements sorted by leading monomial.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  if (basis.empty()) return basis;
  const Ring& ring = *basis.front().ring();
  std::sort(basis.begin(), basis.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal) {
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Reducer> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) {
        others.push_back({&minimal[m], minimal[m].leading_monomial(),
                          minimal[m].leading_coefficient()});
      }
    }
    const Term lead = minimal[k].leading_term();
    Polynomial tail(minimal[k].ring());
    tail.mutable_terms().assign(minimal[k].terms().begin() + 1, minimal[k].terms().end());
    Polynomial reduced = reduce(tail, others, nullptr, "interreduce");
    reduced += Polynomial::term(minimal[k].ring(), lead.coeff, lead.mono);
    out.push_back(reduced.monic());
  }
  return out;
}

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy. With max_degree = D only S-pairs and inputs of
/// (weighted) degree at most D are processed, which requires homogeneous
/// input.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                std::optional<int> max_degree = std::nullopt,
                                const Budget& budget = Budget::unlimited(),
                                const std::string& stage = "buchberger") {
  std::vector<Polynomial> pending;
  for (const auto& g : gens) {
    Polynomial h = g.in_ring(ring);
    if (h.is_zero()) continue;
    if (max_degree && !h.is_homogeneous()) {
      throw Error(ErrorCode::TruncationNeedsHomogeneous, "generator is not homogeneous");
    }
    pending.push_back(h.monic());
  }
  const Ring& r = *ring;
  std::stable_sort(pending.begin(), pending.end(), [&r](const Polynomial& a, const Polynomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return r.less(a.leading_monomial(), b.leading_monomial());
  });

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    int degree;
  };
  auto pair_less = [&r](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (auto c = r.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);

  std::vector<Polynomial> basis;
  std::vector<Monomial> lms;
  std::vector<bool> active;

  auto update = [&](std::size_t h) {
    const Monomial& lh = lms[h];
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active[g]) continue;
      const Monomial l = lcm(lms[g], lh);
      candidates.push_back({g, h, l, r.weighted_degree(l)});
    }
    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& p = candidates[a];
      bool keep = coprime(lms[p.i], lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        }
        for (const auto& q : kept) {
          if (!keep) break;
          if (q.lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    // Old pairs made redundant by the new leading monomial.
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (lh.divides(it->lcm) && lcm(lms[it->i], lh) != it->lcm &&
          lcm(lms[it->j], lh) != it->lcm) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& p : kept) {
      if (coprime(lms[p.i], lh)) continue;
      if (max_degree && p.degree > *max_degree) continue;
      pairs.insert(p);
    }
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g] && lh.divides(lms[g])) active[g] = false;
    }
  };

  std::size_t next_input = 0;
  std::size_t iterations = 0;
  while (next_input < pending.size() || !pairs.empty()) {
    if (budget.limited() && (++iterations & 7) == 0 && budget.expired()) {
      const int deg = pairs.empty() ? pending[next_input].degree() : pairs.begin()->degree;
      throw BudgetExceeded(stage, basis.size(), pairs.size(), deg);
    }
    Polynomial h(ring);
    const bool take_input =
        next_input < pending.size() &&
        (pairs.empty() || pending[next_input].degree() <= pairs.begin()->degree);
    if (take_input) {
      h = pending[next_input++];
      if (max_degree && h.degree() > *max_degree) continue;
    } else {
      const Pair p = *pairs.begin();
      pairs.erase(pairs.begin());
      h = detail::s_polynomial(basis[p.i], basis[p.j]);
    }
    std::vector<detail::Reducer> reducers;
    for (std::size_t g = 0; g < basis.size(); ++g) {
      if (active[g]) reducers.push_back({&basis[g], lms[g], basis[g].leading_coefficient()});
    }
    h = detail::reduce(h, reducers, &budget, stage);
    if (h.is_zero()) continue;
    h = h.monic();
    lms.push_back(h.leading_monomial());
    basis.push_back(std::move(h));
    active.push_back(true);
    update(basis.size() - 1);
  }

  std::vector<Polynomial> survivors;
  for (std::size_t g = 0; g < basis.size(); ++g) {
    if (active[g]) survivors.push_back(basis[g]);
  }
  return GroebnerBasis{ring, detail::interreduce(std::move(survivors)), max_degree};
}

/// Remainder of complete division by the basis.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  const Polynomial g = f.in_ring(gb.ring);
  if (gb.truncation && g.degree() > *gb.truncation) {
    throw Error(ErrorCode::BeyondTruncation, "degree " + std::to_string(g.degree()) +
                                                 " exceeds truncation " +
                                                 std::to_string(*gb.truncation));
  }
  return detail::reduce(g, detail::reducers_of(gb.elements), nullptr, "normal_form");
}

inline bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

/// Ideal equality by mutual membership against each side's Groebner basis.
inline bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                        const RingPtr& ring, const Budget& budget = Budget::unlimited()) {
  const GroebnerBasis ga = buchberger(a, ring, std::nullopt, budget, "ideal_equal");
  const GroebnerBasis gb = buchberger(b, ring, std::nullopt, budget, "ideal_equal");
  for (const auto& f : b) {
    if (!in_ideal(f, ga)) return false;
  }
  for (const auto& f : a) {
    if (!in_ideal(f, gb)) return false;
  }
  return true;
}

/// Elimination ring: the target variables form the first (eliminated) block,
/// the source variables the second. Source weights equal the degrees of their
/// images so that the graph ideal is homogeneous.
inline RingPtr elimination_ring(const Homomorphism& hom) {
  const Ring& target = *hom.target();
  const Ring& source = *hom.source();
  OrderBlock eliminated;
  for (std::size_t k = 0; k < target.size(); ++k) {
    eliminated.variables.push_back(target.variable(k));
    eliminated.weights.push_back(target.weight(k));
  }
  OrderBlock kept;
  for (std::size_t k = 0; k < source.size(); ++k) {
    kept.variables.push_back(source.variable(k));
    const Polynomial& img = hom.image(k);
    kept.weights.push_back(img.is_zero() ? 1 : std::max(1, img.degree()));
  }
  return Ring::make("elim(" + target.name() + ">" + source.name() + ")",
                    OrderSpec::elimination({std::move(eliminated), std::move(kept)}));
}

/// Generators of the kernel of a ring map by block elimination, returned as
/// the reduced Groebner basis of the kernel in the source ring. Every output is
/// checked to map to zero.
inline std::vector<Polynomial> kernel_of_hom(const Homomorphism& hom,
                                             const Budget& budget = Budget::unlimited()) {
  const RingPtr joint = elimination_ring(hom);
  const Ring& source = *hom.source();
  std::vector<Polynomial> graph;
  for (std::size_t k = 0; k < source.size(); ++k) {
    Polynomial v = Polynomial::variable(joint, source.variable(k));
    graph.push_back(v - hom.image(k).in_ring(joint));
  }
  const GroebnerBasis gb = buchberger(graph, joint, std::nullopt, budget, "kernel_of_hom");
  std::uint64_t source_mask = 0;
  for (std::size_t k = 0; k < source.size(); ++k) {
    source_mask |= std::uint64_t{1} << joint->index_of(source.variable(k));
  }
  std::vector<Polynomial> kernel;
  for (const auto& g : gb.elements) {
    if (!g.uses_only(source_mask)) continue;
    Polynomial f = g.in_ring(hom.source());
    if (!hom(f).is_zero()) {
      throw Error(ErrorCode::BadParams, "elimination produced a non-kernel element");
    }
    kernel.push_back(std::move(f));
  }
  return buchberger(kernel, hom.source(), std::nullopt, budget, "kernel_of_hom").elements;
}

}  // namespace fiberforge
