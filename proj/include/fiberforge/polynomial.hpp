#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fiberforge/error.hpp"
#include "fiberforge/ring.hpp"

namespace fiberforge {

using Rational = mpq_class;

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept strictly
/// descending under the ring's order; zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({c, Monomial{}});
    return p;
  }

  static Polynomial variable(RingPtr ring, const VariableId& v) {
    Polynomial p(ring);
    p.terms_.push_back({Rational(1), ring->monomial(v)});
    return p;
  }

  static Polynomial term(RingPtr ring, const Rational& c, const Monomial& m) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({c, m});
    return p;
  }

  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const Ring& r = *p.ring_;
    std::sort(terms.begin(), terms.end(),
              [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  /// Largest weighted degree of a term; -1 for the zero polynomial.
  int degree() const {
    int best = -1;
    for (const auto& t : terms_) best = std::max(best, ring_->weighted_degree(t.mono));
    return best;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d0 = ring_->weighted_degree(terms_.front().mono);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return ring_->weighted_degree(t.mono) == d0; });
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    Polynomial out = *this;
    const Rational lc = terms_.front().coeff;
    for (auto& t : out.terms_) t.coeff /= lc;
    return out;
  }

  /// Re-expresses the polynomial in another ring by variable name and
  /// re-sorts under that ring's order.
  Polynomial in_ring(const RingPtr& target) const {
    if (target == ring_) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::uint64_t s = t.mono.support(); s; s &= s - 1) {
        const int v = std::countr_zero(s);
        m.set(target->index_of(ring_->variable(v)), t.mono[v]);
      }
      out.push_back({t.coeff, m});
    }
    return from_terms(target, std::move(out));
  }

  bool uses_only(std::uint64_t allowed_support) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
      return (t.mono.support() & ~allowed_support) == 0;
    });
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  Polynomial& operator+=(const Polynomial& g) {
    check_ring(g);
    terms_ = merge(*ring_, terms_, 0, Rational(1), nullptr, g.terms_);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& g) {
    check_ring(g);
    terms_ = merge(*ring_, terms_, 0, Rational(-1), nullptr, g.terms_);
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
  }

  Polynomial& operator*=(const Polynomial& g) {
    check_ring(g);
    *this = product(*this, g);
    return *this;
  }

  /// this -= c * m * g, the elementary reduction step.
  void sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g) {
    check_ring(g);
    terms_ = merge(*ring_, terms_, 0, Rational(-c), &m, g.terms_);
  }

  Polynomial mul_term(const Rational& c, const Monomial& m) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono * m});
    return out;
  }

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    return product(f, g);
  }
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (!f.ring_->same_as(*g.ring_) || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t k = 0; k < f.terms_.size(); ++k) {
      if (f.terms_[k].mono != g.terms_[k].mono || f.terms_[k].coeff != g.terms_[k].coeff) {
        return false;
      }
    }
    return true;
  }

  Polynomial pow(int e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  // Direct access for reducers that manage their own term buffers.
  std::vector<Term>& mutable_terms() noexcept { return terms_; }

  /// a[start..] + c * m * b, both inputs descending.
  static std::vector<Term> merge(const Ring& ring, std::span<const Term> a, std::size_t start,
                                 const Rational& c, const Monomial* m, std::span<const Term> b) {
    std::vector<Term> out;
    out.reserve(a.size() - start + b.size());
    std::size_t i = start;
    std::size_t j = 0;
    Monomial shifted;
    auto bmono = [&](std::size_t k) -> const Monomial& {
      if (!m) return b[k].mono;
      shifted = b[k].mono * *m;
      return shifted;
    };
    while (i < a.size() && j < b.size()) {
      const Monomial& mb = bmono(j);
      const auto cmp = ring.compare(a[i].mono, mb);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({c * b[j].coeff, mb});
        ++j;
      } else {
        Rational s = a[i].coeff + c * b[j].coeff;
        if (s != 0) out.push_back({std::move(s), a[i].mono});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({c * b[j].coeff, bmono(j)});
    return out;
  }

 private:
  void check_ring(const Polynomial& g) const {
    if (g.ring_ != ring_ && !ring_->same_as(*g.ring_)) {
      throw Error(ErrorCode::RingMismatch, ring_->name() + " vs " + g.ring_->name());
    }
  }

  static Polynomial product(const Polynomial& f, const Polynomial& g) {
    Polynomial out(f.ring_);
    if (f.is_zero() || g.is_zero()) return out;
    const Polynomial& small = f.size() <= g.size() ? f : g;
    const Polynomial& large = f.size() <= g.size() ? g : f;
    for (const auto& t : small.terms_) {
      out.terms_ = merge(*out.ring_, out.terms_, 0, t.coeff, &t.mono, large.terms_);
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::pair<Rational, Monomial> leading_term(const Polynomial& f) {
  const auto& t = f.leading_term();
  return {t.coeff, t.mono};
}

/// A ring map given by the images of the source variables.
class Homomorphism {
 public:
  Homomorphism(RingPtr source, RingPtr target, const std::map<VariableId, Polynomial>& images)
      : source_(std::move(source)), target_(std::move(target)), images_(source_->size()) {
    for (const auto& [v, img] : images) {
      if (!img.ring()->same_as(*target_)) {
        throw Error(ErrorCode::RingMismatch, "image of " + v.name() + " not in " + target_->name());
      }
      if (auto idx = source_->find(v)) images_[*idx] = img;
    }
  }

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }

  const Polynomial& image(std::size_t source_index) const {
    if (!images_.at(source_index)) {
      throw Error(ErrorCode::PartialHomomorphism,
                  "no image for " + source_->variable(source_index).name());
    }
    return *images_[source_index];
  }

  bool has_image(std::size_t source_index) const { return images_.at(source_index).has_value(); }

  Polynomial operator()(const Polynomial& f) const {
    if (!f.ring()->same_as(*source_)) {
      throw Error(ErrorCode::RingMismatch, f.ring()->name() + " is not " + source_->name());
    }
    Polynomial result(target_);
    std::map<std::pair<std::size_t, int>, Polynomial> powers;
    auto power = [&](std::size_t v, int e) -> const Polynomial& {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, image(v).pow(e)).first;
      return it->second;
    };
    for (const auto& t : f.terms()) {
      Polynomial prod = Polynomial::constant(target_, t.coeff);
      for (std::uint64_t s = t.mono.support(); s; s &= s - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(s));
        prod *= power(v, t.mono[v]);
      }
      result += prod;
    }
    return result;
  }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<std::optional<Polynomial>> images_;
};

inline Polynomial apply_hom(const Polynomial& f, const Homomorphism& hom) { return hom(f); }

}  // namespace fiberforge
