#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fiberforge/error.hpp"
#include "fiberforge/variable.hpp"

namespace fiberforge {

inline constexpr std::size_t kMaxVariables = 64;

/// Dense exponent vector indexed by the variable positions of a Ring. The
/// total degree and a support bitmask are cached.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;

  int operator[](std::size_t v) const noexcept { return exp_[v]; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::uint64_t support() const noexcept { return mask_; }

  void set(std::size_t v, int e) {
    if (v >= kMaxVariables) throw Error(ErrorCode::TooManyVariables, "variable slot out of range");
    if (e < 0 || e > 255) throw Error(ErrorCode::BadParams, "exponent out of range");
    degree_ = static_cast<std::uint16_t>(degree_ - exp_[v] + e);
    exp_[v] = static_cast<Exponent>(e);
    if (e) {
      mask_ |= (std::uint64_t{1} << v);
    } else {
      mask_ &= ~(std::uint64_t{1} << v);
    }
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_ || (mask_ & ~other.mask_)) return false;
    for (std::uint64_t m = mask_; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (exp_[v] > other.exp_[v]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::uint64_t m = b.mask_; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int e = a.exp_[v] + b.exp_[v];
      if (e > 255) throw Error(ErrorCode::BadParams, "exponent overflow");
      out.exp_[v] = static_cast<Exponent>(e);
    }
    out.mask_ = a.mask_ | b.mask_;
    out.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return out;
  }

  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw Error(ErrorCode::BadParams, "monomial quotient is not exact");
    Monomial out = a;
    for (std::uint64_t m = b.mask_; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      out.exp_[v] = static_cast<Exponent>(a.exp_[v] - b.exp_[v]);
      if (!out.exp_[v]) out.mask_ &= ~(std::uint64_t{1} << v);
    }
    out.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return out;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::uint64_t m = b.mask_; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (b.exp_[v] > out.exp_[v]) {
        out.degree_ = static_cast<std::uint16_t>(out.degree_ + b.exp_[v] - out.exp_[v]);
        out.exp_[v] = b.exp_[v];
      }
    }
    out.mask_ = a.mask_ | b.mask_;
    return out;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    return (a.mask_ & b.mask_) == 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.mask_ == b.mask_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = mask_ * 0x9E3779B97F4A7C15ull;
    for (std::uint64_t m = mask_; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      h = (h ^ (static_cast<std::size_t>(exp_[v]) << (v % 48))) * 0x100000001B3ull;
    }
    return h;
  }

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// One block of a monomial order: variables listed in ascending order, with
/// positive grading weights (all 1 unless a weighted grading is needed to make
/// an elimination ideal homogeneous).
struct OrderBlock {
  std::vector<VariableId> variables;
  std::vector<int> weights;

  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// A monomial order. omega_grevlex is a single graded reverse lexicographic
/// block; block_elimination compares earlier blocks first, each block
/// internally weighted-grevlex.
struct OrderSpec {
  enum class Kind { omega_grevlex, block_elimination };

  Kind kind = Kind::omega_grevlex;
  std::vector<OrderBlock> blocks;

  static OrderSpec grevlex(std::vector<VariableId> ascending, std::vector<int> weights = {}) {
    if (weights.empty()) weights.assign(ascending.size(), 1);
    return OrderSpec{Kind::omega_grevlex, {OrderBlock{std::move(ascending), std::move(weights)}}};
  }

  static OrderSpec elimination(std::vector<OrderBlock> blocks) {
    for (auto& b : blocks) {
      if (b.weights.empty()) b.weights.assign(b.variables.size(), 1);
    }
    return OrderSpec{Kind::block_elimination, std::move(blocks)};
  }

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

/// A polynomial ring: a named variable universe with its active monomial
/// order. Variables are laid out block by block, ascending within a block.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(std::string name, OrderSpec order) {
    return std::shared_ptr<const Ring>(new Ring(std::move(name), std::move(order)));
  }

  const std::string& name() const noexcept { return name_; }
  const OrderSpec& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return vars_.size(); }
  const std::vector<VariableId>& variables() const noexcept { return vars_; }
  const VariableId& variable(std::size_t index) const { return vars_.at(index); }
  int weight(std::size_t index) const { return weights_.at(index); }
  bool unit_weights() const noexcept { return unit_weights_; }

  std::optional<std::size_t> find(const VariableId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const VariableId& v) const {
    auto idx = find(v);
    if (!idx) throw Error(ErrorCode::UnknownVariable, v.name() + " not in ring " + name_);
    return *idx;
  }

  bool contains(const VariableId& v) const { return index_.count(v) != 0; }

  int weighted_degree(const Monomial& m) const noexcept {
    if (unit_weights_) return m.degree();
    int total = 0;
    for (std::uint64_t s = m.support(); s; s &= s - 1) {
      const int v = std::countr_zero(s);
      total += weights_[v] * m[v];
    }
    return total;
  }

  /// Total order on monomials of this ring.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    for (const auto& [begin, end] : block_ranges_) {
      int da = 0;
      int db = 0;
      for (std::size_t v = begin; v < end; ++v) {
        da += weights_[v] * a[v];
        db += weights_[v] * b[v];
      }
      if (da != db) return da <=> db;
      for (std::size_t v = begin; v < end; ++v) {
        if (a[v] != b[v]) return b[v] <=> a[v];
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  Monomial one() const { return Monomial{}; }

  Monomial monomial(const VariableId& v, int e = 1) const {
    Monomial m;
    m.set(index_of(v), e);
    return m;
  }

  /// Builds a monomial from (variable, exponent) factors; repeated variables
  /// accumulate.
  Monomial monomial(std::span<const std::pair<VariableId, int>> factors) const {
    Monomial m;
    for (const auto& [v, e] : factors) {
      if (e < 0) throw Error(ErrorCode::BadParams, "negative exponent");
      const auto idx = index_of(v);
      m.set(idx, m[idx] + e);
    }
    return m;
  }

  Monomial monomial(std::initializer_list<std::pair<VariableId, int>> factors) const {
    return monomial(std::span<const std::pair<VariableId, int>>(factors.begin(), factors.size()));
  }

  /// Factors of m, largest variable first under this ring's order.
  std::vector<std::pair<VariableId, int>> factors(const Monomial& m) const {
    std::vector<std::pair<VariableId, int>> out;
    for (const auto& [begin, end] : block_ranges_) {
      for (std::size_t v = end; v-- > begin;) {
        if (m[v]) out.emplace_back(vars_[v], m[v]);
      }
    }
    return out;
  }

  bool same_as(const Ring& other) const noexcept {
    return this == &other || (name_ == other.name_ && order_ == other.order_);
  }

 private:
  Ring(std::string name, OrderSpec order) : name_(std::move(name)), order_(std::move(order)) {
    for (const auto& block : order_.blocks) {
      if (block.weights.size() != block.variables.size()) {
        throw Error(ErrorCode::BadParams, "order block weights do not match its variables");
      }
      const std::size_t begin = vars_.size();
      for (std::size_t k = 0; k < block.variables.size(); ++k) {
        if (block.weights[k] <= 0) throw Error(ErrorCode::BadParams, "weights must be positive");
        if (!index_.emplace(block.variables[k], vars_.size()).second) {
          throw Error(ErrorCode::BadParams, "variable " + block.variables[k].name() + " repeated");
        }
        vars_.push_back(block.variables[k]);
        weights_.push_back(block.weights[k]);
        if (block.weights[k] != 1) unit_weights_ = false;
      }
      block_ranges_.emplace_back(begin, vars_.size());
    }
    if (vars_.size() > kMaxVariables) {
      throw Error(ErrorCode::TooManyVariables,
                  name_ + " has " + std::to_string(vars_.size()) + " variables");
    }
  }

  std::string name_;
  OrderSpec order_;
  std::vector<VariableId> vars_;
  std::vector<int> weights_;
  bool unit_weights_ = true;
  std::vector<std::pair<std::size_t, std::size_t>> block_ranges_;
  std::unordered_map<VariableId, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline std::strong_ordering cmp_monomials(const Ring& ring, const Monomial& a, const Monomial& b) {
  return ring.compare(a, b);
}

/// The standard rings, cached per dimension so that polynomials built in
/// different places share one ring object.
enum class StandardRing {
  R,        // K[x_1..x_d]
  W,        // K[w_ij], w_dd omitted, order omega
  U,        // K[u_ij], order omega on u
  S,        // R[w]: x then w, weights x=1, w=3 (bihomogeneous)
  W_udd,    // W[u_dd], u_dd largest
};

inline RingPtr standard_ring(StandardRing which, int d) {
  if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "d must be at least 2");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, RingPtr> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(static_cast<int>(which), d);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  RingPtr ring;
  switch (which) {
    case StandardRing::R:
      ring = Ring::make("R", OrderSpec::grevlex(x_sequence(d)));
      break;
    case StandardRing::W:
      ring = Ring::make("W", OrderSpec::grevlex(omega_sequence(RingTag::W_w, d)));
      break;
    case StandardRing::U:
      ring = Ring::make("U", OrderSpec::grevlex(omega_sequence(RingTag::U_u, d)));
      break;
    case StandardRing::S: {
      auto vars = x_sequence(d);
      std::vector<int> weights(vars.size(), 1);
      for (const auto& w : omega_sequence(RingTag::W_w, d)) {
        vars.push_back(w);
        weights.push_back(3);
      }
      ring = Ring::make("S", OrderSpec::grevlex(std::move(vars), std::move(weights)));
      break;
    }
    case StandardRing::W_udd: {
      auto vars = omega_sequence(RingTag::W_w, d);
      vars.push_back(VariableId::u(d, d, d));
      ring = Ring::make("W[u_dd]", OrderSpec::grevlex(std::move(vars)));
      break;
    }
  }
  cache.emplace(key, ring);
  return ring;
}

inline RingPtr ring_R(int d) { return standard_ring(StandardRing::R, d); }
inline RingPtr ring_W(int d) { return standard_ring(StandardRing::W, d); }
inline RingPtr ring_U(int d) { return standard_ring(StandardRing::U, d); }
inline RingPtr ring_S(int d) { return standard_ring(StandardRing::S, d); }
inline RingPtr ring_W_udd(int d) { return standard_ring(StandardRing::W_udd, d); }

}  // namespace fiberforge
