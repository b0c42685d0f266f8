#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fiberforge/error.hpp"

namespace fiberforge {

/// Which family a variable belongs to: x_i of R, w_ij of W, u_ij of U, or the
/// auxiliary Rees variable t.
enum class RingTag : std::uint8_t { R_x, W_w, U_u, Aux_t };

/// A variable name. Pair indices are stored with i <= j, so w_ji and w_ij are
/// the same object.
class VariableId {
 public:
  static VariableId x(int i) {
    if (i < 1) throw Error(ErrorCode::BadIndex, "x index must be >= 1");
    return VariableId(RingTag::R_x, i, 0);
  }

  static VariableId t() { return VariableId(RingTag::Aux_t, 0, 0); }

  /// w_ij of the d x d matrix with zero (d,d) entry; w_dd does not exist.
  static VariableId w(int i, int j, int d) {
    check_pair(i, j, d);
    if (i == d && j == d) throw Error(ErrorCode::BadIndex, "w_dd does not exist");
    return pair(RingTag::W_w, i, j);
  }

  static VariableId u(int i, int j, int d) {
    check_pair(i, j, d);
    return pair(RingTag::U_u, i, j);
  }

  RingTag ring() const noexcept { return ring_; }
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }
  bool is_pair() const noexcept { return ring_ == RingTag::W_w || ring_ == RingTag::U_u; }
  int max_index() const noexcept { return j_; }
  int min_index() const noexcept { return i_; }
  bool is_diagonal() const noexcept { return is_pair() && i_ == j_; }

  friend auto operator<=>(const VariableId&, const VariableId&) = default;

  std::string name() const {
    switch (ring_) {
      case RingTag::R_x: return "x[" + std::to_string(i_) + "]";
      case RingTag::Aux_t: return "t";
      case RingTag::W_w: return "w[" + std::to_string(i_) + "," + std::to_string(j_) + "]";
      case RingTag::U_u: return "u[" + std::to_string(i_) + "," + std::to_string(j_) + "]";
    }
    return "?";
  }

 private:
  VariableId(RingTag ring, int i, int j) : ring_(ring), i_(i), j_(j) {}

  static VariableId pair(RingTag tag, int i, int j) {
    if (i > j) std::swap(i, j);
    return VariableId(tag, i, j);
  }

  static void check_pair(int i, int j, int d) {
    if (i < 1 || j < 1 || i > d || j > d) {
      throw Error(ErrorCode::BadIndex, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") outside 1.." + std::to_string(d));
    }
  }

  RingTag ring_;
  int i_;
  int j_;
};

/// The variable comparison of the order omega: by larger index first, then by
/// smaller index.
inline std::strong_ordering cmp_vars_omega(const VariableId& a, const VariableId& b) {
  if (a.ring() != b.ring() || !a.is_pair() || !b.is_pair()) {
    throw Error(ErrorCode::IncomparableVariables, a.name() + " vs " + b.name());
  }
  if (auto c = a.max_index() <=> b.max_index(); c != 0) return c;
  return a.min_index() <=> b.min_index();
}

/// Ascending omega sequence w_11 < w_12 < w_22 < w_13 < ... (w_dd omitted for
/// W, included for U).
inline std::vector<VariableId> omega_sequence(RingTag tag, int d) {
  std::vector<VariableId> out;
  for (int hi = 1; hi <= d; ++hi) {
    for (int lo = 1; lo <= hi; ++lo) {
      if (tag == RingTag::W_w) {
        if (lo == d && hi == d) continue;
        out.push_back(VariableId::w(lo, hi, d));
      } else if (tag == RingTag::U_u) {
        out.push_back(VariableId::u(lo, hi, d));
      } else {
        throw Error(ErrorCode::IncomparableVariables, "omega sequence needs a pair ring");
      }
    }
  }
  return out;
}

/// x_1 < x_2 < ... < x_d.
inline std::vector<VariableId> x_sequence(int d) {
  std::vector<VariableId> out;
  for (int i = 1; i <= d; ++i) out.push_back(VariableId::x(i));
  return out;
}

}  // namespace fiberforge

template <>
struct std::hash<fiberforge::VariableId> {
  std::size_t operator()(const fiberforge::VariableId& v) const noexcept {
    return (static_cast<std::size_t>(v.ring()) << 20) ^ (static_cast<std::size_t>(v.i()) << 10) ^
           static_cast<std::size_t>(v.j());
  }
};
