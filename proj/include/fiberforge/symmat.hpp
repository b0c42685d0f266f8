#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fiberforge/polynomial.hpp"

namespace fiberforge {

/// The generic symmetric d x d matrix over W (entry (d,d) is zero) or over U.
class SymMatrix {
 public:
  SymMatrix(int d, RingTag tag) : d_(d), tag_(tag) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "matrix dimension below 2");
    if (tag == RingTag::W_w) {
      ring_ = ring_W(d);
    } else if (tag == RingTag::U_u) {
      ring_ = ring_U(d);
    } else {
      throw Error(ErrorCode::BadParams, "symmetric matrices live over W or U");
    }
  }

  int d() const noexcept { return d_; }
  RingTag tag() const noexcept { return tag_; }
  const RingPtr& ring() const noexcept { return ring_; }

  Polynomial entry(int i, int j) const {
    check(i);
    check(j);
    if (tag_ == RingTag::W_w) {
      if (i == d_ && j == d_) return Polynomial(ring_);
      return Polynomial::variable(ring_, VariableId::w(i, j, d_));
    }
    return Polynomial::variable(ring_, VariableId::u(i, j, d_));
  }

  void check(int i) const {
    if (i < 1 || i > d_) {
      throw Error(ErrorCode::BadIndex, "index " + std::to_string(i) + " outside 1.." +
                                           std::to_string(d_));
    }
  }

 private:
  int d_;
  RingTag tag_;
  RingPtr ring_;
};

using IndexPair = std::pair<int, int>;

/// A 2x2 minor with its rows and columns in the order written, [a1 a2|b1 b2].
struct Minor2 {
  IndexPair rows;
  IndexPair cols;
  int a_class = 0;
  Polynomial value;

  bool principal() const noexcept {
    return std::minmax(rows.first, rows.second) == std::minmax(cols.first, cols.second);
  }

  std::string bracket() const {
    if (rows == cols) return "[" + std::to_string(rows.first) + std::to_string(rows.second) + "]";
    return "[" + std::to_string(rows.first) + std::to_string(rows.second) + "|" +
           std::to_string(cols.first) + std::to_string(cols.second) + "]";
  }
};

inline int a_class_of(IndexPair rows, IndexPair cols) {
  int shared = 0;
  for (int r : {rows.first, rows.second}) {
    if (r == cols.first || r == cols.second) ++shared;
  }
  return shared;
}

/// Determinant of rows (a1,a2) by columns (b1,b2), taken in exactly that order.
inline Minor2 minor2(const SymMatrix& mat, IndexPair rows, IndexPair cols) {
  for (int i : {rows.first, rows.second, cols.first, cols.second}) mat.check(i);
  if (rows.first == rows.second || cols.first == cols.second) {
    throw Error(ErrorCode::BadIndex, "repeated row or column in a 2x2 minor");
  }
  Polynomial v = mat.entry(rows.first, cols.first) * mat.entry(rows.second, cols.second) -
                 mat.entry(rows.first, cols.second) * mat.entry(rows.second, cols.first);
  return Minor2{rows, cols, a_class_of(rows, cols), std::move(v)};
}

/// Every minor sharing no row and no column with m inside some 4x4 principal
/// submatrix that contains m, by ascending ambient index set.
inline std::vector<Minor2> complements_of(const SymMatrix& mat, const Minor2& m) {
  std::vector<int> used{m.rows.first, m.rows.second, m.cols.first, m.cols.second};
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> others;
  for (int i = 1; i <= mat.d(); ++i) {
    if (!std::binary_search(used.begin(), used.end(), i)) others.push_back(i);
  }
  const std::size_t need = 4 - used.size();
  std::vector<std::vector<int>> ambients;
  if (need == 0) {
    ambients.push_back(used);
  } else if (need == 1) {
    for (int a : others) ambients.push_back({a});
  } else {
    for (std::size_t x = 0; x < others.size(); ++x) {
      for (std::size_t y = x + 1; y < others.size(); ++y) ambients.push_back({others[x], others[y]});
    }
  }
  std::vector<Minor2> out;
  for (auto extra : ambients) {
    std::vector<int> q = used;
    if (need > 0) q.insert(q.end(), extra.begin(), extra.end());
    std::sort(q.begin(), q.end());
    std::vector<int> r;
    std::vector<int> c;
    for (int i : q) {
      if (i != m.rows.first && i != m.rows.second) r.push_back(i);
      if (i != m.cols.first && i != m.cols.second) c.push_back(i);
    }
    out.push_back(minor2(mat, {r[0], r[1]}, {c[0], c[1]}));
  }
  return out;
}

/// 0 when the one diagonal entry of an A1 minor sits on the minor's main
/// diagonal, 1 when it sits on the antidiagonal.
inline int delta(const Minor2& m) {
  if (a_class_of(m.rows, m.cols) != 1) throw Error(ErrorCode::NotA1, m.bracket() + " is not in A1");
  const int row_pos = (m.rows.first == m.cols.first || m.rows.first == m.cols.second) ? 0 : 1;
  const int r = row_pos == 0 ? m.rows.first : m.rows.second;
  const int col_pos = m.cols.first == r ? 0 : 1;
  return row_pos == col_pos ? 0 : 1;
}

/// Two complementary principal minors: {[ij],[kl]} and the like.
struct PrincipalPartition {
  IndexPair first;
  IndexPair second;
};

struct PcmPair {
  std::array<int, 4> ambient;
  PrincipalPartition pair1;
  PrincipalPartition pair2;
};

/// The three partitions of {i<j<k<l} into two principal 2x2 blocks, in the
/// order {[ij],[kl]}, {[ik],[jl]}, {[il],[jk]}.
inline std::array<PrincipalPartition, 3> principal_partitions(const std::array<int, 4>& q) {
  return {PrincipalPartition{{q[0], q[1]}, {q[2], q[3]}},
          PrincipalPartition{{q[0], q[2]}, {q[1], q[3]}},
          PrincipalPartition{{q[0], q[3]}, {q[1], q[2]}}};
}

inline std::array<int, 4> sorted_four(std::array<int, 4> q) {
  std::sort(q.begin(), q.end());
  for (int k = 0; k < 3; ++k) {
    if (q[k] == q[k + 1]) throw Error(ErrorCode::BadIndex, "four distinct indices required");
  }
  return q;
}

/// The unordered pairs of partitions of a four-element index set.
inline std::vector<PcmPair> pcm_pairs(std::span<const int> four) {
  if (four.size() != 4) throw Error(ErrorCode::BadIndex, "four distinct indices required");
  const auto q = sorted_four({four[0], four[1], four[2], four[3]});
  if (q[0] < 1) throw Error(ErrorCode::BadIndex, "indices start at 1");
  const auto parts = principal_partitions(q);
  return {PcmPair{q, parts[0], parts[1]}, PcmPair{q, parts[0], parts[2]},
          PcmPair{q, parts[1], parts[2]}};
}

/// Sum of the two principal minors of a partition.
inline Polynomial partition_value(const SymMatrix& mat, const PrincipalPartition& p) {
  return minor2(mat, p.first, p.first).value + minor2(mat, p.second, p.second).value;
}

/// Every 4-element subset of 1..d in ascending lexicographic order.
inline std::vector<std::array<int, 4>> four_subsets(int d) {
  std::vector<std::array<int, 4>> out;
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = b + 1; c <= d; ++c)
        for (int e = c + 1; e <= d; ++e) out.push_back({a, b, c, e});
  return out;
}

}  // namespace fiberforge
