#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fiberforge/hilbert.hpp"
#include "fiberforge/report.hpp"

namespace fiberforge {

enum class Family { K0, K1, K2, S, Tkl, Tmax, T, G1, G2, G3, G4, Gsum };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::K0: return "K0";
    case Family::K1: return "K1";
    case Family::K2: return "K2";
    case Family::S: return "S";
    case Family::Tkl: return "Tkl";
    case Family::Tmax: return "Tmax";
    case Family::T: return "T";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::G4: return "G4";
    case Family::Gsum: return "Gsum";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  for (auto f : {Family::K0, Family::K1, Family::K2, Family::S, Family::Tkl, Family::Tmax, Family::T,
                 Family::G1, Family::G2, Family::G3, Family::G4, Family::Gsum}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

/// A census of monomials in W, sorted descending under omega.
struct CensusSet {
  Family family = Family::K0;
  std::vector<int> params;
  std::vector<Monomial> members;
  std::optional<long long> expected;
};

/// Degree-two census K0, K1, K2 of W and the sets S_ij built from it; the
/// variables of W are addressed by their index, which increases with omega.
class Census {
 public:
  explicit Census(int d) : d_(d), ring_(ring_W(d)) {
    if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "censuses need d >= 4");
    build_k();
    for (const auto* k : {&k0_, &k1_, &k2_}) degree2_.insert(k->begin(), k->end());
    const std::size_t n = ring_->size();
    s_.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        if (degree2_.count(pair(a, b))) s_[a].push_back(b);
      }
    }
  }

  int d() const noexcept { return d_; }
  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return ring_->size(); }

  std::size_t var(int i, int j) const {
    return ring_->index_of(VariableId::w(std::min(i, j), std::max(i, j), d_));
  }
  std::pair<int, int> indices(std::size_t v) const {
    const auto& id = ring_->variable(v);
    return {id.i(), id.j()};
  }
  Monomial pair(std::size_t a, std::size_t b) const {
    Monomial m;
    m.set(a, 1);
    m.set(b, m[b] + 1);
    return m;
  }
  Monomial triple(std::size_t a, std::size_t b, std::size_t c) const {
    Monomial m = pair(a, b);
    m.set(c, m[c] + 1);
    return m;
  }

  const std::vector<Monomial>& k0() const noexcept { return k0_; }
  const std::vector<Monomial>& k1() const noexcept { return k1_; }
  const std::vector<Monomial>& k2() const noexcept { return k2_; }
  bool in_degree2(const Monomial& m) const { return degree2_.count(m) != 0; }

  /// S_ij as ascending variable indices.
  const std::vector<std::size_t>& s(std::size_t ij) const { return s_.at(ij); }
  bool in_s(std::size_t ij, std::size_t kl) const {
    return kl <= ij && degree2_.count(pair(ij, kl)) != 0;
  }

  /// T_ij^kl by its three membership clauses.
  std::vector<Monomial> t(std::size_t ij, std::size_t kl) const {
    if (!in_s(ij, kl)) {
      const auto [i, j] = indices(ij);
      const auto [k, l] = indices(kl);
      throw Error(ErrorCode::NotInS, "w[" + std::to_string(k) + "," + std::to_string(l) +
                                         "] is not in S_" + std::to_string(i) + std::to_string(j));
    }
    std::vector<Monomial> out;
    for (std::size_t ab = 0; ab < size(); ++ab) {
      bool member = false;
      if (ab <= kl) {
        member = true;
      } else if (ab <= ij) {
        member = !in_s(ij, ab);
      } else {
        member = !in_s(ab, ij) && !in_s(ab, kl);
      }
      if (member) out.push_back(triple(ab, kl, ij));
    }
    sort_desc(out);
    return out;
  }

  /// Every degree-three multiple of the degree-two census, each assigned to
  /// the tau-largest (ij, kl) whose product divides it.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Monomial>> t_by_assignment() const {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Monomial>> out;
    for (const auto& m : monomials_of_degree(*ring_, 3)) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t a = 0; a < size(); ++a) {
        if (!m[a]) continue;
        for (std::size_t b = 0; b <= a; ++b) {
          if (!m[b] || (a == b && m[a] < 2)) continue;
          if (!in_s(a, b)) continue;
          const auto key = std::make_pair(a, b);
          if (!best || key > *best) best = key;
        }
      }
      if (best) out[*best].push_back(m);
    }
    for (auto& [key, v] : out) sort_desc(v);
    return out;
  }

  void sort_desc(std::vector<Monomial>& v) const {
    std::sort(v.begin(), v.end(),
              [this](const Monomial& a, const Monomial& b) { return ring_->compare(a, b) > 0; });
  }

 private:
  void build_k() {
    const int d = d_;
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        for (int k = j + 1; k <= d; ++k)
          for (int l = k + 1; l <= d; ++l) {
            k0_.push_back(pair(var(i, k), var(j, l)));
            k0_.push_back(pair(var(i, l), var(j, k)));
          }
    for (int i = 1; i <= d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        int lowest = 1;
        while (lowest == i || lowest == j) ++lowest;
        for (int l = lowest + 1; l <= d; ++l) {
          if (l == i || l == j) continue;
          const Monomial a = pair(var(j, l), var(i, l));
          if (l == d) {
            k1_.push_back(a);
            continue;
          }
          const Monomial b = pair(var(i, j), var(l, l));
          k1_.push_back(ring_->compare(a, b) > 0 ? a : b);
        }
      }
    }
    for (int i = 2; i <= d; ++i) {
      for (int j = std::max(i + 1, 4); j <= d; ++j) k2_.push_back(pair(var(i, j), var(i, j)));
    }
    sort_desc(k0_);
    sort_desc(k1_);
    sort_desc(k2_);
  }

  int d_;
  RingPtr ring_;
  std::vector<Monomial> k0_;
  std::vector<Monomial> k1_;
  std::vector<Monomial> k2_;
  std::unordered_set<Monomial, MonomialHash> degree2_;
  std::vector<std::vector<std::size_t>> s_;
};

/// Shared census per dimension.
inline std::shared_ptr<const Census> census(int d) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Census>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, std::make_shared<const Census>(d)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// G-families of degree three.

inline std::vector<Monomial> g_family(const Census& c, int which) {
  const int d = c.d();
  auto w = [&](int i, int j) { return c.var(i, j); };
  std::vector<Monomial> out;
  switch (which) {
    case 1:
      out = {c.triple(w(1, 3), w(2, 3), w(2, 3)), c.triple(w(1, 3), w(1, 3), w(2, 3)),
             c.triple(w(2, 2), w(1, 3), w(2, 3)), c.triple(w(2, 3), w(2, 3), w(2, 3)),
             c.triple(w(1, 2), w(1, d), w(1, d)), c.triple(w(2, 2), w(1, d), w(1, d))};
      break;
    case 2:
      for (int i = 3; i <= d; ++i)
        for (int j = i; j <= d; ++j)
          for (int k = j; k <= d; ++k) out.push_back(c.triple(w(1, i), w(1, j), w(1, k)));
      break;
    case 3:
    case 4:
      for (int i = 3; i <= d; ++i) {
        for (int j = i; j <= d; ++j) {
          if (i == d && j == d) continue;
          out.push_back(which == 3 ? c.triple(w(1, 3), w(2, 3), w(i, j))
                                   : c.triple(w(2, 3), w(2, 3), w(i, j)));
        }
      }
      break;
    default:
      throw Error(ErrorCode::BadParams, "G families are numbered 1..4");
  }
  c.sort_desc(out);
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms.

namespace detail {

inline void require_params(Family f, const std::vector<int>& params, std::size_t n) {
  if (params.size() != n) {
    throw Error(ErrorCode::BadParams, to_string(f) + " takes " + std::to_string(n) + " indices");
  }
}

inline void require_pair(int d, int i, int j) {
  if (i < 1 || j > d || i > j || (i == d && j == d)) {
    throw Error(ErrorCode::BadParams, "no variable w[" + std::to_string(i) + "," +
                                          std::to_string(j) + "] for d=" + std::to_string(d));
  }
}

inline long long poly_over(const std::vector<long long>& coeffs, int d, long den) {
  mpz_class acc = 0;
  for (long long c : coeffs) acc = acc * d + static_cast<long>(c);
  return exact_quotient(acc, den);
}

}  // namespace detail

/// Closed-form size of a census family.
inline long long count_closed(int d, Family f, const std::vector<int>& params = {}) {
  if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "censuses need d >= 4");
  const long long D = d;
  switch (f) {
    case Family::K0:
      return 2 * binomial(d, 4).get_si();
    case Family::K1:
      return (D - 3) * binomial(d, 2).get_si();
    case Family::K2:
      return D * (D - 3) / 2;
    case Family::S: {
      detail::require_params(f, params, 2);
      const long long i = params[0], j = params[1];
      detail::require_pair(d, params[0], params[1]);
      if (i == j || j <= 3) return 0;
      if (i == 1) return j * (j - 3) / 2;
      return (j - i) * (i + j - 1) / 2;
    }
    case Family::Tmax: {
      detail::require_params(f, params, 2);
      detail::require_pair(d, params[0], params[1]);
      const long long i = params[0], j = params[1];
      if (i == j || j <= 3) throw Error(ErrorCode::OutOfTable, "S_ij is empty");
      return (D * D - 2 * D * j + 3 * D + 2 * j * j - 4 * j + 2 * i) / 2;
    }
    case Family::Tkl:
      throw Error(ErrorCode::OutOfTable, "T_ij^kl has no closed form of its own");
    case Family::T:
      return detail::poly_over({14, 30, -40, -330, -694, 1740, -4320}, d, 720);
    case Family::G1:
      return 6;
    case Family::G2:
      return (D - 2) + (D - 2) * (D - 3) + binomial(d - 2, 3).get_si();
    case Family::G3:
    case Family::G4:
      return D * (D - 3) / 2;
    case Family::Gsum:
      return detail::poly_over({120, 360, -1920, 4320}, d, 720);
  }
  throw Error(ErrorCode::OutOfTable, "unknown family");
}

/// Member set of a census family.
inline CensusSet enum_census(int d, Family f, const std::vector<int>& params = {}) {
  const auto c = census(d);
  CensusSet out{f, params, {}, std::nullopt};
  auto add = [&](const std::vector<Monomial>& v) {
    out.members.insert(out.members.end(), v.begin(), v.end());
  };
  switch (f) {
    case Family::K0: add(c->k0()); break;
    case Family::K1: add(c->k1()); break;
    case Family::K2: add(c->k2()); break;
    case Family::S: {
      detail::require_params(f, params, 2);
      detail::require_pair(d, params[0], params[1]);
      const auto& s = c->s(c->var(params[0], params[1]));
      for (auto it = s.rbegin(); it != s.rend(); ++it) {
        out.members.push_back(c->ring()->monomial(c->ring()->variable(*it)));
      }
      break;
    }
    case Family::Tkl: {
      detail::require_params(f, params, 4);
      detail::require_pair(d, params[0], params[1]);
      detail::require_pair(d, params[2], params[3]);
      add(c->t(c->var(params[0], params[1]), c->var(params[2], params[3])));
      break;
    }
    case Family::Tmax: {
      detail::require_params(f, params, 2);
      detail::require_pair(d, params[0], params[1]);
      const auto ij = c->var(params[0], params[1]);
      if (!c->s(ij).empty()) add(c->t(ij, c->s(ij).back()));
      break;
    }
    case Family::T:
      for (std::size_t ij = 0; ij < c->size(); ++ij)
        for (auto kl : c->s(ij)) add(c->t(ij, kl));
      break;
    case Family::G1: add(g_family(*c, 1)); break;
    case Family::G2: add(g_family(*c, 2)); break;
    case Family::G3: add(g_family(*c, 3)); break;
    case Family::G4: add(g_family(*c, 4)); break;
    case Family::Gsum:
      for (int k = 1; k <= 4; ++k) add(g_family(*c, k));
      break;
  }
  if (f == Family::T || f == Family::Gsum) c->sort_desc(out.members);
  try {
    out.expected = count_closed(d, f, params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OutOfTable) throw;
  }
  return out;
}

/// One row of the T table: for fixed ij, the sizes |T_ij^kl| with kl running
/// down S_ij.
struct TRow {
  int i = 0;
  int j = 0;
  std::vector<std::pair<std::pair<int, int>, long long>> sizes;
};

inline std::vector<TRow> t_table(int d) {
  const auto c = census(d);
  std::vector<TRow> rows;
  for (std::size_t ij = c->size(); ij-- > 0;) {
    if (c->s(ij).empty()) continue;
    TRow row;
    std::tie(row.i, row.j) = c->indices(ij);
    const auto& s = c->s(ij);
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      row.sizes.emplace_back(c->indices(*it), static_cast<long long>(c->t(ij, *it).size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Verification.

namespace detail {

/// Enumerated count against a lower-bound closed form: above is flagged.
inline CheckLine check_lower_bound(std::string name, long long expected, long long actual) {
  CheckLine line = check_equal(std::move(name), expected, actual);
  if (actual > expected) {
    line.status = CheckStatus::Flag;
    line.note = "enumeration exceeds the closed form";
  }
  return line;
}

inline std::string pair_name(const std::string& prefix, int i, int j) {
  return prefix + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

}  // namespace detail

/// Every census count against its closed form, and the structural
/// properties of the T and G sets.
inline std::vector<CheckLine> verify_census(int d) {
  const auto c = census(d);
  std::vector<CheckLine> out;
  const long long nk0 = static_cast<long long>(c->k0().size());
  const long long nk1 = static_cast<long long>(c->k1().size());
  const long long nk2 = static_cast<long long>(c->k2().size());
  out.push_back(check_equal("K0", count_closed(d, Family::K0), nk0));
  out.push_back(check_equal("K1", count_closed(d, Family::K1), nk1));
  out.push_back(check_equal("K2", count_closed(d, Family::K2), nk2));
  {
    std::unordered_set<Monomial, MonomialHash> all;
    for (const auto* k : {&c->k0(), &c->k1(), &c->k2()}) all.insert(k->begin(), k->end());
    out.push_back(check_true("K-disjoint", static_cast<long long>(all.size()) == nk0 + nk1 + nk2));
    out.push_back(check_equal("K-total", hf_closed(HFKind::IX2, d, 2), nk0 + nk1 + nk2));
  }

  bool s_char = true;
  bool s_max = true;
  std::string s_char_note;
  for (std::size_t ij = 0; ij < c->size(); ++ij) {
    const auto [i, j] = c->indices(ij);
    const auto& s = c->s(ij);
    out.push_back(check_equal(detail::pair_name("S", i, j), count_closed(d, Family::S, {i, j}),
                              static_cast<long long>(s.size())));
    if (i < j && j >= 4) {
      for (std::size_t kl = 0; kl <= ij; ++kl) {
        const auto [k, l] = c->indices(kl);
        const bool predicted = i == 1 ? (1 < k && 2 < l && l < j) : ((i < l && l < j) || (l == j && k <= i));
        if (predicted != c->in_s(ij, kl)) {
          s_char = false;
          s_char_note = "w[" + std::to_string(k) + "," + std::to_string(l) + "] in " +
                        detail::pair_name("S", i, j);
        }
      }
      const std::size_t expect_max = i == 1 ? c->var(j - 1, j - 1) : ij;
      if (s.empty() || s.back() != expect_max) s_max = false;
    }
  }
  out.push_back(check_true("S-characterization", s_char, s_char_note));
  out.push_back(check_true("S-maximum", s_max));

  const auto assigned = c->t_by_assignment();
  std::unordered_set<Monomial, MonomialHash> t_all;
  long long t_sum = 0;
  bool disjoint = true;
  bool by_definition = true;
  for (std::size_t ij = 0; ij < c->size(); ++ij) {
    const auto& s = c->s(ij);
    if (s.empty()) continue;
    const auto [i, j] = c->indices(ij);
    std::vector<long long> sizes;
    for (auto kl : s) {
      const auto t = c->t(ij, kl);
      sizes.push_back(static_cast<long long>(t.size()));
      for (const auto& m : t) disjoint = t_all.insert(m).second && disjoint;
      auto it = assigned.find({ij, kl});
      if (it == assigned.end() || it->second != t) by_definition = false;
    }
    const long long tmax = count_closed(d, Family::Tmax, {i, j});
    out.push_back(detail::check_lower_bound(detail::pair_name("Tmax", i, j), tmax, sizes.back()));
    bool consecutive = sizes.back() == tmax;
    for (std::size_t k = 1; k < sizes.size(); ++k) consecutive = consecutive && sizes[k] == sizes[k - 1] + 1;
    out.push_back(check_true(detail::pair_name("Tkl-consecutive", i, j), consecutive));
    long long sum = 0;
    for (auto v : sizes) sum += v;
    const long long ns = static_cast<long long>(s.size());
    out.push_back(detail::check_lower_bound(detail::pair_name("Tkl-sum", i, j),
                                            ns * (2 * tmax - ns + 1) / 2, sum));
    t_sum += sum;
  }
  std::size_t assigned_total = 0;
  for (const auto& [key, v] : assigned) assigned_total += v.size();
  by_definition = by_definition && assigned_total == t_all.size();
  out.push_back(check_true("T-disjoint", disjoint));
  out.push_back(check_true("T-clauses-vs-tau", by_definition));
  out.push_back(detail::check_lower_bound("T-total", count_closed(d, Family::T), t_sum));

  std::unordered_set<Monomial, MonomialHash> g_all;
  bool g_disjoint = true;
  bool g_outside_t = true;
  long long g_sum = 0;
  const Family fams[] = {Family::G1, Family::G2, Family::G3, Family::G4};
  for (int k = 1; k <= 4; ++k) {
    const auto g = g_family(*c, k);
    out.push_back(check_equal("G" + std::to_string(k), count_closed(d, fams[k - 1]),
                              static_cast<long long>(g.size())));
    g_sum += static_cast<long long>(g.size());
    for (const auto& m : g) {
      g_disjoint = g_all.insert(m).second && g_disjoint;
      if (t_all.count(m)) g_outside_t = false;
    }
  }
  out.push_back(check_equal("G-sum", count_closed(d, Family::Gsum), g_sum));
  out.push_back(check_true("G-disjoint", g_disjoint));
  out.push_back(check_true("G-outside-T", g_outside_t));
  out.push_back(check_equal("T+G", hf_closed(HFKind::IX3, d, 3), t_sum + g_sum));
  return out;
}

}  // namespace fiberforge
