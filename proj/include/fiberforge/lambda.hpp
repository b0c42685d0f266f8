#pragma once

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fiberforge/groebner.hpp"
#include "fiberforge/io.hpp"
#include "fiberforge/symmat.hpp"

namespace fiberforge {

// ---------------------------------------------------------------------------
// The maps epsilon, phi_W, phi_U.

/// g_ij = x_i x_j for i != j, g_ii = x_i^2 - x_d^2.
inline Polynomial quadric(int i, int j, int d) {
  const RingPtr r = ring_R(d);
  if (i > j) std::swap(i, j);
  if (i < 1 || j > d || (i == d && j == d)) throw Error(ErrorCode::BadIndex, "no quadric g_dd");
  auto x = [&](int k) { return Polynomial::variable(r, VariableId::x(k)); };
  if (i != j) return x(i) * x(j);
  return x(i) * x(i) - x(d) * x(d);
}

inline Homomorphism phi_W(int d) {
  std::map<VariableId, Polynomial> images;
  for (const auto& v : omega_sequence(RingTag::W_w, d)) images.emplace(v, quadric(v.i(), v.j(), d));
  return Homomorphism(ring_W(d), ring_R(d), images);
}

inline Homomorphism phi_U(int d) {
  const RingPtr r = ring_R(d);
  std::map<VariableId, Polynomial> images;
  for (const auto& v : omega_sequence(RingTag::U_u, d)) {
    images.emplace(v, Polynomial::variable(r, VariableId::x(v.i())) *
                          Polynomial::variable(r, VariableId::x(v.j())));
  }
  return Homomorphism(ring_U(d), r, images);
}

/// w_ij -> u_ij off the diagonal, w_ii -> u_ii - u_dd.
inline Homomorphism epsilon_hom(int d) {
  const RingPtr u = ring_U(d);
  const Polynomial udd = Polynomial::variable(u, VariableId::u(d, d, d));
  std::map<VariableId, Polynomial> images;
  for (const auto& v : omega_sequence(RingTag::W_w, d)) {
    Polynomial img = Polynomial::variable(u, VariableId::u(v.i(), v.j(), d));
    if (v.is_diagonal()) img -= udd;
    images.emplace(v, std::move(img));
  }
  return Homomorphism(ring_W(d), u, images);
}

inline Polynomial epsilon(const Polynomial& f, int d) { return epsilon_hom(d)(f); }

// ---------------------------------------------------------------------------
// Generators of Lambda.

enum class LambdaPart { All, L0, L1, L2 };

struct GeneratorRecord {
  int part = 0;
  std::array<int, 4> ambient{};
  std::string provenance;
  Polynomial value;
  Monomial leading;
};

inline std::string index_string(IndexPair p) {
  return std::to_string(p.first) + std::to_string(p.second);
}

/// Lambda_0, Lambda_1 and Lambda_2 of the d x d matrix, in ascending ambient
/// order. Exact duplicates and sign flips are dropped.
inline std::vector<GeneratorRecord> generators_lambda(int d, LambdaPart part = LambdaPart::All) {
  if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "Lambda needs d >= 4");
  const SymMatrix mat(d, RingTag::W_w);
  std::vector<GeneratorRecord> out;
  std::set<std::string> seen;
  auto emit = [&](int p, const std::array<int, 4>& q, std::string prov, Polynomial v) {
    if (v.is_zero()) return;
    const std::string key = format_polynomial(v.monic());
    if (!seen.insert(key).second) return;
    Monomial lead = v.leading_monomial();
    out.push_back({p, q, std::move(prov), std::move(v), lead});
  };
  const auto subsets = four_subsets(d);
  const bool all = part == LambdaPart::All;

  if (all || part == LambdaPart::L0) {
    for (const auto& q : subsets) {
      const std::array<std::pair<IndexPair, IndexPair>, 3> brackets{{
          {{q[0], q[1]}, {q[2], q[3]}},
          {{q[0], q[2]}, {q[1], q[3]}},
          {{q[0], q[3]}, {q[1], q[2]}},
      }};
      for (const auto& [rows, cols] : brackets) {
        Minor2 m = minor2(mat, rows, cols);
        emit(0, q, m.bracket(), std::move(m.value));
      }
    }
  }

  if (all || part == LambdaPart::L1) {
    for (const auto& q : subsets) {
      for (int x = 0; x < 4; ++x) {
        for (int y = x + 1; y < 4; ++y) {
          const int a = q[x];
          const int b = q[y];
          std::array<int, 2> rest{};
          int n = 0;
          for (int k = 0; k < 4; ++k) {
            if (k != x && k != y) rest[n++] = q[k];
          }
          const int r = rest[0];
          const int s = rest[1];
          const Minor2 m = minor2(mat, std::minmax(a, r), std::minmax(b, r));
          const Minor2 c = minor2(mat, std::minmax(b, s), std::minmax(a, s));
          const bool same_sign = (delta(m) + delta(c)) % 2 == 0;
          Polynomial v = same_sign ? m.value - c.value : m.value + c.value;
          emit(1, q, m.bracket() + (same_sign ? " - " : " + ") + c.bracket(), std::move(v));
        }
      }
    }
  }

  if (all || part == LambdaPart::L2) {
    for (const auto& q : subsets) {
      for (const auto& pcm : pcm_pairs(q)) {
        auto name = [](const PrincipalPartition& p) {
          return "([" + index_string(p.first) + "] + [" + index_string(p.second) + "])";
        };
        Polynomial v = partition_value(mat, pcm.pair1) - partition_value(mat, pcm.pair2);
        emit(2, q, name(pcm.pair1) + " - " + name(pcm.pair2), std::move(v));
      }
    }
  }
  return out;
}

inline std::vector<Polynomial> lambda_polynomials(int d, LambdaPart part = LambdaPart::All) {
  std::vector<Polynomial> out;
  for (auto& g : generators_lambda(d, part)) out.push_back(std::move(g.value));
  return out;
}

/// All 2x2 minors of the generic symmetric matrix over U, without repeats.
inline std::vector<Polynomial> i2n_generators(int d) {
  const SymMatrix mat(d, RingTag::U_u);
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        for (int e = c + 1; e <= d; ++e) {
          Polynomial v = minor2(mat, {a, b}, {c, e}).value;
          if (v.is_zero()) continue;
          if (seen.insert(format_polynomial(v.monic())).second) out.push_back(std::move(v));
        }
  return out;
}

/// Cached Groebner basis of the 2x2 minors of the symmetric matrix over U.
inline const GroebnerBasis& i2n_basis(int d) {
  static std::mutex mutex;
  static std::map<int, GroebnerBasis> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, buchberger(i2n_generators(d), ring_U(d))).first;
  return it->second;
}

/// f lies in the kernel of phi_W when epsilon(f) lies in the 2x2 minors of the
/// matrix over U.
inline bool check_criterion_c(const Polynomial& f, const GroebnerBasis& gb_n) {
  if (f.is_zero()) return true;
  int d = 0;
  for (const auto& v : f.ring()->variables()) d = std::max(d, v.max_index());
  return normal_form(epsilon(f, d), gb_n).is_zero();
}

// ---------------------------------------------------------------------------
// The named generator catalogue.

struct CatalogueEntry {
  std::string key;
  std::vector<int> params;
  Polynomial value;
  Monomial claimed_leading;
  int claimed_sign = 1;  // sign of the marked term as printed
  // Basic generators only: +1 when the bracket combination expands to the
  // printed polynomial, -1 when to its negative (the printed orientation is
  // then used), 0 when neither.
  int orientation = 1;

  Monomial leading() const { return value.leading_monomial(); }
  int leading_sign() const { return value.leading_coefficient() > 0 ? 1 : -1; }
  bool matches() const { return orientation != 0 && leading() == claimed_leading; }

  std::string label() const {
    std::string s = key + "(";
    for (std::size_t k = 0; k < params.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(params[k]);
    }
    return s + ")";
  }
};

namespace detail {

class Catalogue {
 public:
  explicit Catalogue(int d) : d_(d), mat_(d, RingTag::W_w), ring_(mat_.ring()) {}

  Polynomial w(int i, int j) const { return mat_.entry(i, j); }
  Polynomial br(int a1, int a2, int b1, int b2) const {
    return minor2(mat_, {a1, a2}, {b1, b2}).value;
  }
  Polynomial pr(int a, int b) const { return br(a, b, a, b); }

  Polynomial basic(const std::string& key, int i, int j) const {
    if (!(3 <= i && i < j && j <= d_)) {
      throw Error(ErrorCode::BadParams, key + " needs 3 <= i < j <= d");
    }
    if (key == "f1") return br(1, 2, i, j);
    if (key == "f2") return br(1, i, 2, j);
    if (key == "f3") return br(1, j, 2, i);
    if (key == "g1") return br(2, i, 2, j) - br(1, j, 1, i);
    if (key == "g2") return br(i, j, 2, i) + br(1, 2, 1, j);
    if (key == "g3") return br(i, j, 2, j) - br(1, 2, 1, i);
    if (key == "g4") return br(i, j, 1, i) - br(1, 2, 2, j);
    if (key == "g5") return br(1, 2, 2, i) + br(i, j, 1, j);
    if (key == "g6") return br(2, j, 1, j) - br(1, i, 2, i);
    if (key == "h1") return (pr(1, j) + pr(2, i)) - (pr(1, 2) + pr(i, j));
    if (key == "h2") return (pr(1, j) + pr(2, i)) - (pr(1, i) + pr(2, j));
    throw Error(ErrorCode::BadParams, "unknown catalogue key " + key);
  }

  /// The expansion as printed next to each basic generator, with w_dd = 0.
  Polynomial printed(const std::string& key, int i, int j) const {
    const auto& rows = printed_terms().at(key);
    Polynomial out(ring_);
    for (const auto& t : rows) {
      out += Rational(t[0]) * w(code(t[1], i, j), code(t[2], i, j)) *
             w(code(t[3], i, j), code(t[4], i, j));
    }
    return out;
  }

  Monomial printed_mark(const std::string& key, int i, int j) const {
    const auto& t = printed_terms().at(key).front();
    return mono({{code(t[1], i, j), code(t[2], i, j)}, {code(t[3], i, j), code(t[4], i, j)}});
  }

  static int printed_mark_sign(const std::string& key) { return printed_terms().at(key).front()[0]; }

  Monomial mono(std::initializer_list<std::pair<int, int>> vars) const {
    Monomial m;
    for (const auto& [i, j] : vars) {
      const auto idx = ring_->index_of(VariableId::w(i, j, d_));
      m.set(idx, m[idx] + 1);
    }
    return m;
  }

  int d() const noexcept { return d_; }

 private:
  // Each row is coefficient, then the index pairs of the two factors; -1 and
  // -2 stand for i and j. The marked term comes first.
  using Row = std::array<int, 5>;
  static const std::map<std::string, std::vector<Row>>& printed_terms() {
    static const std::map<std::string, std::vector<Row>> table{
        {"f1", {{1, 1, -1, 2, -2}, {-1, 2, -1, 1, -2}}},
        {"f2", {{-1, 2, -1, 1, -2}, {1, 1, 2, -1, -2}}},
        {"f3", {{-1, 1, -1, 2, -2}, {1, 1, 2, -1, -2}}},
        {"g1", {{1, 2, -1, 2, -2}, {-1, 1, -1, 1, -2}, {-1, 2, 2, -1, -2}, {1, 1, 1, -1, -2}}},
        {"g2", {{-1, -1, -1, 2, -2}, {1, 2, -1, -1, -2}, {-1, 1, 2, 1, -2}, {1, 1, 1, 2, -2}}},
        {"g3", {{1, 2, -2, -1, -2}, {-1, 2, -1, -2, -2}, {-1, 1, 2, 1, -1}, {1, 1, 1, 2, -1}}},
        {"g4", {{1, -1, -1, 1, -2}, {-1, 1, -1, -1, -2}, {-1, 2, 2, 1, -2}, {1, 1, 2, 2, -2}}},
        {"g5", {{-1, 1, -2, -1, -2}, {1, 1, -1, -2, -2}, {-1, 2, 2, 1, -1}, {1, 1, 2, 2, -1}}},
        {"g6", {{1, 1, -2, 2, -2}, {-1, 1, -1, 2, -1}, {-1, 1, 2, -2, -2}, {1, 1, 2, -1, -1}}},
        {"h1",
         {{1, -1, -2, -1, -2}, {-1, 1, -2, 1, -2}, {-1, -1, -1, -2, -2}, {-1, 2, -1, 2, -1},
          {1, 2, 2, -1, -1}, {1, 1, 2, 1, 2}, {1, 1, 1, -2, -2}, {-1, 1, 1, 2, 2}}},
        {"h2",
         {{1, 2, -2, 2, -2}, {-1, 1, -2, 1, -2}, {-1, 2, -1, 2, -1}, {1, 1, -1, 1, -1},
          {-1, 2, 2, -2, -2}, {1, 2, 2, -1, -1}, {1, 1, 1, -2, -2}, {-1, 1, 1, -1, -1}}},
    };
    return table;
  }

  static int code(int c, int i, int j) { return c == -1 ? i : c == -2 ? j : c; }

  int d_;
  SymMatrix mat_;
  RingPtr ring_;
};

}  // namespace detail

inline const std::vector<std::string>& basic_catalogue_keys() {
  static const std::vector<std::string> keys{"f1", "f2", "f3", "g1", "g2", "g3",
                                             "g4", "g5", "g6", "h1", "h2"};
  return keys;
}

inline const std::vector<std::string>& family_catalogue_keys() {
  static const std::vector<std::string> keys{
      "G1.F1", "G1.F2", "G1.F3", "G1.F4", "G1.F5", "G1.F6", "G2.F1", "G2.F2",
      "G2.F3", "G2.F4", "G3.F1", "G3.F2", "G3.F3", "G4.F1", "G4.F2", "G4.F3"};
  return keys;
}

/// The machine expansion of a named combination together with the marked
/// leading term as printed.
inline CatalogueEntry named_generator(const std::string& key, const std::vector<int>& params,
                                      int d) {
  if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "catalogue needs d >= 4");
  const detail::Catalogue c(d);
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw Error(ErrorCode::BadParams, key + " takes " + std::to_string(n) + " parameters");
    }
  };
  auto require = [&](bool ok, const char* rule) {
    if (!ok) throw Error(ErrorCode::BadParams, key + " requires " + rule);
  };
  auto B = [&](const char* k, int i, int j) { return named_generator(k, {i, j}, d).value; };
  auto w = [&](int i, int j) { return c.w(i, j); };

  CatalogueEntry e{key, params, Polynomial(ring_W(d)), Monomial{}, 1};

  if (key.size() == 2) {
    need(2);
    const int i = params[0];
    const int j = params[1];
    const Polynomial bracket = c.basic(key, i, j);
    const Polynomial printed = c.printed(key, i, j);
    e.claimed_leading = c.printed_mark(key, i, j);
    e.claimed_sign = c.printed_mark_sign(key);
    if (bracket == printed) {
      e.orientation = 1;
    } else if (bracket == -printed) {
      e.orientation = -1;
    } else {
      e.orientation = 0;
    }
    e.value = e.orientation == -1 ? -bracket : bracket;
    return e;
  }

  const int dd = d;
  if (key.rfind("G1.", 0) == 0) {
    need(0);
    if (key == "G1.F1") {
      e.value = -(w(2, dd) * B("f2", 3, dd)) - w(2, 3) * B("g6", 3, dd);
      e.claimed_leading = c.mono({{1, 3}, {2, 3}, {2, 3}});
    } else if (key == "G1.F2") {
      e.value = -(w(1, dd) * B("f3", 3, dd)) - w(1, 3) * B("g6", 3, dd);
      e.claimed_leading = c.mono({{1, 3}, {1, 3}, {2, 3}});
    } else if (key == "G1.F3") {
      e.value = w(3, dd) * B("f2", 3, dd) - w(2, 3) * B("g5", 3, dd);
      e.claimed_leading = c.mono({{2, 3}, {2, 2}, {1, 3}});
    } else if (key == "G1.F4") {
      e.value = w(1, dd) * B("f2", 3, dd) + w(2, dd) * B("g1", 3, dd) - w(2, 3) * B("h2", 3, dd);
      e.claimed_leading = c.mono({{2, 3}, {2, 3}, {2, 3}});
    } else if (key == "G1.F5") {
      e.value = w(3, dd) * B("f3", 3, dd) + w(1, 3) * B("g3", 3, dd) - w(1, 2) * B("h1", 3, dd);
      e.claimed_leading = c.mono({{1, 2}, {1, dd}, {1, dd}});
    } else if (key == "G1.F6") {
      e.value = -(w(3, dd) * B("g1", 3, dd)) + w(2, 3) * B("g3", 3, dd) +
                w(1, 3) * B("g5", 3, dd) - w(2, 2) * B("h1", 3, dd);
      e.claimed_leading = c.mono({{2, 2}, {1, dd}, {1, dd}});
    } else {
      throw Error(ErrorCode::BadParams, "unknown catalogue key " + key);
    }
    return e;
  }

  if (key.rfind("G2.", 0) == 0) {
    need(3);
    const int i = params[0];
    const int j = params[1];
    const int k = params[2];
    require(3 <= i && i <= j && j <= k && k <= d, "3 <= i <= j <= k <= d");
    if (key == "G2.F1") {
      require(j < k, "j < k");
      e.value = w(2, j) * B("f3", i, k) - w(1, i) * B("g1", j, k);
    } else if (key == "G2.F2") {
      require(i < j && j == k, "i < j = k");
      e.value = -(w(2, j) * B("f3", i, j)) - w(1, i) * B("h2", i, j);
    } else if (key == "G2.F3") {
      require(3 < i && i == j && j == k, "3 < i = j = k");
      e.value = w(2, j) * B("g6", 3, j) - w(1, j) * B("h2", 3, j);
    } else if (key == "G2.F4") {
      require(i == 3 && j == 3 && k == 3, "i = j = k = 3");
      e.value = -(w(2, dd) * B("f1", 3, dd)) - w(2, dd) * B("f2", 3, dd) -
                w(1, dd) * B("g1", 3, dd) - w(2, 3) * B("g6", 3, dd) + w(1, 3) * B("h2", 3, dd);
    } else {
      throw Error(ErrorCode::BadParams, "unknown catalogue key " + key);
    }
    e.claimed_leading = c.mono({{1, i}, {1, j}, {1, k}});
    return e;
  }

  if (key.rfind("G3.", 0) == 0 || key.rfind("G4.", 0) == 0) {
    need(2);
    const int i = params[0];
    const int j = params[1];
    const bool g3 = key[1] == '3';
    const std::string f = key.substr(3);
    if (f == "F1") {
      require(3 < i && i < j && j <= d, "3 < i < j <= d");
      e.value = g3 ? w(1, 3) * c.br(2, j, 3, i) - w(3, j) * B("f3", 3, i)
                   : w(2, 3) * c.br(2, i, 3, j) + w(3, i) * B("g1", 3, j);
    } else if (f == "F2") {
      require(i == 3 && i < j && j <= d, "3 = i < j <= d");
      e.value = g3 ? -(w(3, 3) * B("f3", 3, j)) + w(1, 3) * B("g2", 3, j)
                   : w(3, 3) * B("g1", 3, j) + w(2, 3) * B("g2", 3, j);
    } else if (f == "F3") {
      require(3 <= i && i == j && j < d, "3 <= i = j < d");
      e.value = g3 ? w(1, i) * B("g3", i, dd) + w(2, dd) * B("g4", i, dd) - w(i, i) * B("g6", 3, dd)
                   : -(w(2, dd) * B("g2", i, dd)) + w(2, i) * B("g3", i, dd) -
                         w(1, dd) * B("g4", i, dd) + w(1, i) * B("g5", i, dd) -
                         w(i, i) * B("h2", 3, dd);
    } else {
      throw Error(ErrorCode::BadParams, "unknown catalogue key " + key);
    }
    e.claimed_leading = g3 ? c.mono({{1, 3}, {2, 3}, {i, j}}) : c.mono({{2, 3}, {2, 3}, {i, j}});
    return e;
  }
  throw Error(ErrorCode::BadParams, "unknown catalogue key " + key);
}

/// The catalogue entry whose marked leading monomial is the given member of
/// G_1..G_4.
struct GMember {
  int family;
  std::string key;
  std::vector<int> params;
};

inline std::vector<GMember> g_members(int d) {
  std::vector<GMember> out;
  for (int f = 1; f <= 6; ++f) out.push_back({1, "G1.F" + std::to_string(f), {}});
  for (int i = 3; i <= d; ++i)
    for (int j = i; j <= d; ++j)
      for (int k = j; k <= d; ++k) {
        std::string key;
        if (j < k) {
          key = "G2.F1";
        } else if (i < j) {
          key = "G2.F2";
        } else if (i > 3) {
          key = "G2.F3";
        } else {
          key = "G2.F4";
        }
        out.push_back({2, key, {i, j, k}});
      }
  for (int fam = 3; fam <= 4; ++fam) {
    const std::string p = "G" + std::to_string(fam) + ".";
    for (int i = 3; i <= d; ++i)
      for (int j = i; j <= d; ++j) {
        if (i == j && j == d) continue;
        const char* f = i < j ? (i > 3 ? "F1" : "F2") : "F3";
        out.push_back({fam, p + f, {i, j}});
      }
  }
  return out;
}

/// Every catalogue entry at dimension d: the basic generators for all
/// 3 <= i < j <= d and the F-combinations for every member of G_1..G_4.
inline std::vector<CatalogueEntry> full_catalogue(int d) {
  std::vector<CatalogueEntry> out;
  for (const auto& key : basic_catalogue_keys()) {
    for (int i = 3; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) out.push_back(named_generator(key, {i, j}, d));
  }
  for (const auto& m : g_members(d)) out.push_back(named_generator(m.key, m.params, d));
  return out;
}

/// A known disagreement between a catalogue entry and its reference form,
/// with a replacement combination whose leading term is the marked one.
struct Erratum {
  std::string note;
  std::function<Polynomial(const std::vector<int>&, int)> witness;
};

inline const std::map<std::string, Erratum>& catalogue_errata() {
  auto w = [](int i, int j, int d) { return SymMatrix(d, RingTag::W_w).entry(i, j); };
  auto gen = [](const char* k, int i, int j, int d) { return named_generator(k, {i, j}, d).value; };
  static const std::map<std::string, Erratum> table{
      {"f1",
       {"leading monomial of [12|ij] is w2i*w1j; the marked w1i*w2j leads -f3(i,j)",
        [gen](const std::vector<int>& p, int d) { return -gen("f3", p[0], p[1], d); }}},
      {"g1", {"reference expansion is the negative of [2i|2j] - [1j|1i]; reference sign used", {}}},
      {"g3", {"reference expansion is the negative of [ij|2j] - [12|1i]; reference sign used", {}}},
      {"g4", {"reference expansion is the negative of [ij|1i] - [12|2j]; reference sign used", {}}},
      {"g6",
       {"stray sign in the definition: the expansion is [1i|2i] - [2j|1j]; reference sign used",
        {}}},
      {"G2.F1",
       {"w2j*f3(i,k) - w1i*g1(j,k) leads with -2*w1i*w2j*w2k; -w2j*f3(i,k) - w1i*g1(j,k) has "
        "leading term w1i*w1j*w1k",
        [w, gen](const std::vector<int>& p, int d) {
          const int i = p[0], j = p[1], k = p[2];
          return -(w(2, j, d) * gen("f3", i, k, d)) - w(1, i, d) * gen("g1", j, k, d);
        }}},
  };
  return table;
}

struct ErrataLine {
  CatalogueEntry entry;
  bool documented = false;
  std::string note;
  std::optional<Polynomial> witness;
  bool witness_ok = true;
};

inline bool needs_erratum(const CatalogueEntry& e) {
  return !e.matches() || e.orientation != 1 || e.leading_sign() != e.claimed_sign;
}

/// Every catalogue entry at dimension d that disagrees with its reference
/// form, with the documented explanation and a checked witness when one
/// exists.
inline std::vector<ErrataLine> catalogue_errata_report(int d) {
  std::vector<ErrataLine> out;
  for (auto& e : full_catalogue(d)) {
    if (!needs_erratum(e)) continue;
    ErrataLine line{e, false, {}, std::nullopt, true};
    auto it = catalogue_errata().find(e.key);
    if (it != catalogue_errata().end()) {
      line.documented = true;
      line.note = it->second.note;
      if (it->second.witness) {
        Polynomial wit = it->second.witness(e.params, d);
        line.witness_ok = !wit.is_zero() && wit.leading_monomial() == e.claimed_leading &&
                          (wit.leading_coefficient() > 0 ? 1 : -1) == e.claimed_sign &&
                          phi_W(d)(wit).is_zero();
        line.witness = std::move(wit);
      } else {
        line.witness_ok = e.orientation != 0 && e.leading() == e.claimed_leading;
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace fiberforge
