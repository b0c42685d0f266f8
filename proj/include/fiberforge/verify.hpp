#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fiberforge/combinat.hpp"
#include "fiberforge/rees.hpp"
#include "fiberforge/report.hpp"

namespace fiberforge {

inline const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups{"counts",  "hf",     "initial",   "membership", "oracle",
                                               "powers",  "syzygies", "catalogue", "identities"};
  return groups;
}

struct VerifyOptions {
  bool deep = false;
  double fiber_budget_seconds = 1800;
  double rees_budget_seconds = 3600;
  std::uint64_t seed = 0;
};

struct VerifyReport {
  int d = 0;
  std::vector<CheckLine> checks;
  std::vector<ErrataLine> errata;
  bool budget_exceeded = false;

  /// 0 when every required check passes, 3 when a required check ran out of
  /// time, 1 otherwise.
  int exit_code() const {
    if (budget_exceeded) return 3;
    for (const auto& c : checks) {
      if (c.status == CheckStatus::Fail && !c.optional) return 1;
    }
    return 0;
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline std::string monomial_list(const Ring& ring, const std::vector<Monomial>& ms) {
  std::string s;
  for (const auto& m : ms) s += (s.empty() ? "" : " ") + format_monomial(ring, m);
  return s;
}

inline std::vector<Monomial> sorted_desc(const Ring& ring, std::vector<Monomial> v) {
  std::sort(v.begin(), v.end(), [&ring](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return v;
}

class Runner {
 public:
  explicit Runner(VerifyReport& report) : report_(report) {}

  /// Runs a group of checks, timing them and turning budget overruns into
  /// SKIPPED (optional) or a failure with exit code 3 (required).
  void run(const std::string& name, bool optional, const std::function<std::vector<CheckLine>()>& body) {
    const auto start = Clock::now();
    std::vector<CheckLine> lines;
    try {
      lines = body();
    } catch (const BudgetExceeded& e) {
      CheckLine line = make_line(name, "within budget", "budget exceeded",
                                 optional ? CheckStatus::Skipped : CheckStatus::Fail);
      line.note = e.what();
      if (!optional) report_.budget_exceeded = true;
      lines = {line};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    for (auto& l : lines) {
      l.optional = optional;
      l.elapsed = elapsed;
      report_.checks.push_back(std::move(l));
    }
  }

  void skip(const std::string& name, const std::string& note) {
    CheckLine line = make_line(name, "-", "-", CheckStatus::Skipped);
    line.optional = true;
    line.note = note;
    report_.checks.push_back(std::move(line));
  }

 private:
  VerifyReport& report_;
};

}  // namespace detail

/// The integer identities relating the closed forms at dimension d.
inline std::vector<CheckLine> identity_checks(int d) {
  std::vector<CheckLine> out;
  for (int k : {2, 3}) {
    const long long lhs = hf_closed(HFKind::W, d, k) - hf_closed(HFKind::Fiber, d, k);
    const long long rhs = hf_closed(k == 2 ? HFKind::IX2 : HFKind::IX3, d, k);
    out.push_back(check_equal("identity-HF" + std::to_string(k), rhs, lhs));
  }
  out.push_back(check_equal("identity-K", hf_closed(HFKind::IX2, d, 2),
                            count_closed(d, Family::K0) + count_closed(d, Family::K1) +
                                count_closed(d, Family::K2)));
  out.push_back(check_equal("identity-T+G", hf_closed(HFKind::IX3, d, 3),
                            count_closed(d, Family::T) + count_closed(d, Family::Gsum)));
  return out;
}

/// Runs the selected check groups at dimension d.
inline VerifyReport verify(int d, const std::set<std::string>& groups, const VerifyOptions& opt = {}) {
  VerifyReport report;
  report.d = d;
  detail::Runner runner(report);
  auto want = [&](const char* g) { return groups.count("all") || groups.count(g); };

  if (want("counts")) runner.run("counts", false, [&] { return verify_census(d); });

  if (want("hf")) {
    runner.run("hf", false, [&] {
      const auto gens = lambda_polynomials(d);
      return std::vector<CheckLine>{
          check_equal("HF2", hf_closed(HFKind::IX2, d, 2), static_cast<long long>(hf_exact(gens, 2))),
          check_equal("HF3", hf_closed(HFKind::IX3, d, 3), static_cast<long long>(hf_exact(gens, 3)))};
    });
  }

  if (want("initial")) {
    runner.run("initial", false, [&] {
      const RingPtr w = ring_W(d);
      auto gens = lambda_polynomials(d);
      const auto c = census(d);
      std::vector<Monomial> k;
      for (const auto* part : {&c->k0(), &c->k1(), &c->k2()}) k.insert(k.end(), part->begin(), part->end());
      k = detail::sorted_desc(*w, std::move(k));
      const auto by_gb = initial_monomials(gens, 2, w);
      const auto by_rank = initial_monomials_linear(gens, 2);
      std::mt19937_64 rng(opt.seed);
      std::shuffle(gens.begin(), gens.end(), rng);
      const auto shuffled = initial_monomials(gens, 3, w);
      auto ordered = lambda_polynomials(d);
      const auto in3 = initial_monomials(ordered, 3, w);
      std::vector<CheckLine> out;
      CheckLine eq = make_line("in2-census", std::to_string(k.size()) + " census monomials",
                               std::to_string(by_gb.size()) + " initial monomials",
                               by_gb == k ? CheckStatus::Pass : CheckStatus::Fail);
      if (by_gb != k) eq.note = detail::monomial_list(*w, by_gb);
      out.push_back(std::move(eq));
      out.push_back(check_true("in2-rank-vs-gb", detail::sorted_desc(*w, by_rank) == by_gb));
      out.push_back(check_equal("in3-size", hf_closed(HFKind::IX3, d, 3), static_cast<long long>(in3.size())));
      out.push_back(check_true("in3-shuffled-input", shuffled == in3));
      return out;
    });
  }

  if (want("membership")) {
    runner.run("membership", false, [&] {
      const auto gens = lambda_polynomials(d);
      const Homomorphism phi = phi_W(d);
      bool phi_ok = true;
      for (const auto& g : gens) phi_ok = phi_ok && phi(g).is_zero();
      const auto& gb = i2n_basis(d);
      bool eps_ok = true;
      for (const auto& g : gens) eps_ok = eps_ok && check_criterion_c(g, gb);
      return std::vector<CheckLine>{check_true("phi_W-kills-Lambda", phi_ok),
                                    check_true("epsilon-in-I2(N)", eps_ok)};
    });
  }

  if (want("oracle")) {
    const bool fiber_optional = d >= 5;
    if (fiber_optional && !opt.deep) {
      runner.skip("fiber-oracle", "needs --deep at d >= 5");
    } else {
      runner.run("fiber-oracle", fiber_optional, [&] {
        const Budget budget = Budget::seconds(opt.fiber_budget_seconds);
        const auto kernel = kernel_of_hom(phi_W(d), budget);
        const bool eq = ideal_equal(lambda_polynomials(d), kernel, ring_W(d), budget);
        return std::vector<CheckLine>{check_true("fiber-oracle", eq)};
      });
    }
    runner.run("rees-membership", false, [&] {
      const Homomorphism map = rees_map(d);
      bool ok = true;
      for (const auto& f : rees_ideal(d)) ok = ok && map(f).is_zero();
      return std::vector<CheckLine>{check_true("rees-membership", ok)};
    });
    if (!opt.deep) {
      runner.skip("rees-oracle", "needs --deep");
    } else {
      runner.run("rees-oracle", true, [&] {
        const Budget budget = Budget::seconds(opt.rees_budget_seconds);
        const RingPtr s = ring_S(d);
        const auto kernel = rees_kernel_oracle(d, budget);
        const auto sym = sym_algebra_ideal(d);
        const bool eq = ideal_equal(rees_ideal(d), kernel, s, budget);
        return std::vector<CheckLine>{
            check_true("rees-oracle", eq),
            check_equal("rees-linear-part", static_cast<long long>(hf_exact(kernel, 4, s)),
                        static_cast<long long>(hf_exact(sym, 4, s)))};
      });
    }
  }

  if (want("powers")) {
    runner.run("powers", false, [&] {
      std::vector<CheckLine> out;
      for (int k = 1; k <= 3; ++k) {
        const auto p = power_check(d, k);
        CheckLine line = check_equal("I^" + std::to_string(k) + "-rank", static_cast<long long>(p.full),
                                     static_cast<long long>(p.rank));
        if (k == 1) {
          line = check_equal("I^1-rank", static_cast<long long>(p.full) - 1, static_cast<long long>(p.rank));
          line.note = "one quadric short of m^2";
        }
        out.push_back(std::move(line));
      }
      return out;
    });
  }

  if (want("syzygies")) {
    runner.run("syzygies", false, [&] {
      const long long n = static_cast<long long>(d) * (d + 1) / 2 - 1;
      const auto theta = linear_syzygies(d);
      bool kills = true;
      const auto ideal = build_ideal_I(d);
      for (const auto& column : theta.columns) {
        Polynomial sum(ring_R(d));
        for (std::size_t g = 0; g < column.size(); ++g) sum += column[g] * ideal.gens[g];
        kills = kills && sum.is_zero();
      }
      const Polynomial h = integrality_witness(d);
      return std::vector<CheckLine>{
          check_equal("linear-syzygies", n * d - binomial(d + 2, 3).get_si(),
                      static_cast<long long>(theta.columns.size())),
          check_true("syzygies-vanish", kills),
          check_true("integrality-witness", witness_map(d)(h).is_zero(), format_polynomial(h))};
    });
  }

  if (want("catalogue")) {
    runner.run("catalogue", false, [&] {
      report.errata = catalogue_errata_report(d);
      long long bad = 0;
      for (const auto& e : report.errata) bad += (!e.documented || !e.witness_ok) ? 1 : 0;
      std::unordered_set<Monomial, MonomialHash> covered;
      for (const auto& e : full_catalogue(d)) {
        if (e.matches()) covered.insert(e.claimed_leading);
      }
      for (const auto& e : report.errata) {
        if (e.documented && e.witness_ok) covered.insert(e.entry.claimed_leading);
      }
      const auto c = census(d);
      long long g_total = 0;
      long long g_covered = 0;
      for (int k = 1; k <= 4; ++k) {
        for (const auto& m : g_family(*c, k)) {
          ++g_total;
          g_covered += covered.count(m) ? 1 : 0;
        }
      }
      CheckLine errata = check_equal("catalogue-undocumented", 0, bad);
      errata.note = std::to_string(report.errata.size()) + " documented errata lines";
      return std::vector<CheckLine>{
          std::move(errata),
          check_equal("catalogue-G-leads", g_total, g_covered)};
    });
  }

  if (want("identities")) runner.run("identities", false, [&] { return identity_checks(d); });

  return report;
}

}  // namespace fiberforge
