#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fiberforge/io.hpp"
#include "fiberforge/verify.hpp"

namespace fiberforge::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

struct Options {
  int d = 4;
  std::string format = "text";
  std::string out_path;
  double budget_seconds = 0;
  std::uint64_t seed = 0;
  bool deep = false;
  bool timings = false;

  std::string part = "all";
  int degree = 2;
  std::string ideal = "lambda";
  std::string family;
  std::vector<int> params;
  std::vector<std::string> checks{"all"};
  std::string target = "fiber";
  std::string emit = "J";
};

namespace detail {

inline Json check_json(const CheckLine& c, bool timings) {
  Json j{{"name", c.name},
         {"expected", c.expected},
         {"actual", c.actual},
         {"status", to_string(c.status)},
         {"optional", c.optional}};
  if (!c.note.empty()) j["note"] = c.note;
  if (timings) j["elapsed"] = c.elapsed;
  return j;
}

inline std::string check_text(const CheckLine& c, bool timings) {
  std::string s = c.text();
  if (timings) {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << c.elapsed;
    s += " [" + t.str() + "s]";
  }
  return s;
}

inline std::vector<Polynomial> ideal_by_name(const std::string& name, int d, const Budget& budget) {
  if (name == "lambda") return lambda_polynomials(d, LambdaPart::All);
  if (name == "lambda0") return lambda_polynomials(d, LambdaPart::L0);
  if (name == "lambda1") return lambda_polynomials(d, LambdaPart::L1);
  if (name == "lambda2") return lambda_polynomials(d, LambdaPart::L2);
  if (name == "oracle") return kernel_of_hom(phi_W(d), budget);
  throw Error(ErrorCode::BadParams, "unknown ideal " + name);
}

inline LambdaPart part_by_name(const std::string& name) {
  if (name == "all" || name == "lambda") return LambdaPart::All;
  if (name == "lambda0") return LambdaPart::L0;
  if (name == "lambda1") return LambdaPart::L1;
  if (name == "lambda2") return LambdaPart::L2;
  throw Error(ErrorCode::BadParams, "unknown part " + name);
}

inline Budget budget_or(double seconds, double fallback) {
  return Budget::seconds(seconds > 0 ? seconds : fallback);
}

}  // namespace detail

/// Executes one subcommand; text goes to `out`, diagnostics to `err`.
class Command {
 public:
  Command(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int gens() {
    const auto records = generators_lambda(opt_.d, detail::part_by_name(opt_.part));
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& r : records) {
      std::string ambient;
      for (int q : r.ambient) ambient += std::to_string(q);
      text << "L" << r.part << " {" << ambient << "} " << r.provenance << ": " << format_polynomial(r.value)
           << "\n";
      list.push_back({{"part", r.part},
                      {"ambient", r.ambient},
                      {"provenance", r.provenance},
                      {"leading", format_monomial(*r.value.ring(), r.leading)},
                      {"polynomial", to_json(r.value)}});
    }
    text << records.size() << " generators\n";
    Json j = header("gens");
    j["part"] = opt_.part;
    j["count"] = records.size();
    j["generators"] = std::move(list);
    return emit(text.str(), j, kOk);
  }

  int hf() {
    const Budget budget = detail::budget_or(opt_.budget_seconds, 1800);
    const auto gens = detail::ideal_by_name(opt_.ideal, opt_.d, budget);
    const auto value = static_cast<long long>(hf_exact(gens, opt_.degree, ring_W(opt_.d), &budget));
    std::optional<long long> expected;
    if (opt_.ideal == "lambda" || opt_.ideal == "oracle") {
      if (opt_.degree == 2) expected = hf_closed(HFKind::IX2, opt_.d, 2);
      if (opt_.degree == 3) expected = hf_closed(HFKind::IX3, opt_.d, 3);
    }
    std::ostringstream text;
    const std::string name = "HF" + std::to_string(opt_.degree) + "(" + opt_.ideal + ")";
    Json j = header("hf");
    j["ideal"] = opt_.ideal;
    j["degree"] = opt_.degree;
    j["value"] = value;
    int code = kOk;
    if (expected) {
      const CheckLine line = check_equal(name, *expected, value);
      text << line.text() << "\n";
      j["expected"] = *expected;
      j["status"] = to_string(line.status);
      if (line.status == CheckStatus::Fail) code = kVerificationFailed;
    } else {
      text << name << ": " << value << "\n";
    }
    return emit(text.str(), j, code);
  }

  int census_cmd() {
    const auto fam = parse_family(opt_.family);
    if (!fam) throw Error(ErrorCode::BadParams, "unknown family " + opt_.family);
    const auto set = enum_census(opt_.d, *fam, opt_.params);
    const RingPtr w = ring_W(opt_.d);
    std::string label = opt_.family;
    if (!opt_.params.empty()) {
      label += "[";
      for (std::size_t k = 0; k < opt_.params.size(); ++k) label += (k ? "," : "") + std::to_string(opt_.params[k]);
      label += "]";
    }
    std::ostringstream text;
    Json members = Json::array();
    for (const auto& m : set.members) {
      text << format_monomial(*w, m) << "\n";
      members.push_back(format_monomial(*w, m));
    }
    Json j = header("census");
    j["family"] = opt_.family;
    j["params"] = opt_.params;
    j["count"] = set.members.size();
    j["members"] = std::move(members);
    int code = kOk;
    const auto actual = static_cast<long long>(set.members.size());
    if (set.expected) {
      CheckLine line = check_equal(label, *set.expected, actual);
      if (actual > *set.expected && (*fam == Family::T || *fam == Family::Tmax)) line.status = CheckStatus::Flag;
      text << line.text() << "\n";
      j["expected"] = *set.expected;
      j["status"] = to_string(line.status);
      if (line.status == CheckStatus::Fail) code = kVerificationFailed;
    } else {
      text << label << ": " << actual << " members\n";
    }
    return emit(text.str(), j, code);
  }

  int verify_cmd() {
    std::set<std::string> groups(opt_.checks.begin(), opt_.checks.end());
    VerifyOptions vo;
    vo.deep = opt_.deep;
    vo.seed = opt_.seed;
    if (opt_.budget_seconds > 0) vo.fiber_budget_seconds = vo.rees_budget_seconds = opt_.budget_seconds;
    const VerifyReport report = verify(opt_.d, groups, vo);
    std::ostringstream text;
    text << "verify d=" << opt_.d << "\n";
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      text << detail::check_text(c, opt_.timings) << "\n";
      checks.push_back(detail::check_json(c, opt_.timings));
    }
    Json errata = Json::array();
    for (const auto& e : report.errata) {
      text << "erratum " << e.entry.label() << ": " << e.note << (e.witness_ok ? "" : " [witness failed]")
           << "\n";
      errata.push_back({{"entry", e.entry.label()},
                        {"documented", e.documented},
                        {"note", e.note},
                        {"witness_ok", e.witness_ok}});
    }
    const int code = report.exit_code();
    text << "exit " << code << "\n";
    Json j = header("verify");
    j["checks"] = std::move(checks);
    j["errata"] = std::move(errata);
    j["exitCode"] = code;
    return emit(text.str(), j, code);
  }

  int oracle() {
    const int d = opt_.d;
    const bool rees = opt_.target == "rees";
    const Budget budget = detail::budget_or(opt_.budget_seconds, rees ? 3600 : 1800);
    const RingPtr ring = rees ? ring_S(d) : ring_W(d);
    const auto kernel = rees ? rees_kernel_oracle(d, budget) : kernel_of_hom(phi_W(d), budget);
    const auto ideal = rees ? rees_ideal(d) : lambda_polynomials(d);
    const GroebnerBasis gk = buchberger(kernel, ring, std::nullopt, budget, "oracle");
    const GroebnerBasis gi = buchberger(ideal, ring, std::nullopt, budget, "oracle");
    std::vector<Polynomial> missing;
    for (const auto& f : kernel) {
      if (!in_ideal(f, gi)) missing.push_back(f);
    }
    std::vector<Polynomial> extra;
    for (const auto& f : ideal) {
      if (!in_ideal(f, gk)) extra.push_back(f);
    }
    const std::string name = rees ? "J" : "Lambda";
    std::ostringstream text;
    Json kj = Json::array();
    for (const auto& f : kernel) {
      text << format_polynomial(f) << "\n";
      kj.push_back(to_json(f));
    }
    Json mj = Json::array();
    for (const auto& f : missing) {
      text << "kernel element outside " << name << ": " << format_polynomial(f) << "\n";
      mj.push_back(to_json(f));
    }
    Json ej = Json::array();
    for (const auto& f : extra) {
      text << name << " element outside kernel: " << format_polynomial(f) << "\n";
      ej.push_back(to_json(f));
    }
    const bool equal = missing.empty() && extra.empty();
    text << "kernel generators: " << kernel.size() << "\n";
    text << check_true("oracle-" + opt_.target, equal).text() << "\n";
    Json j = header("oracle");
    j["target"] = opt_.target;
    j["kernel"] = std::move(kj);
    j["kernel_not_in_ideal"] = std::move(mj);
    j["ideal_not_in_kernel"] = std::move(ej);
    j["equal"] = equal;
    return emit(text.str(), j, equal ? kOk : kVerificationFailed);
  }

  int rees() {
    const int d = opt_.d;
    std::ostringstream text;
    Json j = header("rees");
    j["emit"] = opt_.emit;
    if (opt_.emit == "syzygies") {
      const auto theta = linear_syzygies(d);
      Json cols = Json::array();
      for (std::size_t c = 0; c < theta.columns.size(); ++c) {
        Json col = Json::object();
        text << "column " << c + 1 << ":";
        for (std::size_t g = 0; g < theta.rows.size(); ++g) {
          const auto& e = theta.columns[c][g];
          if (e.is_zero()) continue;
          text << " " << theta.rows[g].name() << " -> " << format_polynomial(e) << ";";
          col[json_key(theta.rows[g])] = to_json(e);
        }
        text << "\n";
        cols.push_back(std::move(col));
      }
      text << theta.columns.size() << " linear syzygies\n";
      j["columns"] = std::move(cols);
    } else if (opt_.emit == "witness") {
      const Polynomial h = integrality_witness(d);
      const bool ok = witness_map(d)(h).is_zero();
      text << "h = " << format_polynomial(h) << "\n" << check_true("witness", ok).text() << "\n";
      j["witness"] = to_json(h);
      j["status"] = ok ? "PASS" : "FAIL";
      return emit(text.str(), j, ok ? kOk : kVerificationFailed);
    } else if (opt_.emit == "L" || opt_.emit == "J") {
      const auto gens = opt_.emit == "L" ? sym_algebra_ideal(d) : rees_ideal(d);
      Json list = Json::array();
      for (const auto& f : gens) {
        text << format_polynomial(f) << "\n";
        list.push_back(to_json(f));
      }
      text << gens.size() << " generators\n";
      j["generators"] = std::move(list);
    } else {
      throw Error(ErrorCode::BadParams, "unknown --emit " + opt_.emit);
    }
    return emit(text.str(), j, kOk);
  }

 private:
  Json header(const std::string& command) const {
    return Json{{"schema", "fiber-forge/1"}, {"command", command}, {"d", opt_.d}};
  }

  int emit(const std::string& text, Json j, int code) {
    j["exitCode"] = code;
    if (opt_.format == "json") {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
    if (!opt_.out_path.empty()) {
      std::ofstream f(opt_.out_path);
      if (!f) {
        err_ << "cannot write " << opt_.out_path << "\n";
        return kUsage;
      }
      f << j.dump(2) << "\n";
    }
    return code;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

/// Parses argv and runs the chosen subcommand. Exit codes: 0 success, 1 a
/// verification failed, 2 usage error, 3 a required computation ran out of time.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Options opt;
  CLI::App app{"Special fiber and Rees ideals of quadrics one short of m^2", "fiberforge"};
  app.require_subcommand(1);

  auto shared = [&opt](CLI::App* sub) {
    sub->add_option("--d", opt.d, "matrix dimension")->check(CLI::Range(4, 50));
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", opt.out_path, "write the JSON report here");
    sub->add_option("--time-budget-seconds", opt.budget_seconds, "wall-clock budget for oracle computations")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", opt.seed, "seed for shuffled-input checks");
    sub->add_flag("--timings", opt.timings, "include elapsed times");
  };

  auto* gens = app.add_subcommand("gens", "list the generators of Lambda");
  shared(gens);
  gens->add_option("--part", opt.part)->check(CLI::IsMember({"all", "lambda", "lambda0", "lambda1", "lambda2"}));

  auto* hf = app.add_subcommand("hf", "exact Hilbert function of an ideal of W");
  shared(hf);
  hf->add_option("--degree", opt.degree)->check(CLI::Range(0, 12));
  hf->add_option("--ideal", opt.ideal)->check(CLI::IsMember({"lambda", "lambda0", "lambda1", "lambda2", "oracle"}));

  auto* cen = app.add_subcommand("census", "members and closed-form count of a monomial census");
  shared(cen);
  cen->add_option("--family", opt.family)->required();
  cen->add_option("--params", opt.params, "indices, e.g. 2,4")->delimiter(',');

  auto* ver = app.add_subcommand("verify", "run verification checks");
  shared(ver);
  std::vector<std::string> allowed{"all"};
  allowed.insert(allowed.end(), check_groups().begin(), check_groups().end());
  ver->add_option("--check", opt.checks)->delimiter(',')->check(CLI::IsMember(allowed));
  ver->add_flag("--deep", opt.deep, "also run the optional elimination oracles");

  auto* ora = app.add_subcommand("oracle", "kernel by elimination, compared with Lambda or J");
  shared(ora);
  ora->add_option("--target", opt.target)->check(CLI::IsMember({"fiber", "rees"}));

  auto* rs = app.add_subcommand("rees", "Rees ideal pieces");
  shared(rs);
  rs->add_option("--emit", opt.emit)->check(CLI::IsMember({"L", "J", "syzygies", "witness"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Command cmd(opt, out, err);
  try {
    if (*gens) return cmd.gens();
    if (*hf) return cmd.hf();
    if (*cen) return cmd.census_cmd();
    if (*ver) return cmd.verify_cmd();
    if (*ora) return cmd.oracle();
    if (*rs) return cmd.rees();
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(std::move(args), out, err);
}

}  // namespace fiberforge::cli
