// hnineq: coefficient tables, inequality checks and sharpness sweeps on H^n.
//
// exit codes: 0 pass, 1 fail, 2 spec/hypothesis error, 3 numerical non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "radpoin/coefficients.hpp"
#include "radpoin/errors.hpp"
#include "radpoin/harness.hpp"
#include "radpoin/hypgeom.hpp"
#include "radpoin/library.hpp"
#include "radpoin/report.hpp"
#include "radpoin/sharpness.hpp"

using namespace radpoin;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kSpec = 2, kNumeric = 3 };

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

json table_json(const coeff::CoeffTable& t) {
  json j;
  j["family"] = coeff::to_string(t.family);
  j["n"] = t.n;
  j["version"] = coeff::kTableVersion;
  j["entries"] = json::array();
  for (int i = t.first_index; i <= t.last_index(); ++i)
    j["entries"].push_back({{"index", i}, {"weight", t.weight_exponent(i)}, {"value", coeff::to_string(t.at(i))}});
  j["checks"] = json::array();
  for (const auto& c : t.checks)
    j["checks"].push_back({{"label", c.label},
                           {"recursion", coeff::to_string(c.recursion)},
                           {"printed", coeff::to_string(c.printed)},
                           {"equal", c.equal()}});
  j["status"] = t.status();
  return j;
}

std::string table_csv(const coeff::CoeffTable& t) {
  std::string s = "index,weight,value\n";
  for (int i = t.first_index; i <= t.last_index(); ++i)
    s += std::to_string(i) + "," + std::to_string(t.weight_exponent(i)) + "," + coeff::to_string(t.at(i)) + "\n";
  for (const auto& c : t.checks)
    s += "# check " + c.label + ": recursion=" + coeff::to_string(c.recursion) +
         " printed=" + coeff::to_string(c.printed) + (c.equal() ? " ok" : " MISMATCH") + "\n";
  s += "# status " + t.status() + "\n";
  return s;
}

std::string emit_table(const coeff::CoeffTable& t, report::Format f) {
  return f == report::Format::json ? table_json(t).dump(2) + "\n" : table_csv(t);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw SpecError("bad number '" + item + "' in list");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial Poincare-Hardy-Rellich inequalities on hyperbolic space"};
  app.set_version_flag("--version", std::string(harness::kVersion));
  app.require_subcommand(1);

  std::string config_path, format = "json", out_path;
  app.add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);

  int n = 0, k = 1, l = 0, beta = 1;
  std::string alpha = "0", family = "sharp", spec_id, suite_name, eps = "0.01", ratios, iter = "auto";
  double tol = -1.0;

  auto* constants = app.add_subcommand("constants", "sharp constant or C/D coefficient table");
  constants->add_option("--n", n)->required();
  constants->add_option("--k", k)->required();
  constants->add_option("--l", l)->required();
  constants->add_option("--family", family)->check(CLI::IsMember({"sharp", "C", "D"}));
  constants->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* xi = app.add_subcommand("xi", "Xi table with endpoint verification");
  auto* zeta = app.add_subcommand("zeta", "zeta table with endpoint verification");
  for (auto* sc : {xi, zeta}) {
    sc->add_option("--n", n)->required();
    sc->add_option("--alpha", alpha)->required();
    sc->add_option("--beta", beta)->required();
    sc->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  }

  auto* check = app.add_subcommand("check", "check one inequality over the test-function library");
  check->add_option("--spec", spec_id)->required();
  check->add_option("--n", n)->required();
  check->add_option("--alpha", alpha);
  check->add_option("--k", k);
  check->add_option("--l", l);
  check->add_option("--beta", beta);
  check->add_option("--tol", tol);
  check->add_option("--out", out_path);
  check->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* suite = app.add_subcommand("suite", "run a named suite");
  suite->add_option("--name", suite_name)->required();
  suite->add_option("--n", n)->required();
  suite->add_option("--tol", tol);
  suite->add_option("--out", out_path);
  suite->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* sharpness = app.add_subcommand("sharpness", "quotient sweep along the minimizing sequence");
  sharpness->add_option("--n", n)->required();
  sharpness->add_option("--k", k)->required();
  sharpness->add_option("--l", l)->required();
  sharpness->add_option("--eps", eps);
  sharpness->add_option("--r-ratios", ratios, "comma list of ln(R/R0)")->required();
  sharpness->add_option("--iter", iter, "auto, or the depth implied by k");
  sharpness->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sharpness->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kSpec;
  }

  try {
    harness::HarnessConfig cfg;
    if (!config_path.empty()) cfg = report::load_config(config_path, cfg);
    if (tol >= 0.0) cfg.tolerance = tol;
    const auto fmt = report::parse_format(format);

    if (*constants) {
      if (family == "sharp") {
        const auto c = coeff::sharp_constant(n, k, l);
        if (fmt == report::Format::json)
          std::cout << json{{"family", "sharp"}, {"n", n}, {"k", k}, {"l", l}, {"value", coeff::to_string(c)},
                            {"approx", coeff::to_double(c)}}.dump(2)
                    << "\n";
        else
          std::cout << "n,k,l,value\n" << n << "," << k << "," << l << "," << coeff::to_string(c) << "\n";
        return kPass;
      }
      const auto t = family == "C" ? coeff::c_table(n, k, l) : coeff::d_table(n, k, l);
      std::cout << emit_table(t, fmt);
      return kPass;
    }
    if (*xi || *zeta) {
      const auto a = coeff::parse_rational(alpha);
      using boost::multiprecision::denominator;
      if (denominator(a) != 1) throw SpecError("--alpha must be an integer");
      const int ai = static_cast<int>(boost::multiprecision::numerator(a));
      const auto t = *xi ? coeff::xi_table(n, ai, beta) : coeff::zeta_table(n, ai, beta);
      std::cout << emit_table(t, fmt);
      return t.verified() ? kPass : kFail;
    }
    if (*check) {
      const auto id = harness::parse_id(spec_id);
      if (!id) throw SpecError("unknown spec id '" + spec_id + "'");
      harness::InequalitySpec s;
      s.id = *id;
      s.n = n;
      s.alpha = coeff::parse_rational(alpha);
      s.k = k;
      s.l = l;
      s.beta = beta;
      s.tolerance = cfg.tolerance;
      const auto rep = harness::check_inequality(s, library::default_library(cfg.library_seed), cfg);
      report::emit_report(rep, fmt, out_path);
      if (!out_path.empty())
        std::cerr << rep.spec << ": " << harness::to_string(rep.verdict) << " (min rel deficit "
                  << num(rep.min_rel_deficit()) << ")\n";
      return rep.verdict == harness::Verdict::pass ? kPass : kFail;
    }
    if (*suite) {
      const auto specs = harness::suite_specs(suite_name, n, cfg.tolerance);
      const auto rep = harness::run_suite(suite_name, specs, library::default_library(cfg.library_seed), cfg);
      report::emit_report(rep, fmt, out_path);
      for (const auto& c : rep.checks)
        std::cerr << c.spec << ": " << harness::to_string(c.verdict)
                  << (c.message.empty() ? "" : " [" + c.message + "]") << "\n";
      if (rep.numerical_failure()) return kNumeric;
      switch (rep.verdict()) {
        case harness::Verdict::pass: return kPass;
        case harness::Verdict::fail: return kFail;
        case harness::Verdict::spec_error: return kSpec;
      }
    }
    if (*sharpness) {
      const double e = coeff::to_double(coeff::parse_rational(eps));
      if (iter != "auto") {
        const int want = k == 1 ? 0 : (k % 2 == 0 ? k / 2 : (k + 1) / 2);
        int got = -1;
        try {
          got = std::stoi(iter);
        } catch (const std::exception&) {
        }
        if (got != want)
          throw SpecError("--iter " + iter + " does not match the construction for k=" + std::to_string(k) +
                          " (depth " + std::to_string(want) + ")");
      }
      const auto sw = sharp::sharpness_sweep(n, k, l, e, parse_list(ratios), cfg.quad);
      std::string text;
      if (fmt == report::Format::json) {
        json j{{"n", sw.n},          {"k", sw.k},         {"l", sw.l},
               {"eps", sw.eps},      {"R0", sw.R0},       {"sharp", sw.sharp},
               {"construction", sw.construction},         {"rows", json::array()}};
        for (const auto& r : sw.rows)
          j["rows"].push_back({{"log_ratio", r.log_ratio},
                               {"R", r.R},
                               {"numerator", r.numerator},
                               {"denominator", r.denominator},
                               {"quotient", r.quotient},
                               {"upper_bound", r.upper_bound},
                               {"bound_certified", r.bound_certified}});
        j["above_sharp"] = sw.above_sharp();
        j["nonincreasing"] = sw.nonincreasing();
        j["within_bounds"] = sw.within_bounds();
        text = j.dump(2) + "\n";
      } else {
        text = "log_ratio,R,numerator,denominator,quotient,upper_bound,bound_certified\n";
        for (const auto& r : sw.rows)
          text += num(r.log_ratio) + "," + num(r.R) + "," + num(r.numerator) + "," + num(r.denominator) + "," +
                  num(r.quotient) + "," + num(r.upper_bound) + "," + (r.bound_certified ? "1" : "0") + "\n";
      }
      write_out(text, out_path);
      return sw.above_sharp() && sw.within_bounds() ? kPass : kFail;
    }
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kSpec;
  } catch (const NonConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kPass;
}
