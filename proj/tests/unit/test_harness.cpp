#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "radpoin/errors.hpp"
#include "radpoin/harness.hpp"
#include "radpoin/library.hpp"
#include "radpoin/report.hpp"

using namespace radpoin;
using namespace radpoin::harness;
using doctest::Approx;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InequalitySpec spec(InequalityId id, int n, int alpha = 0, int k = 1, int l = 0, int beta = 1) {
  InequalitySpec s;
  s.id = id;
  s.n = n;
  s.alpha = alpha;
  s.k = k;
  s.l = l;
  s.beta = beta;
  return s;
}

}  // namespace

TEST_CASE("ids round trip") {
  CHECK(all_ids().size() == 20);
  for (auto id : all_ids()) CHECK(parse_id(to_string(id)) == id);
  CHECK_FALSE(parse_id("th9").has_value());
  CHECK(spec(InequalityId::th4, 9, 1).describe() == "th4(n=9,alpha=1)");
}

TEST_CASE("main poincare positive deficit") {
  const auto rep = check_inequality(spec(InequalityId::main_poincare, 4), {library::smooth_bump(1, 3)});
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].deficit > 0.0);
  CHECK(rep.verdict == Verdict::pass);
}

TEST_CASE("th1 at n=3, alpha=0 is the plain Hardy-Poincare bound") {
  const auto funcs = library::default_library();
  const auto rep = check_inequality(spec(InequalityId::th1, 3), funcs);
  quad::QuadratureConfig cfg;
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    const auto& u = funcs[i];
    const auto du = grad_r(u);
    auto sq = [](const RadialFunction& f) { return [f](double r) { return f(r) * f(r); }; };
    const double J = quad::integrate_hn_radial(sq(du), du.support(), du.breakpoints(), 3, {0.0}, cfg);
    const double I0 = quad::integrate_hn_radial(sq(u), u.support(), u.breakpoints(), 3, {0.0}, cfg);
    const double I2 = quad::integrate_hn_radial(sq(u), u.support(), u.breakpoints(), 3, {2.0}, cfg);
    CHECK(rep.rows[i].deficit == Approx(J - I0 - 0.25 * I2).epsilon(1e-12));
    CHECK(rep.rows[i].deficit >= 0.0);
  }
}

TEST_CASE("zero function") {
  const auto rep = check_inequality(spec(InequalityId::r20, 7), {RadialFunction::zero()});
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].deficit == 0.0);
  CHECK(rep.rows[0].rel_deficit == 0.0);
  CHECK(rep.verdict == Verdict::pass);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(check_inequality(spec(InequalityId::th4, 9, 5), library::default_library()), SpecError);
  CHECK_THROWS_AS(check_inequality(spec(InequalityId::th4, 9, 1), {}), SpecError);
  CHECK_THROWS_AS(check_inequality(spec(InequalityId::r21, 4), library::default_library()), SpecError);
  CHECK_THROWS_AS(check_inequality(spec(InequalityId::D_family, 9, 0, 3, 0), library::default_library()), SpecError);
  // only C^0 functions in the list: not admissible for a second-order inequality
  CHECK_THROWS_AS(check_inequality(spec(InequalityId::r21, 9), {library::piecewise(0.5, 1, 2)}), SpecError);
}

TEST_CASE("suite keeps going past spec errors") {
  std::vector<InequalitySpec> specs{spec(InequalityId::th4, 9, 1), spec(InequalityId::th4, 9, 5),
                                    spec(InequalityId::lemma3, 9)};
  const auto rep = run_suite("custom", specs, library::default_library());
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.checks[0].verdict == Verdict::pass);
  CHECK(rep.checks[1].verdict == Verdict::spec_error);
  CHECK(rep.checks[2].verdict == Verdict::pass);
  CHECK(rep.verdict() == Verdict::spec_error);
  CHECK_THROWS_AS(run_suite("custom", {}, library::default_library()), SpecError);
  CHECK_THROWS_AS(suite_specs("nope", 9), SpecError);
}

TEST_CASE("section 3 suite at n=9") {
  const auto rep = run_suite("all_section3", 9);
  CHECK(rep.checks.size() > 20);
  CHECK(rep.verdict() == Verdict::pass);
  CHECK(rep.min_rel_deficit() >= 0.0);
}

TEST_CASE("determinism") {
  const auto a = check_inequality(spec(InequalityId::cor4, 9, 1), library::default_library());
  const auto b = check_inequality(spec(InequalityId::cor4, 9, 1), library::default_library());
  CHECK(a == b);
  CHECK(report::to_json(a) == report::to_json(b));
  HarnessConfig other;
  other.quad.rel_tol = 1e-9;
  CHECK(config_hash(other) != config_hash(HarnessConfig{}));
}

TEST_CASE("report round trip") {
  auto rep = check_inequality(spec(InequalityId::C_family, 9, 0, 3, 1), library::default_library());
  rep.rows[0].func = "odd, \"name\"";
  CHECK(report::check_from_json(report::to_json(rep)) == rep);
  const auto rows = report::rows_from_csv(report::to_csv(rep));
  REQUIRE(rows.size() == rep.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].func == rep.rows[i].func);
    CHECK(rows[i].lhs == rep.rows[i].lhs);
    CHECK(rows[i].rel_deficit == rep.rows[i].rel_deficit);
  }
  const auto csv = report::to_csv(rep);
  CHECK(csv.substr(0, csv.find('\n')) == "func,lhs,rhs,deficit,rel_deficit");
  CHECK(report::to_json(rep).find("\"verdict\": \"pass\"") != std::string::npos);

  const std::string path = "harness_roundtrip.json";
  report::emit_report(rep, report::Format::json, path);
  CHECK(report::check_from_json(slurp(path)) == rep);
  std::remove(path.c_str());

  const auto suite = run_suite("custom", {spec(InequalityId::th4, 9, 1), spec(InequalityId::th4, 9, 5)},
                               library::default_library());
  const auto back = report::suite_from_json(report::to_json(suite));
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[0] == suite.checks[0]);
  CHECK(back.checks[1] == suite.checks[1]);
}

TEST_CASE("emit errors carry the path") {
  const auto rep = check_inequality(spec(InequalityId::lemma3, 9), {library::smooth_bump(1, 2)});
  try {
    report::emit_report(rep, report::Format::csv, "/nonexistent-dir/x.csv");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/x.csv") != std::string::npos);
  }
  CHECK_THROWS_AS(report::parse_format("xml"), SpecError);
}

TEST_CASE("config file") {
  std::istringstream in("# comment\nrel_tol = 1e-9\ntail_mode=truncate\nlibrary_seed = 42\n\ntolerance=1e-7\n");
  const auto cfg = report::parse_config(in);
  CHECK(cfg.quad.rel_tol == 1e-9);
  CHECK(cfg.quad.tail_mode == quad::TailMode::truncate);
  CHECK(cfg.library_seed == 42);
  CHECK(cfg.tolerance == 1e-7);
  std::istringstream bad("nope = 1\n");
  CHECK_THROWS_AS(report::parse_config(bad), SpecError);
  std::istringstream neg("rel_tol = -1\n");
  CHECK_THROWS_AS(report::parse_config(neg), SpecError);
}

TEST_CASE("a broken jet is reported as a failure") {
  // value of a bump, derivative forced to zero: J = 0 < (9/4) I
  const auto b = library::smooth_bump(1, 3);
  const RadialFunction fake(
      [b](double r, int order) {
        Taylor t = b.taylor(r, order);
        for (int k = 1; k <= order; ++k) t[k] = 0.0;
        return t;
      },
      b.support(), {}, kSmooth, "flat-jet");
  const auto rep = check_inequality(spec(InequalityId::main_poincare, 4), {b, fake});
  CHECK(rep.verdict == Verdict::fail);
  CHECK(rep.rows[0].deficit > 0.0);
  CHECK(rep.rows[1].rel_deficit == Approx(-1.0));
  const auto suite = run_suite("custom", {spec(InequalityId::main_poincare, 4), spec(InequalityId::th4, 9, 7)},
                               {b, fake});
  CHECK(suite.verdict() == Verdict::fail);
}
