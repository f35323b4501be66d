#include "radpoin/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "radpoin/errors.hpp"
#include "radpoin/hypgeom.hpp"
#include "radpoin/library.hpp"

namespace radpoin::harness {

using coeff::Rational;

namespace {

struct IdName {
  InequalityId id;
  const char* name;
};

constexpr IdName kIds[] = {
    {InequalityId::main_poincare, "main_poincare"}, {InequalityId::th1, "th1"},
    {InequalityId::cor1, "cor1"},                   {InequalityId::th2, "th2"},
    {InequalityId::cor2, "cor2"},                   {InequalityId::lemma3, "lemma3"},
    {InequalityId::mu_bound, "mu_bound"},           {InequalityId::th3, "th3"},
    {InequalityId::cor3, "cor3"},                   {InequalityId::lemma5, "lemma5"},
    {InequalityId::th4, "th4"},                     {InequalityId::cor4, "cor4"},
    {InequalityId::lemma6, "lemma6"},               {InequalityId::lemma7, "lemma7"},
    {InequalityId::r21, "r21"},                     {InequalityId::r20, "r20"},
    {InequalityId::dr21, "dr21"},                   {InequalityId::dr20, "dr20"},
    {InequalityId::C_family, "C_family"},           {InequalityId::D_family, "D_family"},
};

enum class ParamKind { none, alpha, kl, alpha_beta };

ParamKind params_of(InequalityId id) {
  switch (id) {
    case InequalityId::main_poincare:
    case InequalityId::C_family:
    case InequalityId::D_family: return ParamKind::kl;
    case InequalityId::lemma6:
    case InequalityId::lemma7: return ParamKind::alpha_beta;
    case InequalityId::lemma3:
    case InequalityId::mu_bound:
    case InequalityId::r21:
    case InequalityId::r20:
    case InequalityId::dr21:
    case InequalityId::dr20: return ParamKind::none;
    default: return ParamKind::alpha;
  }
}

void need(bool ok, const InequalitySpec& s, const char* what) {
  if (!ok) throw SpecError(s.describe() + ": hypothesis violated: " + what);
}

// Weighted energies of one function, memoised by (order, weight power, g?).
class Energies {
 public:
  Energies(const RadialFunction& u, int n, const quad::QuadratureConfig& cfg) : u_(u), n_(n), cfg_(cfg) {}

  // int |grad_r^k u|^2 r^{-p} dv
  double E(int k, double p) { return get(k, p, false); }
  // int g(r) u^2 r^{-p} dv
  double Gw(double p) { return get(0, p, true); }
  double I(double p) { return E(0, p); }
  double J(double p) { return E(1, p); }
  double L(double p) { return E(2, p); }

 private:
  double get(int k, double p, bool gw) {
    const auto key = std::make_tuple(k, p, gw);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const RadialFunction w = nabla_r_k(u_, k, n_);
    auto f = [&w, gw](double r) {
      const double v = w(r);
      return gw ? v * v * hypgeom::g_weight(r) : v * v;
    };
    const double val = quad::integrate_hn_radial(f, w.support(), w.breakpoints(), n_, {p}, cfg_);
    memo_.emplace(key, val);
    return val;
  }

  const RadialFunction& u_;
  int n_;
  const quad::QuadratureConfig& cfg_;
  std::map<std::tuple<int, double, bool>, double> memo_;
};

double d(const Rational& q) { return coeff::to_double(q); }

// lhs/rhs of one inequality for one function, with table provenance.
std::pair<double, double> sides(const InequalitySpec& s, Energies& e, std::string& table) {
  const int n = s.n;
  const double a = d(s.alpha);
  const double x2 = 0.25 * (n - 1.0) * (n - 1.0);
  table = std::string(coeff::kTableVersion);
  switch (s.id) {
    case InequalityId::main_poincare: {
      table += ":sharp";
      return {e.E(s.k, 0), d(coeff::sharp_constant(n, s.k, s.l)) * e.E(s.l, 0)};
    }
    case InequalityId::th1:
    case InequalityId::cor1: {
      const auto c = coeff::hardy_th1_coeffs(n, s.alpha);
      table += ":th1";
      double rhs = d(c[0]) * e.I(a + 2) + d(c[1]) * e.I(a);
      if (s.id == InequalityId::th1) rhs += d(c[2]) * e.Gw(a);
      return {e.J(a), rhs};
    }
    case InequalityId::th2:
    case InequalityId::cor2:
    case InequalityId::cor3: {
      const auto src = s.id == InequalityId::th2 ? coeff::RellichSource::th2
                       : s.id == InequalityId::cor2 ? coeff::RellichSource::cor2
                                                    : coeff::RellichSource::cor3;
      const auto c = coeff::rellich_triples(src, n, s.alpha);
      table += std::string(":") + coeff::to_string(src);
      double rhs = d(c[0]) * e.I(a + 2) + d(c[1]) * e.I(a);
      if (c.size() > 2) rhs += d(c[2]) * e.Gw(a);
      return {e.L(a - 2), rhs};
    }
    case InequalityId::lemma3:
      return {4.0 * e.J(n - 2.0), e.I(n - 2.0)};
    case InequalityId::mu_bound:
      return {e.J(n - 2.0), 0.25 * (n - 1.0) * e.I(n - 2.0)};
    case InequalityId::th3: {
      const auto c = coeff::hardy_th3_coeffs(n, s.alpha);
      table += ":th3";
      return {e.J(a), d(c[0]) * e.I(a + 2) + d(c[1]) * e.I(a)};
    }
    case InequalityId::lemma5: {
      // int r^{-a}(Delta u + K u/r^2)^2 <= L_a - 2K J_{a+2} + c I_{a+4}; expanding the
      // square, the inequality is  L_a - 2K J_{a+2} + c I_{a+4} >= L_a + 2K X + K^2 I_{a+4}
      // with X = int u Delta u r^{-a-2}.  We integrate the square directly instead.
      const double K = (n + a) * (n - a - 4) / 4.0;
      const double c = (n + a) * (n - 3 * a - 8) * (n - a - 4) * (n - a - 4) / 16.0;
      return {e.L(a) - 2.0 * K * e.J(a + 2) + c * e.I(a + 4), std::numeric_limits<double>::quiet_NaN()};
    }
    case InequalityId::th4:
    case InequalityId::cor4: {
      const auto src = s.id == InequalityId::th4 ? coeff::RellichSource::th4 : coeff::RellichSource::cor4;
      const auto c = coeff::rellich_triples(src, n, s.alpha);
      table += std::string(":") + coeff::to_string(src);
      return {e.L(a), d(c[0]) * e.I(a + 4) + d(c[1]) * e.I(a + 2) + d(c[2]) * e.I(a)};
    }
    case InequalityId::lemma6:
    case InequalityId::lemma7: {
      const int ai = static_cast<int>(a);
      const auto t = s.id == InequalityId::lemma6 ? coeff::xi_table(n, ai, s.beta) : coeff::zeta_table(n, ai, s.beta);
      table += std::string(":") + coeff::to_string(t.family) + "(" + std::to_string(n) + "," +
               std::to_string(ai) + "," + std::to_string(s.beta) + ")/" + t.status();
      double rhs = 0.0;
      for (int j = t.first_index; j <= t.last_index(); ++j) rhs += d(t.at(j)) * e.I(t.weight_exponent(j));
      return {e.E(2 * s.beta, a), rhs};
    }
    case InequalityId::r21:
    case InequalityId::dr21: {
      const double low = s.id == InequalityId::r21 ? (n - 1) / 16.0 : (n - 1) / 8.0;
      table += s.id == InequalityId::r21 ? ":r21" : ":dr21";
      return {e.L(0), x2 * e.J(0) + (n - 4.0) * (n - 4.0) / 16.0 * e.I(4) + low * e.I(2)};
    }
    case InequalityId::r20:
    case InequalityId::dr20: {
      const double low = s.id == InequalityId::r20 ? n * (n - 1) / 16.0 : (n * double(n) - 1) / 16.0;
      table += s.id == InequalityId::r20 ? ":r20" : ":dr20";
      return {e.L(0), x2 * x2 * e.I(0) + (n - 4.0) * (n - 4.0) / 16.0 * e.I(4) + low * e.I(2)};
    }
    case InequalityId::C_family:
    case InequalityId::D_family: {
      const auto t = s.id == InequalityId::C_family ? coeff::c_table(n, s.k, s.l) : coeff::d_table(n, s.k, s.l);
      table += std::string(":") + coeff::to_string(t.family) + "(" + std::to_string(n) + "," + std::to_string(s.k) +
               "," + std::to_string(s.l) + ")/" + t.status();
      double rhs = d(coeff::sharp_constant(n, s.k, s.l)) * e.E(s.l, 0);
      for (int i = t.first_index; i <= t.last_index(); ++i) rhs += d(t.at(i)) * e.I(t.weight_exponent(i));
      return {e.E(s.k, 0), rhs};
    }
  }
  throw SpecError("unhandled inequality id");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const char* to_string(InequalityId id) {
  for (const auto& e : kIds)
    if (e.id == id) return e.name;
  return "?";
}

std::optional<InequalityId> parse_id(const std::string& s) {
  for (const auto& e : kIds)
    if (s == e.name) return e.id;
  return std::nullopt;
}

const std::vector<InequalityId>& all_ids() {
  static const std::vector<InequalityId> ids = [] {
    std::vector<InequalityId> v;
    for (const auto& e : kIds) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string InequalitySpec::describe() const {
  std::ostringstream os;
  os << to_string(id) << "(n=" << n;
  switch (params_of(id)) {
    case ParamKind::alpha: os << ",alpha=" << coeff::to_string(alpha); break;
    case ParamKind::kl: os << ",k=" << k << ",l=" << l; break;
    case ParamKind::alpha_beta: os << ",alpha=" << coeff::to_string(alpha) << ",beta=" << beta; break;
    case ParamKind::none: break;
  }
  os << ")";
  return os.str();
}

int InequalitySpec::derivative_order() const {
  switch (id) {
    case InequalityId::main_poincare:
    case InequalityId::C_family:
    case InequalityId::D_family: return k;
    case InequalityId::lemma6:
    case InequalityId::lemma7: return 2 * beta;
    case InequalityId::th1:
    case InequalityId::cor1:
    case InequalityId::lemma3:
    case InequalityId::mu_bound:
    case InequalityId::th3: return 1;
    default: return 2;
  }
}

void validate(const InequalitySpec& s) {
  need(s.n >= 3, s, "n >= 3");
  need(s.tolerance >= 0.0, s, "tolerance >= 0");
  const Rational& a = s.alpha;
  const int n = s.n;
  switch (s.id) {
    case InequalityId::main_poincare: need(s.l >= 0 && s.k > s.l, s, "k > l >= 0"); break;
    case InequalityId::th1: need(a >= 0 && 2 * a < n + 3, s, "0 <= 2 alpha < n + 3"); break;
    case InequalityId::cor1: need(a >= 0 && 2 * a <= n - 3, s, "0 <= 2 alpha <= n - 3"); break;
    case InequalityId::th2: {
      const Rational b1 = a + 2, b2 = 2 * a - 3;
      need(a > 0 && n > b1 && n > b2, s, "alpha > 0 and n > max(alpha + 2, 2 alpha - 3)");
      break;
    }
    case InequalityId::cor2: need(a >= 0 && 2 * a <= n - 3, s, "0 <= 2 alpha <= n - 3"); break;
    case InequalityId::lemma3:
    case InequalityId::mu_bound: break;
    case InequalityId::th3:
    case InequalityId::cor3: need(a >= 0 && a < n - 2, s, "0 <= alpha < n - 2"); break;
    case InequalityId::lemma5: need(a >= -2 && a < n - 4, s, "-2 <= alpha < n - 4"); break;
    case InequalityId::th4: need(a >= 0 && a < n - 4, s, "0 <= alpha < n - 4"); break;
    case InequalityId::cor4: need(a >= 0 && 2 * a <= n - 7, s, "0 <= 2 alpha <= n - 7"); break;
    case InequalityId::lemma6:
    case InequalityId::lemma7: {
      using boost::multiprecision::denominator;
      need(denominator(a) == 1, s, "alpha integer");
      need(s.beta >= 1, s, "beta >= 1");
      if (s.id == InequalityId::lemma6)
        need(a >= 0 && a < n - 4 * s.beta, s, "0 <= alpha < n - 4 beta");
      else
        need(a >= 0 && 2 * a <= n - 8 * s.beta + 1, s, "0 <= 2 alpha <= n - 8 beta + 1");
      break;
    }
    case InequalityId::r21:
    case InequalityId::r20: need(n >= 5, s, "n >= 5"); break;
    case InequalityId::dr21:
    case InequalityId::dr20: need(n >= 7, s, "n >= 7"); break;
    case InequalityId::C_family: need(s.l >= 0 && s.k > s.l && n > 2 * s.k, s, "0 <= l < k and n > 2k"); break;
    case InequalityId::D_family: need(s.l >= 0 && s.k > s.l && n >= 4 * s.k - 1, s, "0 <= l < k and n >= 4k - 1"); break;
  }
}

std::string config_hash(const HarnessConfig& cfg, const std::string& salt) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "rel=%.17g;abs=%.17g;max=%d;horizon=%.17g;tail=%s;seed=%llu;tol=%.17g;",
                cfg.quad.rel_tol, cfg.quad.abs_tol, cfg.quad.max_subdivisions, cfg.quad.tail_horizon,
                quad::to_string(cfg.quad.tail_mode), static_cast<unsigned long long>(cfg.library_seed), cfg.tolerance);
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(fnv1a(std::string(buf) + salt)));
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::spec_error: return "spec_error";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "spec_error") return Verdict::spec_error;
  throw SpecError("unknown verdict '" + s + "'");
}

double CheckReport::min_rel_deficit() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) m = std::min(m, r.rel_deficit);
  return m;
}

CheckReport check_inequality(const InequalitySpec& spec, const std::vector<RadialFunction>& funcs,
                             const HarnessConfig& cfg) {
  validate(spec);
  cfg.quad.validate();
  if (funcs.empty()) throw SpecError(spec.describe() + ": empty function list");
  CheckReport rep;
  rep.n = spec.n;
  rep.spec = spec.describe();
  rep.tolerance = spec.tolerance;
  rep.config_hash = config_hash(cfg, rep.spec);
  const int order = spec.derivative_order();
  for (const auto& u : funcs) {
    if (u.smoothness() != kSmooth && u.smoothness() < order - 1) continue;  // not in H^order
    Energies e(u, spec.n, cfg.quad);
    CheckRow row;
    row.func = u.name();
    auto [lhs, rhs] = sides(spec, e, row.coeff_table);
    if (spec.id == InequalityId::lemma5) {
      const double a = coeff::to_double(spec.alpha);
      const double K = (spec.n + a) * (spec.n - a - 4) / 4.0;
      const RadialFunction lap = laplace_r(u, spec.n);
      auto sq = [&](double r) {
        const double v = lap(r) + K * u(r) / (r * r);
        return v * v;
      };
      rhs = quad::integrate_hn_radial(sq, u.support(), u.breakpoints(), spec.n, {a}, cfg.quad);
      row.coeff_table += ":lemma5";
    }
    row.lhs = lhs;
    row.rhs = rhs;
    row.deficit = lhs - rhs;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    row.rel_deficit = scale > 0.0 ? row.deficit / scale : 0.0;
    rep.rows.push_back(row);
  }
  if (rep.rows.empty()) throw SpecError(spec.describe() + ": no admissible test function (insufficient smoothness)");
  rep.verdict = Verdict::pass;
  for (const auto& r : rep.rows)
    if (!(r.rel_deficit >= -spec.tolerance)) rep.verdict = Verdict::fail;
  return rep;
}

Verdict SuiteReport::verdict() const {
  bool spec_err = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return Verdict::fail;
    if (c.verdict == Verdict::spec_error) spec_err = true;
  }
  return spec_err ? Verdict::spec_error : Verdict::pass;
}

double SuiteReport::min_rel_deficit() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : checks)
    if (c.verdict != Verdict::spec_error) m = std::min(m, c.min_rel_deficit());
  return m;
}

bool SuiteReport::numerical_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.numerical_failure; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all_section2", "all_section3", "all_section4", "all"};
  return names;
}

std::vector<InequalitySpec> suite_specs(const std::string& name, int n, double tolerance) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw SpecError("unknown suite '" + name + "'");
  std::vector<InequalitySpec> out;
  auto keep = [&](InequalitySpec s) {
    s.n = n;
    s.tolerance = tolerance;
    try {
      validate(s);
      out.push_back(s);
    } catch (const SpecError&) {
    }
  };
  const bool all = name == "all";
  const int kmax = 4;
  if (all || name == "all_section2") {
    for (int k = 1; k <= kmax; ++k)
      for (int l = 0; l < k; ++l) keep({InequalityId::main_poincare, n, 0, k, l});
  }
  if (all || name == "all_section3") {
    const InequalityId alpha_ids[] = {InequalityId::th1, InequalityId::cor1, InequalityId::th2,  InequalityId::cor2,
                                      InequalityId::th3, InequalityId::cor3, InequalityId::lemma5, InequalityId::th4,
                                      InequalityId::cor4};
    for (auto id : alpha_ids)
      for (int a = 0; a <= 2; ++a) keep({id, n, a});
    keep({InequalityId::lemma3, n});
    keep({InequalityId::mu_bound, n});
    for (auto id : {InequalityId::lemma6, InequalityId::lemma7})
      for (int b = 1; b <= 2; ++b)
        for (int a = 0; a <= 2; ++a) keep({id, n, a, 1, 0, b});
  }
  if (all || name == "all_section4") {
    for (auto id : {InequalityId::r21, InequalityId::r20, InequalityId::dr21, InequalityId::dr20}) keep({id, n});
    for (auto id : {InequalityId::C_family, InequalityId::D_family})
      for (int k = 1; k <= kmax; ++k)
        for (int l = 0; l < k; ++l) keep({id, n, 0, k, l});
  }
  return out;
}

SuiteReport run_suite(const std::string& name, const std::vector<InequalitySpec>& specs,
                      const std::vector<RadialFunction>& funcs, const HarnessConfig& cfg) {
  if (specs.empty()) throw SpecError("suite '" + name + "' has no specs");
  SuiteReport rep;
  rep.name = name;
  rep.n = specs.front().n;
  for (const auto& s : specs) {
    try {
      rep.checks.push_back(check_inequality(s, funcs, cfg));
    } catch (const SpecError& e) {
      CheckReport c;
      c.n = s.n;
      c.spec = s.describe();
      c.tolerance = s.tolerance;
      c.config_hash = config_hash(cfg, c.spec);
      c.verdict = Verdict::spec_error;
      c.message = e.what();
      rep.checks.push_back(c);
    } catch (const NonConvergence& e) {
      CheckReport c;
      c.n = s.n;
      c.spec = s.describe();
      c.tolerance = s.tolerance;
      c.config_hash = config_hash(cfg, c.spec);
      c.verdict = Verdict::fail;
      c.numerical_failure = true;
      c.message = e.what();
      rep.checks.push_back(c);
    }
  }
  return rep;
}

SuiteReport run_suite(const std::string& name, int n, const HarnessConfig& cfg) {
  return run_suite(name, suite_specs(name, n, cfg.tolerance), library::default_library(cfg.library_seed), cfg);
}

}  // namespace radpoin::harness
