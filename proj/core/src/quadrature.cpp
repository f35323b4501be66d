#include "radpoin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "detail/gauss.hpp"
#include "radpoin/errors.hpp"
#include "radpoin/hypgeom.hpp"

namespace radpoin::quad {

namespace {

struct Panel {
  double a, b, value, err;
};

struct WorstFirst {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;  // deterministic tie-break
  }
};

Panel make_panel(const ScalarFn& f, double a, double b) {
  const auto& gl = detail::GaussLegendre<15>::get();
  const double m = 0.5 * (a + b);
  const double whole = gl.integrate(f, a, b);
  const double halves = gl.integrate(f, a, m) + gl.integrate(f, m, b);
  double err = std::abs(whole - halves);
  if (!std::isfinite(halves)) throw NonConvergence("quadrature: non-finite integrand on [" +
                                                   std::to_string(a) + "," + std::to_string(b) + "]");
  return {a, b, halves, err};
}

}  // namespace

const char* to_string(TailMode m) {
  return m == TailMode::truncate ? "truncate" : "power_law_extrapolate";
}

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw SpecError("quadrature tolerances must be > 0");
  if (!(tail_horizon > 0.0)) throw SpecError("tail_horizon must be > 0");
  if (max_subdivisions < 1) throw SpecError("max_subdivisions must be >= 1");
}

double integrate_interval(const ScalarFn& f, double a, double b, std::vector<double> breakpoints,
                          const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return 0.0;
  if (a > b) return -integrate_interval(f, b, a, std::move(breakpoints), cfg);

  std::vector<double> cuts{a};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double x : breakpoints)
    if (x > a && x < b && x > cuts.back()) cuts.push_back(x);
  cuts.push_back(b);

  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> heap;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) heap.push(make_panel(f, cuts[i], cuts[i + 1]));

  std::vector<Panel> done;  // panels too narrow to split further
  double err = 0.0, mag = 0.0;
  auto recompute = [&] {
    err = 0.0;
    mag = 0.0;
    auto copy = heap;
    while (!copy.empty()) {
      err += copy.top().err;
      mag += std::abs(copy.top().value);
      copy.pop();
    }
    for (const auto& p : done) {
      err += p.err;
      mag += std::abs(p.value);
    }
  };
  recompute();
  for (int splits = 0;; ++splits) {
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * mag) || heap.empty()) {
      recompute();  // running sums drift; confirm before stopping
      if (err <= std::max(cfg.abs_tol, cfg.rel_tol * mag) || heap.empty()) break;
    }
    if (splits >= cfg.max_subdivisions)
      throw NonConvergence("quadrature tolerance not reached within " + std::to_string(cfg.max_subdivisions) +
                           " subdivisions on [" + std::to_string(a) + "," + std::to_string(b) +
                           "], error estimate " + std::to_string(err));
    Panel worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b) || (worst.b - worst.a) < 1e-14 * std::abs(m)) {
      done.push_back(worst);
      continue;
    }
    const Panel left = make_panel(f, worst.a, m), right = make_panel(f, m, worst.b);
    err += left.err + right.err - worst.err;
    mag += std::abs(left.value) + std::abs(right.value) - std::abs(worst.value);
    heap.push(left);
    heap.push(right);
  }

  std::vector<Panel> all(done);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double total = 0.0;
  for (const auto& p : all) total += p.value;
  return total;
}

TailResult integrate_tail(const ScalarFn& f, double from, const QuadratureConfig& cfg,
                          std::vector<double> breakpoints) {
  cfg.validate();
  if (!(from > 0.0)) throw SpecError("integrate_tail: lower limit must be > 0");
  TailResult out;
  out.mode = cfg.tail_mode;
  out.horizon = std::max(cfg.tail_horizon, 10.0 * from);
  const double H = out.horizon;

  std::vector<double> log_breaks;
  for (double x : breakpoints)
    if (x > from && x < H) log_breaks.push_back(std::log(x));
  auto g = [&f](double s) {
    const double t = std::exp(s);
    return f(t) * t;
  };
  out.body = integrate_interval(g, std::log(from), std::log(H), log_breaks, cfg);

  const double cH = f(H) * H * H;
  const double cDecade = f(0.1 * H) * 0.01 * H * H;
  if (std::abs(cH) > 2.0 * std::abs(cDecade) + 1e-300)
    throw NonConvergence("integrate_tail: t^2 f(t) still growing at horizon " + std::to_string(H) +
                         "; decay not detected");
  out.tail = (cfg.tail_mode == TailMode::power_law_extrapolate) ? cH / H : 0.0;
  out.value = out.body + out.tail;
  return out;
}

double integrate_halfline(const ScalarFn& f, std::vector<double> breakpoints, const QuadratureConfig& cfg,
                          double support_end) {
  std::sort(breakpoints.begin(), breakpoints.end());
  if (std::isfinite(support_end)) return integrate_interval(f, 0.0, support_end, breakpoints, cfg);
  const double split = breakpoints.empty() ? 1.0 : std::max(breakpoints.back(), 1e-300);
  const double body = integrate_interval(f, 0.0, split, breakpoints, cfg);
  return body + integrate_tail(f, split, cfg).value;
}

double integrate_hn_radial(const ScalarFn& f, Support support, std::vector<double> breakpoints, int n,
                           WeightedIntegralSpec w, const QuadratureConfig& cfg) {
  const bool hyp = w.measure == Measure::hyperbolic;
  if (hyp) hypgeom::require_dimension(n);
  if (w.power > 0.0 && support.lo <= 0.0)
    throw SpecError("integrate_hn_radial: weight r^-" + std::to_string(w.power) +
                    " with support touching the pole diverges");
  const double S = hyp ? hypgeom::sphere_surface_measure(n) : 1.0;
  const double p = w.power;
  auto integrand = [&](double r) {
    if (r <= 0.0) return 0.0;
    double v = f(r);
    if (v == 0.0) return 0.0;
    if (p != 0.0) v *= std::pow(r, -p);
    if (hyp) v *= S * std::pow(std::sinh(r), n - 1);
    return v;
  };
  if (std::isfinite(support.hi)) return integrate_interval(integrand, support.lo, support.hi, breakpoints, cfg);
  const double split = std::max(support.lo + 1.0, breakpoints.empty() ? 0.0 : breakpoints.back());
  return integrate_interval(integrand, support.lo, split, breakpoints, cfg) +
         integrate_tail(integrand, split, cfg).value;
}

double integrate_hn_radial(const RadialFunction& f, int n, WeightedIntegralSpec w, const QuadratureConfig& cfg) {
  return integrate_hn_radial([&f](double r) { return f(r); }, f.support(), f.breakpoints(), n, w, cfg);
}

}  // namespace radpoin::quad
