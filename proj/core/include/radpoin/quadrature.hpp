#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "radpoin/radial.hpp"

namespace radpoin::quad {

enum class TailMode { truncate, power_law_extrapolate };
enum class Measure { hyperbolic, lebesgue_1d };

const char* to_string(TailMode m);

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 5000;
  double tail_horizon = 1e8;
  TailMode tail_mode = TailMode::power_law_extrapolate;

  // Throws SpecError on non-positive tolerances/horizon.
  void validate() const;
};

// Weight r^{-power} against the chosen measure.
struct WeightedIntegralSpec {
  double power = 0.0;
  Measure measure = Measure::hyperbolic;
};

using ScalarFn = std::function<double(double)>;

// Globally adaptive composite 15-point Gauss-Legendre on [a,b].  Panels
// never straddle a breakpoint.  Convergence target:
//   sum(err) <= max(abs_tol, rel_tol * sum|panel|).
// Throws NonConvergence when max_subdivisions is exhausted.
double integrate_interval(const ScalarFn& f, double a, double b, std::vector<double> breakpoints,
                          const QuadratureConfig& cfg = {});

// |S^{n-1}| int f(r) r^{-p} sinh^{n-1}(r) dr over the support (hyperbolic),
// or int f(r) r^{-p} dr (lebesgue_1d).
double integrate_hn_radial(const ScalarFn& f, Support support, std::vector<double> breakpoints, int n,
                           WeightedIntegralSpec w, const QuadratureConfig& cfg = {});
double integrate_hn_radial(const RadialFunction& f, int n, WeightedIntegralSpec w = {},
                           const QuadratureConfig& cfg = {});

struct TailResult {
  double value = 0.0;  // body + tail
  double body = 0.0;   // quadrature on [from, horizon]
  double tail = 0.0;   // modelled contribution beyond the horizon
  double horizon = 0.0;
  TailMode mode = TailMode::truncate;
};

// int_from^inf f.  The body is integrated in log t up to cfg.tail_horizon;
// beyond that f ~ c/t^2 is fitted at the horizon (extrapolate mode).
// Throws NonConvergence if t^2 f grows by more than 2x over the last decade.
TailResult integrate_tail(const ScalarFn& f, double from, const QuadratureConfig& cfg = {},
                          std::vector<double> breakpoints = {});

// int_0^inf f, split at breakpoints.  With a finite support_end the integral
// stops there; otherwise the part beyond the last breakpoint goes through
// integrate_tail.
double integrate_halfline(const ScalarFn& f, std::vector<double> breakpoints, const QuadratureConfig& cfg = {},
                          double support_end = std::numeric_limits<double>::infinity());

}  // namespace radpoin::quad
