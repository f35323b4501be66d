#include "radpoin/hypgeom.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "detail/gauss.hpp"
#include "radpoin/errors.hpp"

namespace radpoin::hypgeom {

namespace {

constexpr double kSeriesSwitch = 1e-2;

double sinh_pow(double s, int m) { return std::pow(std::sinh(s), m); }

// Graded Gauss-Legendre: dyadic shells toward 0 keep the s^m behaviour of
// the integrand well resolved for large m.
double G_quadrature(double r, int m) {
  const auto& gl = detail::GaussLegendre<16>::get();
  auto f = [m](double s) { return sinh_pow(s, m); };
  const int shells = 2 + static_cast<int>(std::ceil(60.0 / (m + 1)));
  double total = 0.0;
  double hi = r;
  for (int j = 0; j < shells; ++j) {
    const double lo = (j + 1 == shells) ? 0.0 : 0.5 * hi;
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / 0.5)));
    const double w = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) total += gl.integrate(f, lo + p * w, lo + (p + 1) * w);
    hi = lo;
  }
  return total;
}

// int_0^r sinh^m = 2^{-m} sum_j C(m,j)(-1)^j (e^{(m-2j)r}-1)/(m-2j)
double G_exponential_sum(double r, int m) {
  double total = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= m; ++j) {
    const int e = m - 2 * j;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double term = (e == 0) ? r : std::expm1(e * r) / e;
    total += sign * binom * term;
    binom = binom * (m - j) / (j + 1);
  }
  return std::ldexp(total, -m);
}

}  // namespace

void require_dimension(int n) {
  if (n < 3) throw SpecError("dimension n must be >= 3, got " + std::to_string(n));
}

double sphere_surface_measure(int n) {
  require_dimension(n);
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double ball_volume_G(double r, int n) {
  require_dimension(n);
  if (!(r >= 0.0) || !std::isfinite(r)) throw SpecError("ball_volume_G: radius must be finite and >= 0");
  if (r == 0.0) return 0.0;
  const int m = n - 1;
  const double integral = (r < 3.0) ? G_quadrature(r, m) : G_exponential_sum(r, m);
  return sphere_surface_measure(n) * integral;
}

double ball_volume_dG(double r, int n) {
  return sphere_surface_measure(n) * sinh_pow(r, n - 1);
}

double ball_volume_inverse_F(double t, int n, double rel_tol) {
  require_dimension(n);
  if (!(t >= 0.0) || !std::isfinite(t)) throw SpecError("ball_volume_inverse_F: volume must be finite and >= 0");
  if (t == 0.0) return 0.0;
  const double S = sphere_surface_measure(n);

  // G(r) ~ S r^n/n near 0 and ~ S e^{(n-1)r}/((n-1)2^{n-1}) for large r.
  const double small = std::pow(n * t / S, 1.0 / n);
  const double large = std::log(t * (n - 1) * std::ldexp(1.0, n - 1) / S) / (n - 1);
  double r = (small < 1.0) ? small : std::max(large, 1.0);

  double lo = 0.0, hi = std::max(2.0 * r, 1.0);
  while (ball_volume_G(hi, n) < t) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw NonConvergence("ball_volume_inverse_F: could not bracket root");
  }
  if (!(r > lo && r < hi)) r = 0.5 * (lo + hi);

  for (int it = 0; it < 200; ++it) {
    const double g = ball_volume_G(r, n) - t;
    if (g == 0.0) return r;
    if (g < 0.0) lo = r; else hi = r;
    double next = r - g / ball_volume_dG(r, n);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - r);
    r = next;
    if (step <= rel_tol * r || hi - lo <= rel_tol * r) return r;
  }
  throw NonConvergence("ball_volume_inverse_F: no convergence for t=" + std::to_string(t));
}

double g_weight(double r) {
  if (!(r > 0.0)) throw SpecError("g_weight: r must be > 0");
  if (r < kSeriesSwitch) {
    const double r2 = r * r;
    return 1.0 / 3.0 - r2 / 45.0 + 2.0 * r2 * r2 / 945.0;
  }
  return (r / std::tanh(r) - 1.0) / (r * r);
}

double coth_minus_inv(double r) {
  if (!(r > 0.0)) throw SpecError("coth_minus_inv: r must be > 0");
  if (r < kSeriesSwitch) {
    const double r2 = r * r;
    return r * (1.0 / 3.0 - r2 / 45.0 + 2.0 * r2 * r2 / 945.0);
  }
  return 1.0 / std::tanh(r) - 1.0 / r;
}

double coth(double r) {
  if (!(r > 0.0)) throw SpecError("coth: r must be > 0");
  if (r < kSeriesSwitch) return 1.0 / r + coth_minus_inv(r);
  return 1.0 / std::tanh(r);
}

double sinh_growth_ratio(double t, int n) {
  if (!(t > 0.0)) throw SpecError("sinh_growth_ratio: t must be > 0");
  const double r = ball_volume_inverse_F(t, n);
  return ball_volume_dG(r, n) / ((n - 1) * t);
}

double threshold_R0(double eps, int n, const ThresholdScan& scan) {
  require_dimension(n);
  if (!(eps > 0.0)) throw SpecError("threshold_R0: eps must be > 0");
  if (!(scan.r_min > 0.0) || !(scan.q > 1.0) || !(scan.horizon > scan.r_min))
    throw SpecError("threshold_R0: invalid scan grid");
  std::vector<double> grid;
  for (double t = scan.r_min; t <= scan.horizon; t *= scan.q) grid.push_back(t);
  std::size_t first_ok = 0;
  for (std::size_t j = 0; j < grid.size(); ++j)
    if (sinh_growth_ratio(grid[j], n) > 1.0 + eps) first_ok = j + 1;
  if (first_ok >= grid.size())
    throw NonConvergence("threshold_R0: horizon insufficient for eps=" + std::to_string(eps));
  return grid[first_ok];
}

}  // namespace radpoin::hypgeom
