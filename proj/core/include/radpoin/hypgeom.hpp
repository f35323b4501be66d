#pragma once

// Geometry kernel for hyperbolic space H^n with curvature -1.

namespace radpoin::hypgeom {

// Throws SpecError unless n >= 3.
void require_dimension(int n);

// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2).  This is the factor the volume
// element carries: dv = |S^{n-1}| sinh^{n-1}(r) dr dsigma/|S^{n-1}|.
double sphere_surface_measure(int n);

// Volume of the geodesic ball of radius r.
double ball_volume_G(double r, int n);

// dG/dr = |S^{n-1}| sinh^{n-1}(r).
double ball_volume_dG(double r, int n);

// Inverse of ball_volume_G.  Safeguarded Newton, bisection fallback.
double ball_volume_inverse_F(double t, int n, double rel_tol = 1e-12);

// (r coth r - 1) / r^2, in (0, 1/3].
double g_weight(double r);

// coth r - 1/r.
double coth_minus_inv(double r);

// coth r with the 1/r singularity handled by coth_minus_inv's series.
double coth(double r);

// |S^{n-1}| sinh^{n-1}(F(t)) / ((n-1) t)  >= 1, -> 1 as t -> infinity.
double sinh_growth_ratio(double t, int n);

struct ThresholdScan {
  double r_min = 1e-6;
  double q = 1.05;
  double horizon = 1e6;
};

// Smallest grid point R0 such that every scanned t >= R0 (up to the horizon)
// has sinh_growth_ratio(t) <= 1 + eps.
double threshold_R0(double eps, int n, const ThresholdScan& scan = {});

}  // namespace radpoin::hypgeom
