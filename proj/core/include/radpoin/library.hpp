#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radpoin/radial.hpp"

// Radial test functions supported in [a,b] with 0 < a < b < inf.
namespace radpoin::library {

// exp(1 - 1/(1-s^2)), s = (2r-a-b)/(b-a); peak value 1 at the midpoint.
RadialFunction smooth_bump(double a, double b);
// (4(r-a)(b-r)/(b-a)^2)^degree; only C^{degree-1} at a and b.
RadialFunction poly_bump(int degree, double a, double b);
// exp(-(r-c)^2/(2 w^2)) * smooth_bump(a,b)
RadialFunction gaussian_window(double center, double width, double a, double b);
// cos(omega r) * smooth_bump(a,b)
RadialFunction oscillating_bump(double omega, double a, double b);
// (sum_j c_j x^j) * smooth_bump(a,b), x = (r-a)/(b-a)
RadialFunction poly_times_bump(std::vector<double> coeffs, double a, double b);
// f_R-shaped profile: linear ramp on (a,r0], r^{-1/2} on [r0,r1),
// r1^{-1/2}(2 - r/r1) on [r1, 2 r1).  Continuous, only H^1.
RadialFunction piecewise(double a, double r0, double r1);

// Dispatch by family name: smooth_bump(a,b), poly_bump(degree,a,b),
// gaussian_window(center,width,a,b), oscillating_bump(omega,a,b),
// piecewise(a,r0,r1), poly_times_bump(a,b,c0,c1,...).
RadialFunction test_function_library(const std::string& family, const std::vector<double>& params);

// The fixed 12-function library used by suites.  The seed drives the
// coefficients of the two random polynomial-times-bump members.
std::vector<RadialFunction> default_library(std::uint64_t seed = 20240613);

}  // namespace radpoin::library
