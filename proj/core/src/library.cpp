#include "radpoin/library.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "radpoin/errors.hpp"

namespace radpoin::library {

namespace {

void check_interval(double a, double b) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b))
    throw SpecError("test function support needs 0 < a < b < inf");
}

std::string fmt(const char* family, std::initializer_list<double> p) {
  std::ostringstream os;
  os << family << "(";
  bool first = true;
  for (double v : p) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << ")";
  return os.str();
}

// Bump series; zero when the exponent underflows anyway.
Taylor bump_series(double r, int order, double a, double b) {
  const Taylor s = (2.0 * Taylor::variable(r, order) - (a + b)) * (1.0 / (b - a));
  const Taylor q = 1.0 - s * s;
  if (!(q[0] > 0.0) || 1.0 / q[0] > 700.0) return Taylor(order);
  return exp(1.0 - 1.0 / q);
}

double uniform_pm1(std::mt19937_64& g) {
  return 2.0 * static_cast<double>(g() >> 11) * 0x1.0p-53 - 1.0;
}

}  // namespace

RadialFunction smooth_bump(double a, double b) {
  check_interval(a, b);
  return RadialFunction([a, b](double r, int d) { return bump_series(r, d, a, b); }, Support{a, b}, {},
                        kSmooth, fmt("smooth_bump", {a, b}));
}

RadialFunction poly_bump(int degree, double a, double b) {
  check_interval(a, b);
  if (degree < 1) throw SpecError("poly_bump: degree must be >= 1");
  const double scale = 4.0 / ((b - a) * (b - a));
  return RadialFunction(
      [a, b, degree, scale](double r, int d) {
        const Taylor x = Taylor::variable(r, d);
        return ipow(scale * ((x - a) * (b - x)), degree);
      },
      Support{a, b}, {a, b}, degree - 1, fmt("poly_bump", {double(degree), a, b}));
}

RadialFunction gaussian_window(double center, double width, double a, double b) {
  check_interval(a, b);
  if (!(width > 0.0)) throw SpecError("gaussian_window: width must be > 0");
  return RadialFunction(
      [=](double r, int d) {
        const Taylor x = Taylor::variable(r, d) - center;
        return exp(x * x * (-0.5 / (width * width))) * bump_series(r, d, a, b);
      },
      Support{a, b}, {}, kSmooth, fmt("gaussian_window", {center, width, a, b}));
}

RadialFunction oscillating_bump(double omega, double a, double b) {
  check_interval(a, b);
  return RadialFunction(
      [=](double r, int d) {
        Taylor s, c;
        sin_cos(omega * Taylor::variable(r, d), s, c);
        return c * bump_series(r, d, a, b);
      },
      Support{a, b}, {}, kSmooth, fmt("oscillating_bump", {omega, a, b}));
}

RadialFunction poly_times_bump(std::vector<double> coeffs, double a, double b) {
  check_interval(a, b);
  if (coeffs.empty()) throw SpecError("poly_times_bump: need at least one coefficient");
  std::ostringstream name;
  name << "poly_times_bump(" << a << "," << b;
  for (double c : coeffs) name << "," << c;
  name << ")";
  return RadialFunction(
      [coeffs, a, b](double r, int d) {
        const Taylor x = (Taylor::variable(r, d) - a) * (1.0 / (b - a));
        Taylor p(d, coeffs.back());
        for (std::size_t j = coeffs.size() - 1; j-- > 0;) p = p * x + coeffs[j];
        return p * bump_series(r, d, a, b);
      },
      Support{a, b}, {}, kSmooth, name.str());
}

RadialFunction piecewise(double a, double r0, double r1) {
  check_interval(a, r0);
  if (!(r1 > r0)) throw SpecError("piecewise: need a < r0 < r1");
  return RadialFunction(
      [a, r0, r1](double r, int d) {
        const Taylor x = Taylor::variable(r, d);
        if (r < r0) return (x - a) * (1.0 / ((r0 - a) * std::sqrt(r0)));
        if (r < r1) return pow(x, -0.5);
        return (2.0 - x * (1.0 / r1)) * (1.0 / std::sqrt(r1));
      },
      Support{a, 2.0 * r1}, {a, r0, r1, 2.0 * r1}, 0, fmt("piecewise", {a, r0, r1}));
}

RadialFunction test_function_library(const std::string& family, const std::vector<double>& p) {
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw SpecError(family + ": expected " + std::to_string(k) + " parameters, got " +
                      std::to_string(p.size()));
  };
  if (family == "smooth_bump") {
    need(2);
    return smooth_bump(p[0], p[1]);
  }
  if (family == "poly_bump") {
    need(3);
    if (p[0] != std::round(p[0])) throw SpecError("poly_bump: degree must be an integer");
    return poly_bump(static_cast<int>(p[0]), p[1], p[2]);
  }
  if (family == "gaussian_window") {
    need(4);
    return gaussian_window(p[0], p[1], p[2], p[3]);
  }
  if (family == "oscillating_bump") {
    need(3);
    return oscillating_bump(p[0], p[1], p[2]);
  }
  if (family == "piecewise") {
    need(3);
    return piecewise(p[0], p[1], p[2]);
  }
  if (family == "poly_times_bump") {
    if (p.size() < 3) throw SpecError("poly_times_bump: expected a, b and coefficients");
    return poly_times_bump(std::vector<double>(p.begin() + 2, p.end()), p[0], p[1]);
  }
  throw SpecError("unknown test function family '" + family + "'");
}

std::vector<RadialFunction> default_library(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto random_coeffs = [&gen] {
    std::vector<double> c(5);
    c[0] = 1.0;
    for (std::size_t j = 1; j < c.size(); ++j) c[j] = 3.0 * uniform_pm1(gen);
    return c;
  };
  std::vector<RadialFunction> lib;
  lib.push_back(smooth_bump(0.1, 1.0));
  lib.push_back(smooth_bump(1.0, 4.0));
  lib.push_back(smooth_bump(5.0, 10.0));
  lib.push_back(smooth_bump(0.2, 8.0));
  lib.push_back(poly_bump(8, 0.1, 1.0));
  lib.push_back(poly_bump(8, 1.0, 4.0));
  lib.push_back(poly_bump(6, 5.0, 10.0));
  lib.push_back(gaussian_window(2.0, 0.3, 0.5, 4.0));
  lib.push_back(gaussian_window(7.0, 1.0, 5.0, 10.0));
  lib.push_back(oscillating_bump(6.0, 1.0, 4.0));
  lib.push_back(poly_times_bump(random_coeffs(), 0.3, 3.0));
  lib.push_back(poly_times_bump(random_coeffs(), 2.0, 9.0));
  return lib;
}

}  // namespace radpoin::library
