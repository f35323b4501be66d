#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "radpoin/errors.hpp"
#include "radpoin/hypgeom.hpp"
#include "radpoin/library.hpp"
#include "radpoin/sharpness.hpp"

using namespace radpoin;
using namespace radpoin::sharp;
using doctest::Approx;

TEST_CASE("profile f_R") {
  const ProfileFR f(2.0, 50.0);
  CHECK(f.value(1.0) == Approx(1 / std::sqrt(2.0)));
  CHECK(f.value(100.0) == 0.0);
  CHECK(f.value(std::nextafter(50.0, 0.0)) == Approx(f.value(50.0)).epsilon(1e-12));
  CHECK(f.value(50.0) == Approx(1 / std::sqrt(50.0)));
  CHECK(f.cumulative(1.0) == Approx(1 / std::sqrt(2.0)));
  CHECK(f.cumulative(1000.0) == Approx(f.cumulative(100.0)));
  CHECK(f.l2_norm_sq() == Approx(std::log(25.0) + 4.0 / 3.0));
  CHECK_THROWS_AS(ProfileFR(2.0, 1.0), SpecError);
  SequenceParams p;
  p.R = 0.5;
  CHECK_THROWS_AS(p.validate(), SpecError);
}

TEST_CASE("lifted f_R integrals") {
  for (int n : {3, 4, 5})
    for (double L : {1.0, 5.0}) {
      const double R0 = 0.3;
      const ProfileFR f(R0, R0 * std::exp(L));
      const auto u = lift_to_hn(volume_profile(f), n);
      const double I = quad::integrate_hn_radial([&](double r) { return u(r) * u(r); }, u.support(), u.breakpoints(),
                                                 n, {0.0});
      CHECK(I == Approx(L + 4.0 / 3.0).epsilon(1e-8));
    }
}

TEST_CASE("ball volume series") {
  const Taylor g = ball_volume_series(0.8, 4, 5);
  CHECK(g.value() == Approx(hypgeom::ball_volume_G(0.8, 5)).epsilon(1e-13));
  CHECK(g.derivative(1) == Approx(hypgeom::ball_volume_dG(0.8, 5)).epsilon(1e-13));
  const Taylor s = ball_volume_series(1e-3, 2, 4);
  CHECK(s.value() == Approx(hypgeom::ball_volume_G(1e-3, 4)).epsilon(1e-12));
}

TEST_CASE("v iteration") {
  SequenceParams p{1.0, std::exp(3.0), 0.01, 2};
  const VIteration v(p, 4);
  CHECK(v.depth() == 2);
  // g_1 on [0,R0] is the mean of a constant
  for (double t : {1e-3, 0.2, 0.9}) CHECK(v.g(1, t) == Approx(1.0).epsilon(1e-10));
  // -Delta U_1 = U_0 at points away from the breakpoints
  const auto u1 = v.lifted(1);
  const auto u0 = lift_to_hn(volume_profile(v.profile()), 4);
  for (double r : {0.3, 1.7, 2.3, 4.0}) {
    const double res = laplace_r(u1, 4)(r) + u0(r);
    CHECK(std::abs(res) < 1e-6 * std::abs(u0(0.3)));
  }
  // U decreasing in r
  CHECK(v.U(1, 0.5) > v.U(1, 1.5));
  CHECK(v.U(1, 1.5) > v.U(1, 3.0));
  CHECK_THROWS_AS(v.U(3, 1.0), SpecError);
}

TEST_CASE("v iteration tail: horizon doubling") {
  SequenceParams p{1.0, std::exp(4.0), 0.01, 1};
  const VIteration v(p, 4);
  auto f = [&](double t) {
    const double x = v.v(1, t);
    return x * x;
  };
  quad::QuadratureConfig a, b;
  a.tail_horizon = 1e7;
  b.tail_horizon = 2e7;
  const double from = 2.0 * p.R;
  const double ta = quad::integrate_tail(f, from, a).value;
  const double tb = quad::integrate_tail(f, from, b).value;
  CHECK(ta == Approx(tb).epsilon(1e-6));
}

TEST_CASE("rayleigh quotient") {
  for (const auto& u : library::default_library()) {
    const auto q = rayleigh_quotient(u, 4, 1, 0);
    CHECK(q.quotient >= 2.25 * (1 - 1e-8));
  }
  const auto u = library::smooth_bump(1, 3);
  const auto a = rayleigh_quotient(u, 5, 2, 1);
  for (double c : {2.0, 0.5, 1024.0}) CHECK(rayleigh_quotient(scale(u, c), 5, 2, 1).quotient == a.quotient);
  CHECK(rayleigh_quotient(scale(u, 3.0), 5, 2, 1).quotient == Approx(a.quotient).epsilon(1e-14));
  CHECK_THROWS_AS(rayleigh_quotient(RadialFunction::zero(), 4, 1, 0), SpecError);
  CHECK_THROWS_AS(rayleigh_quotient(library::piecewise(0.5, 1, 2), 4, 2, 0), SpecError);
}

TEST_CASE("sweeps") {
  const auto s1 = sharpness_sweep(4, 1, 0, 0.01, {5, 10, 20});
  CHECK(s1.nonincreasing());
  CHECK(s1.above_sharp());
  CHECK(s1.within_bounds());
  CHECK(s1.construction == "lift(f_R)");
  const auto s2 = sharpness_sweep(5, 2, 0, 0.01, {5, 20});
  CHECK(s2.above_sharp());
  CHECK(s2.rows.back().quotient < s2.rows.front().quotient);
  CHECK(s2.rows.back().quotient <= 16 * std::pow(1.01, 4) * 1.1);
  CHECK_THROWS_AS(sharpness_sweep(4, 2, 1, 0.01, {5}), SpecError);
  CHECK_THROWS_AS(sharpness_sweep(4, 1, 0, 0.01, {}), SpecError);
}

TEST_CASE("k=1 quotient bracket along the sequence") {
  // the growth ratio lies in [1, 1+eps] above R0, which pins the quotient to
  // 2.25 (L+28/3)/(L+4/3) times a factor in [1, (1+eps)^2]
  const auto sw = sharpness_sweep(4, 1, 0, 0.01, {5, 20, 40});
  for (const auto& r : sw.rows) {
    const double base = 2.25 * (r.log_ratio + 28.0 / 3.0) / (r.log_ratio + 4.0 / 3.0);
    CHECK(r.quotient >= base * (1 - 1e-8));
    CHECK(r.quotient <= base * 1.01 * 1.01 * (1 + 1e-8));
    CHECK(r.bound_certified);
  }
}
