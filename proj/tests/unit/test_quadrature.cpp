#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "radpoin/errors.hpp"
#include "radpoin/hypgeom.hpp"
#include "radpoin/library.hpp"
#include "radpoin/quadrature.hpp"
#include "radpoin/sharpness.hpp"

using namespace radpoin;
using namespace radpoin::quad;
using doctest::Approx;

TEST_CASE("interval basics") {
  CHECK(integrate_interval([](double x) { return std::sin(x); }, 0, M_PI, {}) == Approx(2.0).epsilon(1e-13));
  CHECK(integrate_interval([](double x) { return std::abs(x - 0.3); }, 0, 1, {0.3}) ==
        Approx(0.5 * (0.09 + 0.49)).epsilon(1e-14));
  // kink not announced: adaptivity still has to find it
  CHECK(integrate_interval([](double x) { return std::abs(x - 0.3); }, 0, 1, {}) ==
        Approx(0.29).epsilon(1e-10));
  CHECK(integrate_interval([](double) { return 0.0; }, 0, 1, {}) == 0.0);
  QuadratureConfig tight;
  tight.max_subdivisions = 3;
  CHECK_THROWS_AS(integrate_interval([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, {}, tight), NonConvergence);
  QuadratureConfig bad;
  bad.rel_tol = -1;
  CHECK_THROWS_AS(bad.validate(), SpecError);
}

TEST_CASE("ball volumes by quadrature") {
  for (double r : {0.5, 1.0, 2.0}) {
    const double v = integrate_hn_radial([](double) { return 1.0; }, Support{0, r}, {}, 3, {0.0});
    CHECK(v == Approx(M_PI * (std::sinh(2 * r) - 2 * r)).epsilon(1e-10));
    CHECK(v == Approx(hypgeom::ball_volume_G(r, 3)).epsilon(1e-10));
  }
  CHECK(integrate_hn_radial([](double) { return 1.0; }, Support{0, 1}, {}, 3, {0.0}) ==
        Approx(5.1109327057082889769).epsilon(1e-12));
}

TEST_CASE("weights and measures") {
  // int_1^2 r^{-2} dr = 1/2
  CHECK(integrate_hn_radial([](double) { return 1.0; }, Support{1, 2}, {}, 3, {2.0, Measure::lebesgue_1d}) ==
        Approx(0.5).epsilon(1e-14));
  CHECK(integrate_hn_radial(RadialFunction::zero(), 5) == 0.0);
  CHECK_THROWS_AS(integrate_hn_radial([](double) { return 1.0; }, Support{0, 1}, {}, 3, {1.0}), SpecError);
}

TEST_CASE("tail") {
  auto inv2 = [](double t) { return 1.0 / (t * t); };
  CHECK(integrate_tail(inv2, 1.0).value == Approx(1.0).epsilon(1e-10));
  for (double a : {0.5, 3.0, 100.0}) {
    auto f = [](double t) { return 2.5 / (t * t); };
    const auto tr = integrate_tail(f, a);
    CHECK(tr.value == Approx(2.5 / a).epsilon(1e-6));
    CHECK(tr.tail == Approx(2.5 / tr.horizon).epsilon(1e-9));
  }
  QuadratureConfig trunc;
  trunc.tail_mode = TailMode::truncate;
  CHECK(integrate_tail(inv2, 1.0, trunc).value == Approx(1.0 - 1e-8).epsilon(1e-10));
  CHECK_THROWS_AS(integrate_tail([](double t) { return 1.0 / t; }, 1.0), NonConvergence);
}

TEST_CASE("halfline") {
  auto tri = [](double t) { return t < 1 ? t : (t < 2 ? 2 - t : 0.0); };
  CHECK(integrate_halfline(tri, {1.0, 2.0}, {}, 2.0) == Approx(1.0).epsilon(1e-14));
  for (double L : {1.0, 5.0, 20.0}) {
    const sharp::ProfileFR f(0.7, 0.7 * std::exp(L));
    const auto bps = f.breakpoints();
    const double l2 = integrate_halfline([&](double t) { return f.value(t) * f.value(t); }, bps, {}, f.support_end());
    const double d2 = integrate_halfline(
        [&](double t) { return f.derivative(t) * f.derivative(t) * t * t; }, bps, {}, f.support_end());
    CHECK(l2 == Approx(L + 4.0 / 3.0).epsilon(1e-12));
    CHECK(d2 == Approx(0.25 * (L + 28.0 / 3.0)).epsilon(1e-12));
  }
}

TEST_CASE("determinism") {
  const auto u = library::default_library()[10];
  const double a = integrate_hn_radial(u, 6, {1.0});
  const double b = integrate_hn_radial(u, 6, {1.0});
  CHECK(a == b);
}
