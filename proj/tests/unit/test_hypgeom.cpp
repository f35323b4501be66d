#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "radpoin/errors.hpp"
#include "radpoin/hypgeom.hpp"

using namespace radpoin;
using namespace radpoin::hypgeom;
using doctest::Approx;

// Reference values below: mpmath at 50 digits (quadrature of sinh^{n-1},
// bisection for the inverse).

TEST_CASE("sphere measure") {
  CHECK(sphere_surface_measure(3) == Approx(12.566370614359172954).epsilon(1e-14));
  CHECK(sphere_surface_measure(4) == Approx(19.739208802178717238).epsilon(1e-14));
  CHECK(sphere_surface_measure(5) == Approx(26.318945069571622984).epsilon(1e-14));
  CHECK(sphere_surface_measure(9) == Approx(29.686580124648361824).epsilon(1e-14));
  CHECK_THROWS_AS(sphere_surface_measure(2), SpecError);
}

TEST_CASE("ball volume against oracle") {
  struct Case {
    double r;
    int n;
    double want;
  } cases[] = {{1, 3, 5.1109327057082889769},      {2, 3, 73.167432769211135483},
               {0.5, 3, 0.55041078285152943531},   {1.5, 4, 52.37870381864748313},
               {0.3, 5, 0.013350859154606553667},  {2.5, 8, 1351010.3825878847926},
               {4, 9, 1140511247651.7990123},      {0.01, 4, 4.9349666966244091646e-8}};
  for (const auto& c : cases) {
    CAPTURE(c.r);
    CAPTURE(c.n);
    CHECK(ball_volume_G(c.r, c.n) == Approx(c.want).epsilon(1e-12));
  }
  CHECK(ball_volume_G(0.0, 5) == 0.0);
  // closed form pi(sinh 2r - 2r) for n = 3
  for (double r : {0.05, 0.7, 2.9, 3.1, 7.0})
    CHECK(ball_volume_G(r, 3) == Approx(M_PI * (std::sinh(2 * r) - 2 * r)).epsilon(1e-12));
}

TEST_CASE("dG is the derivative of G") {
  for (int n : {3, 4, 7})
    for (double r : {0.2, 1.0, 2.5, 4.0}) {
      const double h = 1e-5;
      const double fd = (ball_volume_G(r + h, n) - ball_volume_G(r - h, n)) / (2 * h);
      CHECK(fd == Approx(ball_volume_dG(r, n)).epsilon(1e-8));
    }
}

TEST_CASE("inverse F") {
  CHECK(ball_volume_inverse_F(0.0, 4) == 0.0);
  CHECK(ball_volume_inverse_F(ball_volume_G(1.5, 4), 4) == Approx(1.5).epsilon(1e-10));
  CHECK(ball_volume_inverse_F(10, 3) == Approx(1.2126302374173783345).epsilon(1e-11));
  CHECK(ball_volume_inverse_F(1e-3, 5) == Approx(0.17964111496675727551).epsilon(1e-11));
  CHECK(ball_volume_inverse_F(1e3, 4) == Approx(2.3897513464545232586).epsilon(1e-11));
  CHECK(ball_volume_inverse_F(1e5, 8) == Approx(2.1380952293423867803).epsilon(1e-11));
  CHECK(ball_volume_inverse_F(0.5, 9) == Approx(0.75681509952473141479).epsilon(1e-11));
  CHECK_THROWS_AS(ball_volume_inverse_F(-1.0, 4), SpecError);
  double prev = 0.0;
  for (double t = 1e-8; t < 1e12; t *= 3.7) {
    const double r = ball_volume_inverse_F(t, 6);
    CHECK(r > prev);
    CHECK(ball_volume_G(r, 6) == Approx(t).epsilon(1e-10));
    prev = r;
  }
}

TEST_CASE("g weight and coth - 1/r") {
  CHECK(g_weight(1.0) == Approx(0.31303528549933130364).epsilon(1e-13));
  CHECK(g_weight(1e-3) == Approx(0.33333331111111322751).epsilon(1e-13));
  CHECK(g_weight(0.5) == Approx(0.32790682747730569754).epsilon(1e-13));
  CHECK(g_weight(5.0) == Approx(0.16001816079640387511).epsilon(1e-13));
  CHECK(g_weight(30.0) == Approx(0.032222222222222222222).epsilon(1e-13));
  CHECK(g_weight(1e-9) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(coth_minus_inv(1.0) == Approx(0.31303528549933130364).epsilon(1e-13));
  CHECK(coth_minus_inv(1e-6) / 1e-6 == Approx(1.0 / 3.0).epsilon(1e-9));
  for (double r = 1e-4; r <= 50.0; r *= 1.1) {
    const double g = g_weight(r);
    CHECK(g > 0.0);
    CHECK(g <= 1.0 / 3.0);
  }
}

TEST_CASE("sinh growth ratio") {
  CHECK(sinh_growth_ratio(1.0, 3) == Approx(2.5983263963043839968).epsilon(1e-10));
  CHECK(sinh_growth_ratio(100.0, 4) == Approx(1.1521081355996814683).epsilon(1e-10));
  CHECK(sinh_growth_ratio(1e4, 3) == Approx(1.0024383983670560798).epsilon(1e-10));
  CHECK(sinh_growth_ratio(1e4, 8) == Approx(1.0727594489862616862).epsilon(1e-10));
  CHECK(sinh_growth_ratio(10.0, 5) == Approx(1.4568412268187176655).epsilon(1e-10));
  for (int n = 3; n <= 8; ++n)
    for (double t = 1e-6; t < 1e8; t *= 2.3) CHECK(sinh_growth_ratio(t, n) >= 1.0);
}

TEST_CASE("threshold R0") {
  const double r0 = threshold_R0(0.01, 4);
  CHECK(sinh_growth_ratio(r0, 4) <= 1.01);
  const double half = 0.5 * r0;
  CHECK((half < 1e-6 || sinh_growth_ratio(half, 4) > 1.01));
  CHECK(threshold_R0(10.0, 4) <= threshold_R0(1.0, 4));
  CHECK(threshold_R0(0.001, 4) >= threshold_R0(0.01, 4));
  CHECK_THROWS_AS(threshold_R0(0.0, 4), SpecError);
}
