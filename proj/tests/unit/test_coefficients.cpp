#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "radpoin/coefficients.hpp"
#include "radpoin/errors.hpp"

using namespace radpoin;
using namespace radpoin::coeff;

namespace {
Rational q(long a, long b = 1) { return Rational(a) / b; }
}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == q(3));
  CHECK(parse_rational("-3/6") == q(-1, 2));
  CHECK(parse_rational("0.125") == q(1, 8));
  CHECK(to_string(q(9, 4)) == "9/4");
  CHECK_THROWS_AS(parse_rational("x"), SpecError);
  CHECK_THROWS_AS(parse_rational("1/0"), SpecError);
}

TEST_CASE("sharp constant") {
  CHECK(sharp_constant(3, 1, 0) == 1);
  CHECK(sharp_constant(5, 2, 0) == 16);
  CHECK(sharp_constant(4, 3, 1) == q(81, 16));
  CHECK_THROWS_AS(sharp_constant(4, 1, 1), SpecError);
}

TEST_CASE("hardy coefficients") {
  CHECK(hardy_th1_coeffs(5, 0) == std::array<Rational, 3>{q(9, 4), q(2), q(2)});
  CHECK(hardy_th1_coeffs(3, 0) == std::array<Rational, 3>{q(1, 4), q(1), q(0)});
  CHECK(hardy_th1_coeffs(7, 2) == std::array<Rational, 3>{q(9, 4), q(3), q(0)});
  CHECK(hardy_th3_coeffs(5, 0) == std::array<Rational, 2>{q(9, 4), q(1)});
  CHECK(hardy_th3_coeffs(5, 2) == std::array<Rational, 2>{q(1, 4), q(1)});
  CHECK(hardy_th3_coeffs(3, 0) == std::array<Rational, 2>{q(1, 4), q(1, 2)});
  CHECK_THROWS_AS(hardy_th1_coeffs(3, 3), SpecError);
}

TEST_CASE("rellich triples") {
  CHECK(rellich_triples(RellichSource::th4, 5, 0) == std::vector<Rational>{q(25, 16), q(9, 2), q(1)});
  CHECK(rellich_triples(RellichSource::cor4, 9, 1) == std::vector<Rational>{q(100), q(96), q(16)});
  CHECK(rellich_triples(RellichSource::th2, 7, 1) == std::vector<Rational>{q(36), q(36), q(36)});
  CHECK_THROWS_AS(rellich_triples(RellichSource::th4, 9, 5), SpecError);
}

TEST_CASE("xi and zeta") {
  const auto t = xi_table(6, 0, 1);
  CHECK(t.entries == std::vector<Rational>{q(9), q(10), q(25, 16)});
  CHECK(t.verified());
  CHECK(t.weight_exponent(0) == 4);
  CHECK(xi_table(7, 2, 0).entries == std::vector<Rational>{q(1)});
  CHECK(zeta_table(7, 2, 0).entries == std::vector<Rational>{q(1)});
  const auto z = zeta_table(9, 0, 1);
  CHECK(z.at(0) == q(81 * 25, 16));
  CHECK(z.at(2) == 16);
  CHECK(z.status() == "verified");
  CHECK_THROWS_AS(xi_table(6, 2, 1), SpecError);
}

TEST_CASE("C and D tables") {
  CHECK(c_table(3, 1, 0).entries == std::vector<Rational>{q(1, 4)});
  CHECK(c_table(5, 2, 0).entries == std::vector<Rational>{q(5, 4), q(1, 16)});
  CHECK(c_table(9, 2, 1).entries == std::vector<Rational>{q(1, 2), q(25, 16)});
  CHECK(d_table(7, 2, 0).entries == std::vector<Rational>{q(3), q(9, 16)});
  CHECK(d_table(7, 2, 1).entries == std::vector<Rational>{q(3, 4), q(9, 16)});
  CHECK(c_table(9, 2, 1).first_index == 1);
  CHECK(c_table(9, 2, 1).weight_exponent(2) == 4);
  CHECK_THROWS_AS(d_table(6, 2, 0), SpecError);
}

TEST_CASE("endpoints for every admissible n <= 41, k <= 8") {
  int tables = 0, discrepancies = 0;
  for (int n = 3; n <= 41; ++n) {
    for (int beta = 0; beta <= 8; ++beta)
      for (int a = 0; a < n - 4 * beta || (beta == 0 && a < n); ++a) {
        CHECK(xi_table(n, a, beta).verified());
        ++tables;
        if (2 * a <= n - 8 * beta + 1) {
          CHECK(zeta_table(n, a, beta).verified());
          ++tables;
        }
      }
    for (int k = 1; k <= 8; ++k)
      for (int l = 0; l < k; ++l) {
        if (n > 2 * k) {
          CHECK(c_table(n, k, l).verified());
          ++tables;
        }
        if (n >= 4 * k - 1) {
          const auto d = d_table(n, k, l);
          ++tables;
          if (!d.verified()) {
            ++discrepancies;
            for (const auto& c : d.checks)
              if (!c.equal()) CHECK(c.recursion != c.printed);  // both values retained
            CHECK(k % 2 == 1);
            CHECK(l % 2 == 1);
          }
        }
      }
  }
  CHECK(tables > 1000);
  MESSAGE("tables: " << tables << ", documented D discrepancies: " << discrepancies);
}

TEST_CASE("printed closed forms") {
  CHECK(printed::c_k0_first(3, 1) == q(1, 4));
  CHECK(printed::xi_last(6, 1) == q(25, 16));
  CHECK(printed::zeta_last(9, 1) == 16);
  CHECK(printed::zeta_first(9, 0, 1) == printed::xi_first(9, 0, 1));
}

TEST_CASE("decimal parsing never goes octal") {
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("0.0625") == q(1, 16));
  CHECK(parse_rational("-1.5") == q(-3, 2));
  CHECK(parse_rational("-0.5") == q(-1, 2));
  CHECK(parse_rational("08/016") == q(1, 2));
  CHECK_THROWS_AS(parse_rational("0x10"), SpecError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), SpecError);
  CHECK_THROWS_AS(parse_rational("."), SpecError);
}
