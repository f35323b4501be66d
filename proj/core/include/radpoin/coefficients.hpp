#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact constants of the radial Poincare / Hardy / Rellich inequalities.
namespace radpoin::coeff {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);
double to_double(const Rational& q);
// Parses "p", "p/q" or a terminating decimal ("0.5") exactly.
Rational parse_rational(const std::string& s);

// Bumped whenever a recursion or seed coefficient changes; echoed in reports.
inline constexpr const char* kTableVersion = "coeff-tables/1";

// ((n-1)/2)^{2(k-l)}
Rational sharp_constant(int n, int k, int l);

// ((n-2-a)^2/4, (n-1)/2, (n-1)(n-3-2a)/4), requires 0 <= 2a < n+3.
std::array<Rational, 3> hardy_th1_coeffs(int n, const Rational& alpha);
// ((n-2-a)^2/4, (n-1)/4), requires 0 <= a < n-2.
std::array<Rational, 2> hardy_th3_coeffs(int n, const Rational& alpha);

enum class RellichSource { th2, cor2, cor3, th4, cor4 };
const char* to_string(RellichSource s);

// Coefficients multiplying the weighted L^2 terms, highest weight first:
//   th2:  (I_{a+2}, I_a, g-term),   cor2/cor3: (I_{a+2}, I_a),
//   th4/cor4: (I_{a+4}, I_{a+2}, I_a).
std::vector<Rational> rellich_triples(RellichSource src, int n, const Rational& alpha);

enum class Family { Xi, Zeta, C, D };
const char* to_string(Family f);

struct EndpointCheck {
  std::string label;
  Rational recursion;
  Rational printed;
  bool equal() const { return recursion == printed; }
};

struct CoeffTable {
  Family family = Family::Xi;
  int n = 0;
  int p = 0;  // alpha (Xi/Zeta) or k (C/D)
  int q = 0;  // beta (Xi/Zeta) or l (C/D)
  int first_index = 0;
  std::vector<Rational> entries;
  std::vector<EndpointCheck> checks;

  int last_index() const { return first_index + static_cast<int>(entries.size()) - 1; }
  const Rational& at(int index) const;
  // Power of r in the weight r^{-w} attached to an index:
  //   Xi/Zeta: alpha + 4 beta - 2j;   C/D: 2i.
  int weight_exponent(int index) const;
  bool verified() const;
  // "verified" or "discrepancy"
  std::string status() const;
};

// Xi table (iterated th4), j = 0..2beta.  Requires 0 <= alpha < n - 4 beta.
CoeffTable xi_table(int n, int alpha, int beta);
// zeta table (iterated cor4).  Requires 0 <= 2 alpha <= n - 8 beta + 1.
CoeffTable zeta_table(int n, int alpha, int beta);
// C_{k,l}^i, i = 1..k.  Requires 0 <= l < k, n > 2k.
CoeffTable c_table(int n, int k, int l);
// D_{k,l}^i, i = 1..k.  Requires 0 <= l < k, n >= 4k - 1.
CoeffTable d_table(int n, int k, int l);

// Printed closed forms, kept separate from the recursions they check.
namespace printed {
Rational xi_first(int n, int alpha, int beta);  // Xi^0
Rational xi_last(int n, int beta);              // Xi^{2 beta}
Rational zeta_first(int n, int alpha, int beta);
Rational zeta_last(int n, int beta);
Rational c_k0_last(int n, int k);   // C_{k,0}^k
Rational c_k0_first(int n, int k);  // C_{k,0}^1
Rational d_k0_first(int n, int k);  // D_{k,0}^1
}  // namespace printed

}  // namespace radpoin::coeff
