#include "radpoin/coefficients.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "radpoin/errors.hpp"

namespace radpoin::coeff {

namespace {

Rational Q(long long a, long long b = 1) { return Rational(a) / Rational(b); }

Rational pow_q(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw SpecError(msg);
}

std::string args(int n, int a, int b, const char* an, const char* bn) {
  std::ostringstream os;
  os << "(n=" << n << ", " << an << "=" << a << ", " << bn << "=" << b << ")";
  return os.str();
}

enum class Triple { th4, cor4 };

std::array<Rational, 3> weight_triple(Triple t, int n, int g) {
  const Rational A = Q((long long)(n + g) * (n + g) * (n - 4 - g) * (n - 4 - g), 16);
  const Rational B = Q((long long)(n - 1) * (n - 2 - g) * (n - 2 + g), 8);
  const Rational C = Q((long long)(n - 1) * (n - 1), 16);
  if (t == Triple::th4) return {A, B, C};
  return {A, 2 * B, 4 * C};
}

// Iterated weighted Rellich tables (Xi / zeta), memoised per
// (alpha, beta) within one top-level request.
class IteratedTables {
 public:
  IteratedTables(int n, Triple t) : n_(n), t_(t) {}

  const std::vector<Rational>& get(int alpha, int beta) {
    auto key = std::make_pair(alpha, beta);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Rational> out(2 * beta + 1);
    if (beta == 0) {
      out[0] = 1;
    } else {
      const auto abc = weight_triple(t_, n_, alpha);
      // outer step first: exponents alpha+4, alpha+2, alpha, then recurse
      for (int s = 0; s < 3; ++s) {
        const auto& inner = get(alpha + 4 - 2 * s, beta - 1);
        for (std::size_t j = 0; j < inner.size(); ++j) out[j + s] += abc[s] * inner[j];
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  int n_;
  Triple t_;
  std::map<std::pair<int, int>, std::vector<Rational>> memo_;
};

void check_xi_args(int n, int alpha, int beta) {
  require(n >= 3, "xi_table: n must be >= 3");
  require(beta >= 0, "xi_table: beta must be >= 0");
  require(alpha >= 0 && alpha < n - 4 * beta,
          "xi_table: need 0 <= alpha < n - 4 beta " + args(n, alpha, beta, "alpha", "beta"));
}

void check_zeta_args(int n, int alpha, int beta) {
  require(n >= 3, "zeta_table: n must be >= 3");
  require(beta >= 0, "zeta_table: beta must be >= 0");
  require(alpha >= 0 && 2 * alpha <= n - 8 * beta + 1,
          "zeta_table: need 0 <= 2 alpha <= n - 8 beta + 1 " + args(n, alpha, beta, "alpha", "beta"));
}

// ---- C / D engine ------------------------------------------------------

struct Seeds {
  Rational r20_low;   // coefficient of u^2/r^2 in r20 / dr20
  Rational r21_low;   // coefficient of u^2/r^2 in r21 / dr21
  Rational r2x_high;  // coefficient of u^2/r^4 (shared)
};

class HigherOrder {
 public:
  HigherOrder(int n, bool d_family)
      : n_(n), lemma_(n, d_family ? Triple::cor4 : Triple::th4), x_(Q(n - 1, 2)) {
    seeds_.r2x_high = Q((long long)(n - 4) * (n - 4), 16);
    if (d_family) {
      seeds_.r20_low = Q((long long)n * n - 1, 16);
      seeds_.r21_low = Q(n - 1, 8);
    } else {
      seeds_.r20_low = Q((long long)n * (n - 1), 16);
      seeds_.r21_low = Q(n - 1, 16);
    }
  }

  // entries[i-1] = coefficient of u^2 / r^{2i}
  std::vector<Rational> table(int k, int l) {
    auto key = std::make_pair(k, l);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Rational> out(k);
    auto put = [&out](int index, const Rational& v) { out.at(index - 1) += v; };

    if (l == 0) {
      if (k == 1) {
        put(1, Q(1, 4));
      } else if (k == 2) {
        put(1, seeds_.r20_low);
        put(2, seeds_.r2x_high);
      } else {
        // apply the (k-2) table to Delta u, then r20 and one lemma step
        const Rational P = pow_q(x_, 2 * (k - 2));
        put(1, P * seeds_.r20_low);
        put(2, P * seeds_.r2x_high);
        const auto prev = table(k - 2, 0);
        for (int i = 1; i <= k - 2; ++i) {
          const auto& L = lemma_.get(2 * i, 1);
          for (int j = 0; j <= 2; ++j) put(i + 2 - j, prev[i - 1] * L[j]);
        }
      }
    } else if (l % 2 == 0) {
      const int h = l / 2;
      const auto base = table(k - l, 0);
      for (int i = 1; i <= k - l; ++i) {
        const auto& L = lemma_.get(2 * i, h);
        for (int j = 0; j <= 2 * h; ++j) put(i + 2 * h - j, base[i - 1] * L[j]);
      }
    } else if (k % 2 == 0) {
      const int m = k / 2, h = (l - 1) / 2;
      Rational P = 1;
      if (m - h != 1) {
        P = pow_q(x_, 4 * (m - h - 1));
        const auto base = table(k - l - 1, 0);
        for (int i = 1; i <= k - l - 1; ++i) {
          const auto& L = lemma_.get(2 * i, h + 1);
          for (int j = 0; j <= 2 * h + 2; ++j) put(i + 2 * h + 2 - j, base[i - 1] * L[j]);
        }
      }
      const auto& L4 = lemma_.get(4, h);
      const auto& L2 = lemma_.get(2, h);
      for (int j = 0; j <= 2 * h; ++j) {
        put(2 + 2 * h - j, P * seeds_.r2x_high * L4[j]);
        put(1 + 2 * h - j, P * seeds_.r21_low * L2[j]);
      }
    } else {
      const int m = (k - 1) / 2;
      const auto even = table(k - 1, l);
      const Rational x2 = x_ * x_;
      for (int i = 1; i <= k - 1; ++i) put(i, x2 * even[i - 1]);
      const auto& L = lemma_.get(2, m);
      for (int j = 0; j <= 2 * m; ++j) put(1 + 2 * m - j, Q(1, 4) * L[j]);
    }
    return memo_.emplace(key, out).first->second;
  }

 private:
  int n_;
  IteratedTables lemma_;
  Rational x_;
  Seeds seeds_;
  std::map<std::pair<int, int>, std::vector<Rational>> memo_;
};

void add_check(CoeffTable& t, std::string label, const Rational& rec, const Rational& pr) {
  t.checks.push_back({std::move(label), rec, pr});
}

}  // namespace

// ---- formatting --------------------------------------------------------

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {
// Decimal only: cpp_int would read a leading 0 as octal and 0x as hex.
boost::multiprecision::cpp_int parse_decimal(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(s);
  s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
  boost::multiprecision::cpp_int v(s);
  return neg ? boost::multiprecision::cpp_int(-v) : v;
}
}  // namespace

Rational parse_rational(const std::string& s) {
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      const Rational den(parse_decimal(s.substr(slash + 1)));
      if (den == 0) throw SpecError("zero denominator in '" + s + "'");
      return Rational(parse_decimal(s.substr(0, slash))) / den;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      const std::string frac = s.substr(dot + 1);
      const bool neg = !whole.empty() && whole[0] == '-';
      if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
      if (whole.empty() && frac.empty()) throw std::invalid_argument(s);
      const Rational w(parse_decimal(whole.empty() ? "0" : whole));
      const Rational f = frac.empty() ? Rational(0)
                                      : Rational(parse_decimal(frac)) / pow_q(Rational(10), static_cast<int>(frac.size()));
      if (!frac.empty() && frac.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(s);
      const Rational v = w + f;
      return neg ? Rational(-v) : v;
    }
    return Rational(parse_decimal(s));
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception&) {
    throw SpecError("cannot parse rational '" + s + "'");
  }
}

const char* to_string(RellichSource s) {
  switch (s) {
    case RellichSource::th2: return "th2";
    case RellichSource::cor2: return "cor2";
    case RellichSource::cor3: return "cor3";
    case RellichSource::th4: return "th4";
    case RellichSource::cor4: return "cor4";
  }
  return "?";
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Xi: return "Xi";
    case Family::Zeta: return "Zeta";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

// ---- scalar constants --------------------------------------------------

Rational sharp_constant(int n, int k, int l) {
  require(n >= 3, "sharp_constant: n must be >= 3");
  require(l >= 0 && k > l, "sharp_constant: need k > l >= 0");
  return pow_q(Q(n - 1, 2), 2 * (k - l));
}

std::array<Rational, 3> hardy_th1_coeffs(int n, const Rational& a) {
  require(n >= 3, "th1: n must be >= 3");
  require(a >= 0 && 2 * a < n + 3, "th1: need 0 <= 2 alpha < n + 3");
  const Rational t = n - 2 - a;
  return {t * t / 4, Q(n - 1, 2), (n - 1) * (n - 3 - 2 * a) / 4};
}

std::array<Rational, 2> hardy_th3_coeffs(int n, const Rational& a) {
  require(n >= 3, "th3: n must be >= 3");
  require(a >= 0 && a < n - 2, "th3: need 0 <= alpha < n - 2");
  const Rational t = n - 2 - a;
  return {t * t / 4, Q(n - 1, 4)};
}

std::vector<Rational> rellich_triples(RellichSource src, int n, const Rational& a) {
  require(n >= 3, "rellich_triples: n must be >= 3");
  const Rational p = n - 2 - a, m = n - 2 + a;
  const Rational top = p * p * m * m / 16;
  switch (src) {
    case RellichSource::th2: {
      const Rational b1 = 2 * a - 3, b2 = a + 2;
      const Rational bound = (b1 > b2) ? b1 : b2;
      require(a > 0 && n > bound, "th2: need alpha > 0 and n > max(alpha+2, 2 alpha-3)");
      return {top, p * m * (n - 1) / 4, (n - 1) * (n - 3 - 2 * a) * p * m / 8};
    }
    case RellichSource::cor2:
      require(a >= 0 && 2 * a <= n - 3, "cor2: need 0 <= 2 alpha <= n - 3");
      return {top, p * m * (n - 1) / 4};
    case RellichSource::cor3:
      require(a >= 0 && a < n - 2, "cor3: need 0 <= alpha < n - 2");
      return {top, p * m * (n - 1) / 8};
    case RellichSource::th4:
    case RellichSource::cor4: {
      if (src == RellichSource::th4)
        require(a >= 0 && a < n - 4, "th4: need 0 <= alpha < n - 4");
      else
        require(a >= 0 && 2 * a <= n - 7, "cor4: need 0 <= 2 alpha <= n - 7");
      const Rational s = n + a, q = n - 4 - a;
      const Rational A = s * s * q * q / 16;
      const Rational B = (n - 1) * p * m / 8;
      const Rational C = Q((long long)(n - 1) * (n - 1), 16);
      if (src == RellichSource::th4) return {A, B, C};
      return {A, 2 * B, 4 * C};
    }
  }
  throw SpecError("unknown Rellich source");
}

// ---- printed closed forms ---------------------------------------------

namespace printed {

Rational xi_first(int n, int alpha, int beta) {
  Rational p = 1;
  for (int j = 0; j < beta; ++j) {
    const long long g = alpha + 4 * j;
    p *= Q((n + g) * (n + g) * (n - g - 4) * (n - g - 4), 16);
  }
  return p;
}

Rational xi_last(int n, int beta) { return pow_q(Q(n - 1, 4), 2 * beta); }
Rational zeta_first(int n, int alpha, int beta) { return xi_first(n, alpha, beta); }
Rational zeta_last(int n, int beta) { return pow_q(Rational(4), beta) * xi_last(n, beta); }

Rational c_k0_last(int n, int k) {
  const int m = k / 2;
  Rational p = 1;
  if (k % 2 == 0) {
    for (int j = 1; j <= m - 1; ++j)
      p *= Rational((long long)(n + 4 * j) * (n + 4 * j) * (n - 4 * j - 4) * (n - 4 * j - 4));
    const Rational f = Q(n - 4) / pow_q(Rational(2), 2 * m);
    return f * f * p;
  }
  for (int j = 1; j <= m; ++j)
    p *= Rational((long long)(n + 4 * j - 2) * (n + 4 * j - 2) * (n - 4 * j - 2) * (n - 4 * j - 2));
  return p / pow_q(Rational(2), 4 * m + 2);
}

Rational c_k0_first(int n, int k) {
  const int m = k / 2;
  const Rational n1 = n - 1;
  Rational s = 0;
  if (k % 2 == 0) {
    for (int j = 1; j <= m; ++j) s += pow_q(n1, 4 * m - 2 * j - 2);
    return Rational(n) * n1 * s / pow_q(Rational(2), 4 * m);
  }
  for (int j = 1; j <= m; ++j) s += pow_q(n1, 2 * m + 2 * j - 2);
  return (Rational(n) * n1 * s + pow_q(n1, 2 * m)) / pow_q(Rational(2), 4 * m + 2);
}

Rational d_k0_first(int n, int k) {
  const int m = k / 2;
  const Rational n1 = n - 1, x = Q(n - 1, 2), nn = Rational(n) * n - 1;
  Rational s = 0;
  if (k % 2 == 0) {
    for (int j = 1; j <= m; ++j) s += pow_q(x, 4 * m - 2 * j - 2);
    return nn / 16 * s;
  }
  for (int j = 1; j <= m; ++j) s += pow_q(n1, 2 * m + 2 * j - 2) / pow_q(Rational(2), 2 * m + 2 * j + 2);
  return nn * s + pow_q(n1, 2 * m) / pow_q(Rational(2), 2 * m + 2);
}

}  // namespace printed

// ---- tables -------------------------------------------------------------

const Rational& CoeffTable::at(int index) const {
  if (index < first_index || index > last_index())
    throw std::out_of_range("CoeffTable index " + std::to_string(index) + " out of range");
  return entries[index - first_index];
}

int CoeffTable::weight_exponent(int index) const {
  if (family == Family::Xi || family == Family::Zeta) return p + 4 * q - 2 * index;
  return 2 * index;
}

bool CoeffTable::verified() const {
  for (const auto& c : checks)
    if (!c.equal()) return false;
  return true;
}

std::string CoeffTable::status() const { return verified() ? "verified" : "discrepancy"; }

namespace {

CoeffTable lemma_table(Family fam, int n, int alpha, int beta) {
  const bool xi = fam == Family::Xi;
  if (xi) check_xi_args(n, alpha, beta); else check_zeta_args(n, alpha, beta);
  IteratedTables lt(n, xi ? Triple::th4 : Triple::cor4);
  CoeffTable t;
  t.family = fam;
  t.n = n;
  t.p = alpha;
  t.q = beta;
  t.first_index = 0;
  t.entries = lt.get(alpha, beta);
  if (beta >= 1) {
    const Rational first = printed::xi_first(n, alpha, beta);
    const Rational last = xi ? printed::xi_last(n, beta) : printed::zeta_last(n, beta);
    add_check(t, xi ? "Xi^0 product" : "zeta^0 = Xi^0", t.entries.front(), first);
    add_check(t, xi ? "Xi^{2beta} = ((N-1)/4)^{2beta}" : "zeta^{2beta} = 4^beta Xi^{2beta}", t.entries.back(), last);
  }
  for (const auto& c : t.checks)
    if (!c.equal())
      throw std::logic_error(std::string(to_string(fam)) + " table endpoint check failed: " + c.label +
                             " recursion=" + to_string(c.recursion) + " printed=" + to_string(c.printed));
  return t;
}

void check_cd_args(Family fam, int n, int k, int l) {
  const char* name = fam == Family::C ? "c_table" : "d_table";
  require(l >= 0 && k > l, std::string(name) + ": need 0 <= l < k");
  if (fam == Family::C)
    require(n > 2 * k, "c_table: need n > 2k " + args(n, k, l, "k", "l"));
  else
    require(n >= 4 * k - 1 && n >= 3, "d_table: need n >= 4k - 1 " + args(n, k, l, "k", "l"));
}

// Printed leading/trailing coefficients of every case, evaluated from
// closed forms (and, where the print itself is recursive, from the
// already-checked lower table).
void attach_checks(CoeffTable& t, HigherOrder& eng) {
  const bool C = t.family == Family::C;
  const int n = t.n, k = t.p, l = t.q;
  auto lemma_first = [&](int a, int b) { return printed::xi_first(n, a, b); };
  auto lemma_last = [&](int b) { return C ? printed::xi_last(n, b) : printed::zeta_last(n, b); };
  auto k0_first = [&](int kk) { return C ? printed::c_k0_first(n, kk) : printed::d_k0_first(n, kk); };
  auto k0_last = [&](int kk) { return printed::c_k0_last(n, kk); };  // D^k_{k,0} = C^k_{k,0}
  const Rational first = t.entries.front(), last = t.entries.back();
  const std::string F = C ? "C" : "D";

  if (l == 0) {
    add_check(t, F + "_{k,0}^1 closed form", first, k0_first(k));
    add_check(t, F + "_{k,0}^k closed form", last, k0_last(k));
    if (k == 2) {
      add_check(t, F + "_{2,0}^1 seed", first, C ? Q((long long)n * (n - 1), 16) : Q((long long)n * n - 1, 16));
      add_check(t, F + "_{2,0}^2 seed", last, Q((long long)(n - 4) * (n - 4), 16));
    }
    return;
  }
  if (l % 2 == 0) {
    add_check(t, F + "_{k,l}^1 (l even)", first, k0_first(k - l) * lemma_last(l / 2));
    add_check(t, F + "_{k,l}^k (l even)", last, k0_last(k - l) * lemma_first(2 * (k - l), l / 2));
    return;
  }
  const Rational x2 = Q((long long)(n - 1) * (n - 1), 4);
  if (k % 2 == 0) {
    const int m = k / 2, h = (l - 1) / 2;
    if (m - h != 1) {
      const Rational coef = pow_q(Rational(n - 1), 2 * k - 2 * l - 1) / pow_q(Rational(2), 2 * k - 2 * l + (C ? 2 : 1));
      add_check(t, F + "_{k,l}^1 (k even, l odd)", first,
                coef * lemma_last((l - 1) / 2) + k0_first(k - l - 1) * lemma_last((l + 1) / 2));
      add_check(t, F + "_{k,l}^k (k even, l odd)", last,
                k0_last(k - l - 1) * lemma_first(2 * (k - l - 1), (l + 1) / 2));
    } else {
      add_check(t, F + "_{k,l}^1 (k = l+1 even)", first, (C ? Q(n - 1, 16) : Q(n - 1, 8)) * lemma_last((l - 1) / 2));
      add_check(t, F + "_{k,l}^k (k = l+1 even)", last, Q((long long)(n - 4) * (n - 4), 16) * lemma_first(4, (l - 1) / 2));
    }
    return;
  }
  // k, l odd
  const int m = (k - 1) / 2, h = (l - 1) / 2;
  if (m - h != 1) {
    const auto lower = eng.table(k - 1, l);
    add_check(t, F + "_{k,l}^1 (k, l odd)", first, Q(1, 4) * lemma_last((k - 1) / 2) + x2 * lower.front());
  } else {
    const Rational coef = pow_q(Rational(n - 1), 3) / pow_q(Rational(2), C ? 6 : 5);
    add_check(t, F + "_{k,l}^1 (k = l+2 odd)", first,
              coef * lemma_last((l - 1) / 2) + Q(1, 4) * lemma_last((l + 1) / 2));
  }
  if (C)
    add_check(t, "C_{k,l}^k (k, l odd)", last, Q(1, 4) * lemma_first(2, (k - 1) / 2));
  else  // printed with beta = (l+1)/2; weight bookkeeping needs (k-1)/2
    add_check(t, "D_{k,l}^k (k, l odd)", last, Q(1, 4) * lemma_first(2, (l + 1) / 2));
}

CoeffTable higher_table(Family fam, int n, int k, int l) {
  check_cd_args(fam, n, k, l);
  HigherOrder eng(n, fam == Family::D);
  CoeffTable t;
  t.family = fam;
  t.n = n;
  t.p = k;
  t.q = l;
  t.first_index = 1;
  t.entries = eng.table(k, l);
  attach_checks(t, eng);
  return t;
}

}  // namespace

CoeffTable xi_table(int n, int alpha, int beta) { return lemma_table(Family::Xi, n, alpha, beta); }
CoeffTable zeta_table(int n, int alpha, int beta) { return lemma_table(Family::Zeta, n, alpha, beta); }
CoeffTable c_table(int n, int k, int l) { return higher_table(Family::C, n, k, l); }
CoeffTable d_table(int n, int k, int l) { return higher_table(Family::D, n, k, l); }

}  // namespace radpoin::coeff
