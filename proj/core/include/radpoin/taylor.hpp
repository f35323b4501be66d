#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace radpoin {

// Truncated Taylor series in (r - r0): c[k] = u^{(k)}(r0) / k!.
// Binary operations truncate to the smaller order.
class Taylor {
 public:
  Taylor() : c_(1, 0.0) {}
  explicit Taylor(int order, double value = 0.0) : c_(static_cast<std::size_t>(order) + 1, 0.0) {
    c_[0] = value;
  }

  static Taylor constant(double v, int order) { return Taylor(order, v); }
  static Taylor variable(double x0, int order) {
    Taylor t(order, x0);
    if (order >= 1) t.c_[1] = 1.0;
    return t;
  }
  static Taylor from_coefficients(std::vector<double> c) {
    if (c.empty()) c.push_back(0.0);
    Taylor t;
    t.c_ = std::move(c);
    return t;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int k) const { return c_[k]; }
  double& operator[](int k) { return c_[k]; }
  double value() const { return c_[0]; }
  const std::vector<double>& coefficients() const { return c_; }

  // k-th derivative at the expansion point.
  double derivative(int k) const {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return c_[k] * f;
  }
  std::vector<double> derivatives() const {
    std::vector<double> d(c_.size());
    double f = 1.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k > 1) f *= static_cast<double>(k);
      d[k] = c_[k] * f;
    }
    return d;
  }

  // Series of d/dr; order drops by one.
  Taylor differentiate() const {
    if (order() < 1) throw std::domain_error("Taylor::differentiate needs order >= 1");
    Taylor d(order() - 1);
    for (int k = 0; k < d.order() + 1; ++k) d.c_[k] = (k + 1) * c_[k + 1];
    return d;
  }

  Taylor truncated(int order) const {
    Taylor t;
    t.c_.assign(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), order + 1));
    t.c_.resize(order + 1, 0.0);
    return t;
  }

  Taylor& operator+=(const Taylor& o) {
    shrink(o.order());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    shrink(o.order());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Taylor& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Taylor& operator+=(double s) {
    c_[0] += s;
    return *this;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator-(Taylor a) { return a *= -1.0; }
  friend Taylor operator*(Taylor a, double s) { return a *= s; }
  friend Taylor operator*(double s, Taylor a) { return a *= s; }
  friend Taylor operator+(Taylor a, double s) { return a += s; }
  friend Taylor operator+(double s, Taylor a) { return a += s; }
  friend Taylor operator-(Taylor a, double s) { return a += -s; }
  friend Taylor operator-(double s, Taylor a) { return (a *= -1.0) += s; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    const int n = std::min(a.order(), b.order());
    Taylor p(n);
    for (int k = 0; k <= n; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      p.c_[k] = s;
    }
    return p;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    const int n = std::min(a.order(), b.order());
    if (b.c_[0] == 0.0) throw std::domain_error("Taylor division by series with zero constant term");
    Taylor q(n);
    for (int k = 0; k <= n; ++k) {
      double s = a.c_[k];
      for (int j = 1; j <= k; ++j) s -= b.c_[j] * q.c_[k - j];
      q.c_[k] = s / b.c_[0];
    }
    return q;
  }
  friend Taylor operator/(double s, const Taylor& b) { return Taylor(b.order(), s) / b; }
  friend Taylor operator/(Taylor a, double s) { return a *= 1.0 / s; }

 private:
  void shrink(int order) {
    if (order < this->order()) c_.resize(order + 1);
  }
  std::vector<double> c_;
};

inline Taylor exp(const Taylor& a) {
  const int n = a.order();
  Taylor e(n, std::exp(a[0]));
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a[j] * e[k - j];
    e[k] = s / k;
  }
  return e;
}

inline Taylor log(const Taylor& a) {
  const int n = a.order();
  if (!(a[0] > 0.0)) throw std::domain_error("Taylor log of non-positive value");
  Taylor l(n, std::log(a[0]));
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += j * l[j] * a[k - j];
    l[k] = (a[k] - s / k) / a[0];
  }
  return l;
}

// a^p for real p; a[0] must be positive unless p is a nonnegative integer.
inline Taylor pow(const Taylor& a, double p) {
  const int n = a.order();
  if (a[0] == 0.0) {
    const double ip = std::round(p);
    if (ip != p || p < 0) throw std::domain_error("Taylor pow at zero base");
    Taylor r(n, 1.0);
    for (int i = 0; i < static_cast<int>(ip); ++i) r = r * a;
    return r;
  }
  Taylor b(n, std::pow(a[0], p));
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += ((p + 1.0) * j - k) * a[j] * b[k - j];
    b[k] = s / (k * a[0]);
  }
  return b;
}

inline Taylor ipow(const Taylor& a, int m) {
  Taylor result(a.order(), 1.0);
  Taylor base = a;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return result;
}

inline Taylor sqrt(const Taylor& a) { return pow(a, 0.5); }

// sinh and cosh of a series share one recurrence.
inline void sinh_cosh(const Taylor& a, Taylor& s, Taylor& c) {
  const int n = a.order();
  s = Taylor(n, std::sinh(a[0]));
  c = Taylor(n, std::cosh(a[0]));
  for (int k = 1; k <= n; ++k) {
    double ss = 0.0, cc = 0.0;
    for (int j = 1; j <= k; ++j) {
      ss += j * a[j] * c[k - j];
      cc += j * a[j] * s[k - j];
    }
    s[k] = ss / k;
    c[k] = cc / k;
  }
}

inline Taylor sinh(const Taylor& a) {
  Taylor s, c;
  sinh_cosh(a, s, c);
  return s;
}

inline Taylor cosh(const Taylor& a) {
  Taylor s, c;
  sinh_cosh(a, s, c);
  return c;
}

inline void sin_cos(const Taylor& a, Taylor& s, Taylor& c) {
  const int n = a.order();
  s = Taylor(n, std::sin(a[0]));
  c = Taylor(n, std::cos(a[0]));
  for (int k = 1; k <= n; ++k) {
    double ss = 0.0, cc = 0.0;
    for (int j = 1; j <= k; ++j) {
      ss += j * a[j] * c[k - j];
      cc -= j * a[j] * s[k - j];
    }
    s[k] = ss / k;
    c[k] = cc / k;
  }
}

inline Taylor coth(const Taylor& a) {
  Taylor s, c;
  sinh_cosh(a, s, c);
  return c / s;
}

}  // namespace radpoin
