#pragma once

#include <climits>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "radpoin/taylor.hpp"

namespace radpoin {

struct Support {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double r) const { return r > lo && r < hi; }
};

inline constexpr int kSmooth = INT_MAX;

// A radial function r -> u(r) that hands out Taylor jets at any r > 0.
// Outside its (open) support every jet entry is zero.  Immutable; copies
// share state.
class RadialFunction {
 public:
  using Evaluator = std::function<Taylor(double r, int order)>;

  RadialFunction() = default;
  RadialFunction(Evaluator eval, Support support, std::vector<double> breakpoints,
                 int smoothness, std::string name, int max_order = INT_MAX);

  // Zero function (useful as a neutral element and for the zero-u checks).
  static RadialFunction zero();

  Taylor taylor(double r, int order) const;
  // [u(r), u'(r), ..., u^{(order)}(r)]
  std::vector<double> eval_jet(double r, int order) const;
  double operator()(double r) const { return taylor(r, 0).value(); }

  const Support& support() const;
  const std::vector<double>& breakpoints() const;
  // u is C^smoothness across its breakpoints (kSmooth when none matter).
  int smoothness() const;
  int max_order() const;
  const std::string& name() const;

  RadialFunction renamed(std::string name) const;

 private:
  struct State {
    Evaluator eval;
    Support support;
    std::vector<double> breakpoints;
    int smoothness;
    std::string name;
    int max_order;
  };
  std::shared_ptr<const State> s_;
};

// r -> u'(r)
RadialFunction grad_r(const RadialFunction& u);
// r -> u'' + (n-1) coth(r) u'
RadialFunction laplace_r(const RadialFunction& u, int n);
// Delta^{k/2} for even k, grad Delta^{(k-1)/2} for odd k.
RadialFunction nabla_r_k(const RadialFunction& u, int k, int n);

RadialFunction scale(const RadialFunction& u, double c);
RadialFunction add(const RadialFunction& u, const RadialFunction& v);
RadialFunction multiply(const RadialFunction& u, const RadialFunction& v);

// Delta(u^2) - 2 u Delta u - 2 |u'|^2 at r.
double square_identity_check(const RadialFunction& u, int n, double r);

// Series of coth about r, with the 1/r pole handled near 0.
Taylor coth_series(double r, int order);

}  // namespace radpoin
