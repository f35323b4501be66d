#include "radpoin/radial.hpp"

#include <algorithm>
#include <cmath>

#include "radpoin/errors.hpp"
#include "radpoin/hypgeom.hpp"

namespace radpoin {

namespace {

std::vector<double> merge_breakpoints(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int drop(int smoothness, int by) { return smoothness == kSmooth ? kSmooth : smoothness - by; }
int drop_order(int order, int by) { return order == INT_MAX ? INT_MAX : order - by; }

}  // namespace

RadialFunction::RadialFunction(Evaluator eval, Support support, std::vector<double> breakpoints,
                               int smoothness, std::string name, int max_order) {
  if (!(support.lo >= 0.0) || !(support.hi > support.lo))
    throw SpecError("RadialFunction: support must satisfy 0 <= a < b");
  std::sort(breakpoints.begin(), breakpoints.end());
  s_ = std::make_shared<const State>(
      State{std::move(eval), support, std::move(breakpoints), smoothness, std::move(name), max_order});
}

RadialFunction RadialFunction::zero() {
  return RadialFunction([](double, int order) { return Taylor(order); }, Support{1.0, 2.0}, {},
                        kSmooth, "zero");
}

Taylor RadialFunction::taylor(double r, int order) const {
  if (!s_) throw std::logic_error("RadialFunction is empty");
  if (!(r > 0.0)) throw SpecError("radial functions are evaluated at r > 0");
  if (order < 0) throw JetOrderError("negative jet order");
  if (order > s_->max_order)
    throw JetOrderError(s_->name + ": jet order " + std::to_string(order) + " exceeds available " +
                        std::to_string(s_->max_order));
  if (!s_->support.contains(r)) return Taylor(order);
  Taylor t = s_->eval(r, order);
  return t.order() == order ? t : t.truncated(order);
}

std::vector<double> RadialFunction::eval_jet(double r, int order) const {
  return taylor(r, order).derivatives();
}

const Support& RadialFunction::support() const { return s_->support; }
const std::vector<double>& RadialFunction::breakpoints() const { return s_->breakpoints; }
int RadialFunction::smoothness() const { return s_->smoothness; }
int RadialFunction::max_order() const { return s_->max_order; }
const std::string& RadialFunction::name() const { return s_->name; }

RadialFunction RadialFunction::renamed(std::string name) const {
  auto st = s_;
  return RadialFunction([st](double r, int d) { return st->eval(r, d); }, st->support,
                        st->breakpoints, st->smoothness, std::move(name), st->max_order);
}

Taylor coth_series(double r, int order) {
  if (!(r > 0.0)) throw SpecError("coth_series: r must be > 0");
  Taylor x = Taylor::variable(r, order);
  Taylor c = coth(x);
  c[0] = hypgeom::coth(r);
  return c;
}

RadialFunction grad_r(const RadialFunction& u) {
  return RadialFunction([u](double r, int d) { return u.taylor(r, d + 1).differentiate(); },
                        u.support(), u.breakpoints(), drop(u.smoothness(), 1), "grad(" + u.name() + ")",
                        drop_order(u.max_order(), 1));
}

RadialFunction laplace_r(const RadialFunction& u, int n) {
  hypgeom::require_dimension(n);
  return RadialFunction(
      [u, n](double r, int d) {
        const Taylor d1 = u.taylor(r, d + 2).differentiate();
        const Taylor d2 = d1.differentiate();
        return d2 + (n - 1.0) * (coth_series(r, d) * d1.truncated(d));
      },
      u.support(), u.breakpoints(), drop(u.smoothness(), 2), "lap(" + u.name() + ")",
      drop_order(u.max_order(), 2));
}

RadialFunction nabla_r_k(const RadialFunction& u, int k, int n) {
  if (k < 0) throw SpecError("nabla_r_k: k must be >= 0");
  hypgeom::require_dimension(n);
  RadialFunction out = u;
  for (int j = 0; j < k / 2; ++j) out = laplace_r(out, n);
  if (k % 2 == 1) out = grad_r(out);
  return out;
}

RadialFunction scale(const RadialFunction& u, double c) {
  return RadialFunction([u, c](double r, int d) { return c * u.taylor(r, d); }, u.support(),
                        u.breakpoints(), u.smoothness(), u.name(), u.max_order());
}

RadialFunction add(const RadialFunction& u, const RadialFunction& v) {
  Support s{std::min(u.support().lo, v.support().lo), std::max(u.support().hi, v.support().hi)};
  return RadialFunction([u, v](double r, int d) { return u.taylor(r, d) + v.taylor(r, d); }, s,
                        merge_breakpoints(u.breakpoints(), v.breakpoints()),
                        std::min(u.smoothness(), v.smoothness()), u.name() + "+" + v.name(),
                        std::min(u.max_order(), v.max_order()));
}

RadialFunction multiply(const RadialFunction& u, const RadialFunction& v) {
  Support s{std::max(u.support().lo, v.support().lo), std::min(u.support().hi, v.support().hi)};
  if (!(s.hi > s.lo)) return RadialFunction::zero();
  return RadialFunction([u, v](double r, int d) { return u.taylor(r, d) * v.taylor(r, d); }, s,
                        merge_breakpoints(u.breakpoints(), v.breakpoints()),
                        std::min(u.smoothness(), v.smoothness()), u.name() + "*" + v.name(),
                        std::min(u.max_order(), v.max_order()));
}

double square_identity_check(const RadialFunction& u, int n, double r) {
  const RadialFunction u2 = multiply(u, u);
  const double lhs = laplace_r(u2, n)(r);
  const std::vector<double> j = u.eval_jet(r, 1);
  const double lap = laplace_r(u, n)(r);
  return lhs - 2.0 * j[0] * lap - 2.0 * j[1] * j[1];
}

}  // namespace radpoin
