#include "radpoin/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/gauss.hpp"
#include "radpoin/errors.hpp"
#include "radpoin/hypgeom.hpp"

namespace radpoin::sharp {

namespace {

// Chebyshev helpers.  Series convention: f(x) = sum_k a_k T_k(x).
std::vector<double> cheb_fit(const std::vector<double>& f) {
  const int p = static_cast<int>(f.size());
  std::vector<double> a(p, 0.0);
  for (int k = 0; k < p; ++k) {
    double s = 0.0;
    for (int j = 0; j < p; ++j) s += f[j] * std::cos(std::numbers::pi * k * (j + 0.5) / p);
    a[k] = 2.0 * s / p;
  }
  a[0] *= 0.5;
  return a;
}

double cheb_eval(const std::vector<double>& a, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = a.size() - 1; k >= 1; --k) {
    const double b0 = a[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return a[0] + x * b1 - b2;
}

// Antiderivative with A(1) = 0; one degree higher.
std::vector<double> cheb_integrate(const std::vector<double>& a) {
  const int p = static_cast<int>(a.size());
  auto c = [&](int k) { return k < 0 || k >= p ? 0.0 : (k == 0 ? 2.0 * a[0] : a[k]); };
  std::vector<double> A(p + 1, 0.0);
  double sum = 0.0;
  for (int k = 1; k <= p; ++k) {
    A[k] = (c(k - 1) - c(k + 1)) / (2.0 * k);
    sum += A[k];
  }
  A[0] = -sum;
  return A;
}

std::vector<double> cheb_derivative(const std::vector<double>& b) {
  const int M = static_cast<int>(b.size());
  if (M <= 1) return {0.0};
  std::vector<double> d(M + 1, 0.0);
  for (int k = M - 1; k >= 1; --k) d[k - 1] = d[k + 1] + 2.0 * k * b[k];
  d[0] *= 0.5;
  d.resize(M - 1);
  return d;
}

double dG(double r, int n, double S) { return S * std::pow(std::sinh(r), n - 1); }

}  // namespace

// ---- parameters and profile ------------------------------------------

void SequenceParams::validate() const {
  if (!(R0 > 0.0) || !(R > R0) || !std::isfinite(R)) throw SpecError("SequenceParams: need R > R0 > 0");
  if (!(eps > 0.0)) throw SpecError("SequenceParams: eps must be > 0");
  if (iter < 0) throw SpecError("SequenceParams: iter must be >= 0");
}

ProfileFR::ProfileFR(double R0, double R) : R0_(R0), R_(R) {
  if (!(R0 > 0.0) || !(R > R0)) throw SpecError("f_R: need R > R0 > 0");
}

double ProfileFR::value(double t) const {
  if (t < 0.0) throw SpecError("f_R: t must be >= 0");
  if (t < R0_) return 1.0 / std::sqrt(R0_);
  if (t < R_) return 1.0 / std::sqrt(t);
  if (t < 2.0 * R_) return (2.0 - t / R_) / std::sqrt(R_);
  return 0.0;
}

double ProfileFR::derivative(double t) const {
  if (t < R0_) return 0.0;
  if (t < R_) return -0.5 / (t * std::sqrt(t));
  if (t < 2.0 * R_) return -1.0 / (R_ * std::sqrt(R_));
  return 0.0;
}

Taylor ProfileFR::compose(const Taylor& t) const {
  const double t0 = t[0];
  if (t0 < R0_) return Taylor(t.order(), 1.0 / std::sqrt(R0_));
  if (t0 < R_) return pow(t, -0.5);
  if (t0 < 2.0 * R_) return (2.0 - t * (1.0 / R_)) * (1.0 / std::sqrt(R_));
  return Taylor(t.order());
}

double ProfileFR::cumulative(double t) const {
  const double s0 = std::sqrt(R0_), sR = std::sqrt(R_);
  if (t < R0_) return t / s0;
  if (t < R_) return 2.0 * std::sqrt(t) - s0;
  if (t < 2.0 * R_) return 2.0 * sR - s0 + (2.0 * (t - R_) - (t * t - R_ * R_) / (2.0 * R_)) / sR;
  return 2.5 * sR - s0;
}

double ProfileFR::l2_norm_sq() const { return std::log(R_ / R0_) + 4.0 / 3.0; }
double ProfileFR::weighted_derivative_sq() const { return 0.25 * (std::log(R_ / R0_) + 28.0 / 3.0); }

ProfileFR profile_f_R(const SequenceParams& p) {
  p.validate();
  return ProfileFR(p.R0, p.R);
}

RadialFunction profile_function(const ProfileFR& f) {
  return RadialFunction([f](double t, int d) { return f.compose(Taylor::variable(t, d)); },
                        Support{0.0, f.support_end()}, f.breakpoints(), 0, "f_R");
}

VolumeProfile volume_profile(const ProfileFR& f) {
  return {[f](const Taylor& t) { return f.compose(t); }, f.breakpoints(), f.support_end(), 0, "f_R"};
}

Taylor ball_volume_series(double r, int order, int n) {
  Taylor T(order, hypgeom::ball_volume_G(r, n));
  if (order >= 1) {
    const Taylor s = hypgeom::sphere_surface_measure(n) * ipow(sinh(Taylor::variable(r, order - 1)), n - 1);
    for (int k = 0; k < order; ++k) T[k + 1] = s[k] / (k + 1);
  }
  return T;
}

RadialFunction lift_to_hn(const VolumeProfile& p, int n) {
  hypgeom::require_dimension(n);
  const double hi = std::isfinite(p.support_end) ? hypgeom::ball_volume_inverse_F(p.support_end, n)
                                                 : std::numeric_limits<double>::infinity();
  std::vector<double> bps;
  for (double b : p.breakpoints)
    if (b > 0.0 && std::isfinite(b)) bps.push_back(hypgeom::ball_volume_inverse_F(b, n));
  auto compose = p.compose;
  return RadialFunction([compose, n](double r, int d) { return compose(ball_volume_series(r, d, n)); },
                        Support{0.0, hi}, bps, p.smoothness, "lift(" + p.name + ")");
}

// ---- v-iteration --------------------------------------------------------

struct VIteration::Level {
  std::vector<std::vector<double>> u, d1, d2;  // per cell, in the local variable
  std::vector<double> q_edges;                 // Q_i at cell edges
};

VIteration::VIteration(const SequenceParams& p, int n, VIterationConfig cfg)
    : f_(profile_f_R(p)), n_(n), depth_(p.iter), cfg_(cfg) {
  hypgeom::require_dimension(n);
  if (cfg.degree < 4 || !(cfg.cell_width > 0.0) || !(cfg.pad > 0.0))
    throw SpecError("VIterationConfig: need degree >= 4, positive cell width and pad");
  const double S = hypgeom::sphere_surface_measure(n);
  const double b1 = hypgeom::ball_volume_inverse_F(p.R0, n);
  const double b2 = hypgeom::ball_volume_inverse_F(p.R, n);
  const double b3 = hypgeom::ball_volume_inverse_F(2.0 * p.R, n);
  rh_ = b3 + cfg.pad / (n - 1);
  const double segs[] = {0.0, b1, b2, b3, rh_};
  edges_.push_back(0.0);
  for (int s = 0; s < 4; ++s) {
    const double len = segs[s + 1] - segs[s];
    const int cells = std::max(1, static_cast<int>(std::ceil(len / cfg.cell_width)));
    for (int c = 1; c <= cells; ++c) edges_.push_back(c == cells ? segs[s + 1] : segs[s] + len * c / cells);
  }
  const std::size_t ncell = edges_.size() - 1;
  q0_edges_.resize(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) q0_edges_[e] = f_.cumulative(hypgeom::ball_volume_G(edges_[e], n));

  levels_ = std::make_shared<std::vector<Level>>();
  const int P = cfg.degree;
  const auto& gl = detail::GaussLegendre<20>::get();
  std::vector<double> xs(P);
  for (int j = 0; j < P; ++j) xs[j] = std::cos(std::numbers::pi * (j + 0.5) / P);

  for (int i = 1; i <= depth_; ++i) {
    Level L;
    L.u.resize(ncell);
    L.d1.resize(ncell);
    L.d2.resize(ncell);
    // Q_{i-1} at a point of cell c, accurate in the relative sense near r = 0.
    auto q_prev = [&](std::size_t c, double r) {
      if (i == 1) return f_.cumulative(hypgeom::ball_volume_G(r, n));
      const double a = edges_[c];
      return (*levels_)[i - 2].q_edges[c] +
             gl.integrate([&](double s) { return U(i - 1, s) * dG(s, n, S); }, a, r);
    };
    double ub;
    {
      const double g = dG(rh_, n, S);
      const double qh = (i == 1) ? q0_edges_.back() : (*levels_)[i - 2].q_edges.back();
      const double slope = (i == 1) ? 0.0 : U(i - 1, rh_ * (1 - 1e-15)) * g;
      ub = qh / ((n - 1) * g) + slope / ((n - 1.0) * (n - 1.0) * g);
    }
    for (std::size_t c = ncell; c-- > 0;) {
      const double a = edges_[c], b = edges_[c + 1];
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      std::vector<double> vals(P);
      for (int j = 0; j < P; ++j) {
        const double r = mid + half * xs[j];
        vals[j] = q_prev(c, r) / dG(r, n, S);
      }
      std::vector<double> A = cheb_integrate(cheb_fit(vals));
      for (auto& v : A) v *= -half;
      A[0] += ub;
      ub = cheb_eval(A, -1.0);
      std::vector<double> d1 = cheb_derivative(A);
      for (auto& v : d1) v /= half;
      std::vector<double> d2 = cheb_derivative(d1);
      for (auto& v : d2) v /= half;
      L.u[c] = std::move(A);
      L.d1[c] = std::move(d1);
      L.d2[c] = std::move(d2);
    }
    levels_->push_back(std::move(L));
    Level& cur = levels_->back();
    cur.q_edges.assign(edges_.size(), 0.0);
    for (std::size_t c = 0; c < ncell; ++c)
      cur.q_edges[c + 1] = cur.q_edges[c] +
                           gl.integrate([&](double s) { return U(i, s) * dG(s, n, S); }, edges_[c], edges_[c + 1]);
  }
}

std::size_t VIteration::cell_of(double r) const {
  auto it = std::upper_bound(edges_.begin(), edges_.end(), r);
  std::size_t c = static_cast<std::size_t>(it - edges_.begin());
  c = c == 0 ? 0 : c - 1;
  return std::min(c, edges_.size() - 2);
}

double VIteration::U(int i, double r) const {
  if (i < 0 || i > depth_) throw SpecError("VIteration: level out of range");
  if (!(r >= 0.0)) throw SpecError("VIteration: r must be >= 0");
  if (i == 0) return f_.value(hypgeom::ball_volume_G(r, n_));
  if (r >= rh_) return 0.0;
  const std::size_t c = cell_of(r);
  const double mid = 0.5 * (edges_[c] + edges_[c + 1]), half = 0.5 * (edges_[c + 1] - edges_[c]);
  return cheb_eval((*levels_)[i - 1].u[c], (r - mid) / half);
}

double VIteration::Q(int i, double r) const {
  if (i < 0 || i > depth_) throw SpecError("VIteration: level out of range");
  if (i == 0) return f_.cumulative(hypgeom::ball_volume_G(r, n_));
  const auto& L = (*levels_)[i - 1];
  if (r >= rh_) return L.q_edges.back();
  const std::size_t c = cell_of(r);
  const double S = hypgeom::sphere_surface_measure(n_);
  return L.q_edges[c] + detail::GaussLegendre<20>::get().integrate(
                            [&](double s) { return U(i, s) * dG(s, n_, S); }, edges_[c], r);
}

double VIteration::v(int i, double t) const { return U(i, hypgeom::ball_volume_inverse_F(t, n_)); }

double VIteration::g(int i, double t) const {
  if (i < 1) throw SpecError("g_{R,i} is defined for i >= 1");
  if (!(t > 0.0)) throw SpecError("g_{R,i}: t must be > 0");
  return Q(i - 1, hypgeom::ball_volume_inverse_F(t, n_)) / t;
}

Taylor VIteration::jet(int i, double r, int order) const {
  if (i == 0) return f_.compose(ball_volume_series(r, order, n_));
  if (r >= rh_) return Taylor(order);
  const std::size_t c = cell_of(r);
  const auto& L = (*levels_)[i - 1];
  const double mid = 0.5 * (edges_[c] + edges_[c + 1]), half = 0.5 * (edges_[c + 1] - edges_[c]);
  const double x = (r - mid) / half;
  Taylor T(order, cheb_eval(L.u[c], x));
  if (order >= 1) T[1] = cheb_eval(L.d1[c], x);
  if (order >= 2) T[2] = 0.5 * cheb_eval(L.d2[c], x);
  if (order >= 3) {
    const Taylor cs = (n_ - 1.0) * coth_series(r, order - 2);
    const Taylor w = jet(i - 1, r, order - 2);
    for (int k = 1; k <= order - 2; ++k) {
      double s = w[k];
      for (int j = 0; j <= k; ++j) s += cs[j] * (k - j + 1) * T[k - j + 1];
      T[k + 2] = -s / ((k + 1.0) * (k + 2.0));
    }
  }
  return T;
}

RadialFunction VIteration::lifted(int i) const {
  if (i < 0 || i > depth_) throw SpecError("VIteration: level out of range");
  auto self = std::make_shared<const VIteration>(*this);
  if (i == 0)
    return RadialFunction([self](double r, int d) { return self->jet(0, r, d); },
                          Support{0.0, hypgeom::ball_volume_inverse_F(f_.support_end(), n_)},
                          {hypgeom::ball_volume_inverse_F(f_.R0(), n_), hypgeom::ball_volume_inverse_F(f_.R(), n_)},
                          0, "lift(f_R)");
  std::vector<double> bps(edges_.begin() + 1, edges_.end());
  return RadialFunction([self, i](double r, int d) { return self->jet(i, r, d); }, Support{0.0, rh_}, bps,
                        2 * i, "lift(v_" + std::to_string(i) + ")");
}

// ---- quotients ------------------------------------------------------------

RayleighResult rayleigh_quotient(const RadialFunction& u, int n, int k, int l, const quad::QuadratureConfig& cfg) {
  hypgeom::require_dimension(n);
  if (k < 0 || l < 0) throw SpecError("rayleigh_quotient: orders must be >= 0");
  const int need = std::max(k, l);
  if (u.smoothness() != kSmooth && u.smoothness() < need - 1)
    throw SpecError("rayleigh_quotient: " + u.name() + " is not in H^" + std::to_string(need));
  auto energy = [&](int order) {
    const RadialFunction w = nabla_r_k(u, order, n);
    return quad::integrate_hn_radial([&w](double r) { const double v = w(r); return v * v; }, w.support(),
                                     w.breakpoints(), n, {}, cfg);
  };
  RayleighResult out;
  out.numerator = energy(k);
  out.denominator = energy(l);
  if (!(out.denominator > 0.0)) throw SpecError("rayleigh_quotient: zero denominator");
  out.quotient = out.numerator / out.denominator;
  return out;
}

bool QuotientSweep::above_sharp(double rel) const {
  return std::all_of(rows.begin(), rows.end(), [&](const SweepRow& r) { return r.quotient >= sharp * (1.0 - rel); });
}

bool QuotientSweep::nonincreasing(double rel) const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].quotient > rows[i - 1].quotient * (1.0 + rel)) return false;
  return true;
}

bool QuotientSweep::within_bounds(double rel) const {
  return std::all_of(rows.begin(), rows.end(), [&](const SweepRow& r) {
    return !r.bound_certified || r.quotient <= r.upper_bound * (1.0 + rel);
  });
}

QuotientSweep sharpness_sweep(int n, int k, int l, double eps, const std::vector<double>& log_ratios,
                              const quad::QuadratureConfig& cfg, VIterationConfig vcfg) {
  hypgeom::require_dimension(n);
  if (l != 0) throw SpecError("sharpness_sweep: only l = 0 is constructible");
  if (k < 1) throw SpecError("sharpness_sweep: need k >= 1");
  if (log_ratios.empty()) throw SpecError("sharpness_sweep: empty list of ln(R/R0) values");
  QuotientSweep sw;
  sw.n = n;
  sw.k = k;
  sw.l = l;
  sw.eps = eps;
  sw.R0 = hypgeom::threshold_R0(eps, n);
  const double x2 = 0.25 * (n - 1.0) * (n - 1.0);
  sw.sharp = std::pow(x2, k);
  const int m = (k == 1) ? 0 : (k % 2 == 0 ? k / 2 : (k + 1) / 2);
  sw.construction = (k == 1) ? "lift(f_R)" : "lift(v_" + std::to_string(m) + ")";
  for (double L : log_ratios) {
    if (!(L > 0.0)) throw SpecError("sharpness_sweep: ln(R/R0) values must be > 0");
    SweepRow row;
    row.log_ratio = L;
    row.R = sw.R0 * std::exp(L);
    SequenceParams p{sw.R0, row.R, eps, m};
    if (k == 1) {
      const RadialFunction u = lift_to_hn(volume_profile(profile_f_R(p)), n);
      const auto q = rayleigh_quotient(u, n, 1, 0, cfg);
      row.numerator = q.numerator;
      row.denominator = q.denominator;
      row.quotient = q.quotient;
      row.upper_bound = x2 * (1 + eps) * (1 + eps) * (L + 28.0 / 3.0) / (L + 4.0 / 3.0);
      row.bound_certified = true;
    } else {
      const VIteration it(p, n, vcfg);
      const RadialFunction u = it.lifted(m);
      const auto q = rayleigh_quotient(u, n, k, 0, cfg);
      row.numerator = q.numerator;
      row.denominator = q.denominator;
      row.quotient = q.quotient;
      if (k % 2 == 0) {
        row.upper_bound = sw.sharp * std::pow(1 + eps, 2 * k);
        row.bound_certified = false;
      } else {
        row.upper_bound = rayleigh_quotient(u, n, k + 1, 0, cfg).quotient / x2;
        row.bound_certified = true;
      }
    }
    sw.rows.push_back(row);
  }
  return sw;
}

}  // namespace radpoin::sharp
