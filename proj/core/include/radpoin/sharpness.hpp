#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "radpoin/quadrature.hpp"
#include "radpoin/radial.hpp"

namespace radpoin::sharp {

struct SequenceParams {
  double R0 = 1.0;   // volume threshold
  double R = 10.0;   // volume scale, R > R0
  double eps = 0.01;
  int iter = 1;      // v-iteration depth
  void validate() const;
};

// Piecewise profile on the volume variable t:
//   R0^{-1/2} on [0,R0), t^{-1/2} on [R0,R), R^{-1/2}(2 - t/R) on [R,2R), 0 after.
class ProfileFR {
 public:
  ProfileFR(double R0, double R);

  double R0() const { return R0_; }
  double R() const { return R_; }
  double value(double t) const;
  double derivative(double t) const;
  Taylor compose(const Taylor& t) const;
  // int_0^t f_R
  double cumulative(double t) const;
  std::vector<double> breakpoints() const { return {R0_, R_, 2.0 * R_}; }
  double support_end() const { return 2.0 * R_; }
  // ln(R/R0) + 4/3 and (1/4)(ln(R/R0) + 28/3)
  double l2_norm_sq() const;
  double weighted_derivative_sq() const;

 private:
  double R0_, R_;
};

ProfileFR profile_f_R(const SequenceParams& p);
// The profile as a function of the volume variable (support (0, 2R)).
RadialFunction profile_function(const ProfileFR& f);

// Any profile on the volume variable that can be composed with a series.
struct VolumeProfile {
  std::function<Taylor(const Taylor&)> compose;
  std::vector<double> breakpoints;  // in t
  double support_end;               // may be +inf
  int smoothness = 0;
  std::string name;
};
VolumeProfile volume_profile(const ProfileFR& f);

// Series of G about r (G' = |S^{n-1}| sinh^{n-1}).
Taylor ball_volume_series(double r, int order, int n);

// r -> profile(G(r)); breakpoints mapped through F.
RadialFunction lift_to_hn(const VolumeProfile& p, int n);

struct VIterationConfig {
  int degree = 20;           // Chebyshev nodes per cell
  double cell_width = 0.05;  // geodesic width of a cell
  double pad = 36.0;         // r_h = F(2R) + pad/(n-1)
};

// The iterates v_{R,i} of the minimizing-sequence construction, held in the
// geodesic variable: U_i = v_i o G, Q_i = P_i o G with P_i(t) = int_0^t v_i.
// They satisfy U_i' = -Q_{i-1}/G', Q_i' = U_i G', i.e. -Delta_r U_i = U_{i-1}.
class VIteration {
 public:
  VIteration(const SequenceParams& p, int n, VIterationConfig cfg = {});

  int depth() const { return depth_; }
  int dimension() const { return n_; }
  const ProfileFR& profile() const { return f_; }
  double r_horizon() const { return rh_; }
  const std::vector<double>& cell_edges() const { return edges_; }

  // geodesic variable
  double U(int i, double r) const;
  double Q(int i, double r) const;
  // volume variable: v_{R,i}(t), g_{R,i}(t) = P_{i-1}(t)/t
  double v(int i, double t) const;
  double g(int i, double t) const;

  // lift(v_{R,i}) with jets of any order (orders <= 2 from the Chebyshev
  // representation, higher ones from the recurrence U'' = -(n-1)coth U' - U_{i-1}).
  RadialFunction lifted(int i) const;

 private:
  struct Level;
  Taylor jet(int i, double r, int order) const;
  std::size_t cell_of(double r) const;

  ProfileFR f_;
  int n_;
  int depth_;
  VIterationConfig cfg_;
  double rh_;
  std::vector<double> edges_;
  std::shared_ptr<std::vector<Level>> levels_;  // index i-1 for U_i, i >= 1
  std::vector<double> q0_edges_;                // Q_0 at edges
};

struct RayleighResult {
  double numerator = 0.0;
  double denominator = 0.0;
  double quotient = 0.0;
};

// int |grad_r^k u|^2 dv / int |grad_r^l u|^2 dv
RayleighResult rayleigh_quotient(const RadialFunction& u, int n, int k, int l,
                                 const quad::QuadratureConfig& cfg = {});

struct SweepRow {
  double log_ratio = 0.0;  // ln(R/R0)
  double R = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  double quotient = 0.0;
  double upper_bound = 0.0;
  bool bound_certified = false;  // true: finite-R bound; false: asymptotic target
};

struct QuotientSweep {
  int n = 0, k = 0, l = 0;
  double eps = 0.0;
  double R0 = 0.0;
  double sharp = 0.0;
  std::string construction;  // "lift(f_R)" or "lift(v_m)"
  std::vector<SweepRow> rows;

  bool above_sharp(double rel = 1e-8) const;
  bool nonincreasing(double rel = 1e-6) const;
  bool within_bounds(double rel = 1e-8) const;
};

// Sweep over ln(R/R0).  k = 1 uses lift(f_R); k = 2m uses lift(v_{R,m});
// odd k = 2m+1 >= 3 uses lift(v_{R,m+1}) and bounds the quotient by
// ((2/(n-1))^2 times the (k+1)-quotient (the bootstrap step).
QuotientSweep sharpness_sweep(int n, int k, int l, double eps, const std::vector<double>& log_ratios,
                              const quad::QuadratureConfig& cfg = {}, VIterationConfig vcfg = {});

}  // namespace radpoin::sharp
