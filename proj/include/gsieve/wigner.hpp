#pragma once

// Gaussian Wigner functions in scaled phase-space coordinates
//   f(x) = [(2 pi)^2 det Sigma]^(-1/2) exp(-1/2 (x - m)^T Sigma^-1 (x - m))
// and a finite-difference residual of the phase-space equation of motion
//   df/dt + sum_ij Y_ij d_i (x_j f) - sum_ij D_ij d_i d_j f = 0.

#include <cstddef>
#include <vector>

#include "gsieve/dynamics.hpp"
#include "gsieve/linalg.hpp"

namespace gsieve {

struct PhasePoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Pre-factored density for repeated evaluation. Throws NotSPD.
class WignerDensity {
 public:
  explicit WignerDensity(const GaussianState& state);

  double operator()(double x1, double x2) const;
  double operator()(PhasePoint p) const { return (*this)(p.x1, p.x2); }

  double peak() const { return norm_; }

 private:
  Vec2 mean_;
  Mat2 inv_;
  double norm_;
};

double wigner_eval(const GaussianState& state, PhasePoint p);

/// Box of +/- half_width standard deviations (per axis, around the mean)
/// with `nodes` points per axis.
struct QuadratureSpec {
  double half_width = 8.0;
  std::size_t nodes = 401;
};

/// Boxes narrower than this many standard deviations are rejected.
inline constexpr double kMinBoxSigmas = 6.0;

/// Trapezoid integral of the density. Throws BoxTooSmall.
double wigner_normalization(const GaussianState& state, const QuadratureSpec& spec = {});

struct WignerMoments {
  double norm = 0.0;
  Vec2 mean;
  Mat2 sigma;
};

/// Normalization, first and central second moments by quadrature.
WignerMoments wigner_moments(const GaussianState& state, const QuadratureSpec& spec = {});

struct AxisSpec {
  double lo = -1.0;
  double hi = 1.0;
  std::size_t n = 101;
};

std::vector<double> axis_nodes(const AxisSpec& axis);

struct WignerGrid {
  std::vector<double> x1s;
  std::vector<double> x2s;
  std::vector<double> values;  ///< row-major, x1 outer
};

WignerGrid wigner_grid(const GaussianState& state, const AxisSpec& x1, const AxisSpec& x2);

/// Axes of +/- half_width standard deviations around the state mean.
AxisSpec default_axis(const GaussianState& state, int axis, double half_width, std::size_t n);

/// Residual at sample `t_index` (needs both neighbours, uniformly spaced);
/// time derivative from neighbouring samples, space derivatives by central
/// differences with step h_x. Throws IndexOutOfRange.
double fp_residual(const Trajectory& traj, PhasePoint p, std::size_t t_index, double h_x);

}  // namespace gsieve
