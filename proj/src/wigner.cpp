#include "gsieve/wigner.hpp"

#include <cmath>
#include <numbers>

#include "gsieve/error.hpp"
#include "gsieve/kernels.hpp"

namespace gsieve {

WignerDensity::WignerDensity(const GaussianState& state) : mean_(state.mean) {
  const Mat2& s = state.sigma;
  const auto eig = sym_eigenvalues(s);
  if (std::abs(s.a12 - s.a21) > 1e-12 * s.frobenius() || !(eig.smallest > 0.0))
    throw Error(ErrorCode::NotSPD, "Wigner function needs a positive definite Sigma");
  inv_ = s.inverse();
  norm_ = 1.0 / (2.0 * std::numbers::pi * std::sqrt(s.det()));
}

double WignerDensity::operator()(double x1, double x2) const {
  const double u = x1 - mean_.x1;
  const double v = x2 - mean_.x2;
  const double q = inv_.a11 * u * u + (inv_.a12 + inv_.a21) * u * v + inv_.a22 * v * v;
  return norm_ * std::exp(-0.5 * q);
}

double wigner_eval(const GaussianState& state, PhasePoint p) { return WignerDensity(state)(p); }

AxisSpec default_axis(const GaussianState& state, int axis, double half_width, std::size_t n) {
  const double centre = axis == 0 ? state.mean.x1 : state.mean.x2;
  const double sd = std::sqrt(axis == 0 ? state.sigma.a11 : state.sigma.a22);
  return {centre - half_width * sd, centre + half_width * sd, n};
}

std::vector<double> axis_nodes(const AxisSpec& axis) {
  if (axis.n == 0) throw Error(ErrorCode::InvalidArgument, "axis needs at least one node");
  if (axis.n == 1) return {axis.lo};
  std::vector<double> xs(axis.n);
  const double h = (axis.hi - axis.lo) / static_cast<double>(axis.n - 1);
  for (std::size_t i = 0; i < axis.n; ++i) xs[i] = axis.lo + h * static_cast<double>(i);
  xs.back() = axis.hi;
  return xs;
}

WignerGrid wigner_grid(const GaussianState& state, const AxisSpec& x1, const AxisSpec& x2) {
  WignerGrid g;
  g.x1s = axis_nodes(x1);
  g.x2s = axis_nodes(x2);
  g.values.resize(g.x1s.size() * g.x2s.size());
  kernels::wigner_grid_omp(state, g.x1s, g.x2s, g.values);
  return g;
}

namespace {

WignerGrid quadrature_grid(const GaussianState& state, const QuadratureSpec& spec) {
  if (!(spec.half_width >= kMinBoxSigmas))
    throw Error(ErrorCode::BoxTooSmall, "quadrature box must cover at least " +
                                            std::to_string(kMinBoxSigmas) +
                                            " standard deviations");
  if (spec.nodes < 3) throw Error(ErrorCode::InvalidArgument, "quadrature needs >= 3 nodes");
  return wigner_grid(state, default_axis(state, 0, spec.half_width, spec.nodes),
                     default_axis(state, 1, spec.half_width, spec.nodes));
}

}  // namespace

double wigner_normalization(const GaussianState& state, const QuadratureSpec& spec) {
  const auto g = quadrature_grid(state, spec);
  return kernels::trapezoid_omp(g.values, g.x1s, g.x2s);
}

WignerMoments wigner_moments(const GaussianState& state, const QuadratureSpec& spec) {
  using kernels::Moment;
  const auto g = quadrature_grid(state, spec);
  const auto integral = [&](Moment m) { return kernels::trapezoid_omp(g.values, g.x1s, g.x2s, m); };

  WignerMoments out;
  out.norm = integral(Moment::Zeroth);
  out.mean = {integral(Moment::X1) / out.norm, integral(Moment::X2) / out.norm};
  const double m11 = integral(Moment::X1X1) / out.norm;
  const double m12 = integral(Moment::X1X2) / out.norm;
  const double m22 = integral(Moment::X2X2) / out.norm;
  out.sigma = Mat2::symmetric(m11 - out.mean.x1 * out.mean.x1, m12 - out.mean.x1 * out.mean.x2,
                              m22 - out.mean.x2 * out.mean.x2);
  return out;
}

double fp_residual(const Trajectory& traj, PhasePoint p, std::size_t t_index, double h_x) {
  const auto& s = traj.samples;
  if (t_index == 0 || t_index + 1 >= s.size())
    throw Error(ErrorCode::IndexOutOfRange, "fp_residual needs an interior sample index");
  if (!(h_x > 0.0)) throw Error(ErrorCode::InvalidArgument, "h_x must be positive");
  const double back = s[t_index].t - s[t_index - 1].t;
  const double fwd = s[t_index + 1].t - s[t_index].t;
  if (std::abs(fwd - back) > 1e-9 * (fwd + back))
    throw Error(ErrorCode::IndexOutOfRange, "samples around t_index are not uniformly spaced");

  const WignerDensity before(s[t_index - 1].state);
  const WignerDensity now(s[t_index].state);
  const WignerDensity after(s[t_index + 1].state);
  const Mat2& Y = traj.generator.Y;
  const Mat2& D = traj.generator.D;

  const double df_dt = (after(p) - before(p)) / (fwd + back);

  const double x1 = p.x1;
  const double x2 = p.x2;
  const double h = h_x;
  // Flux components g_i = (Y x)_i f; the drift term is div g.
  const auto g1 = [&](double a, double b) { return (Y.a11 * a + Y.a12 * b) * now(a, b); };
  const auto g2 = [&](double a, double b) { return (Y.a21 * a + Y.a22 * b) * now(a, b); };
  const double drift =
      (g1(x1 + h, x2) - g1(x1 - h, x2)) / (2.0 * h) + (g2(x1, x2 + h) - g2(x1, x2 - h)) / (2.0 * h);

  const double f0 = now(x1, x2);
  const double f11 = (now(x1 + h, x2) - 2.0 * f0 + now(x1 - h, x2)) / (h * h);
  const double f22 = (now(x1, x2 + h) - 2.0 * f0 + now(x1, x2 - h)) / (h * h);
  const double f12 = (now(x1 + h, x2 + h) - now(x1 + h, x2 - h) - now(x1 - h, x2 + h) +
                      now(x1 - h, x2 - h)) /
                     (4.0 * h * h);
  const double diffusion = D.a11 * f11 + (D.a12 + D.a21) * f12 + D.a22 * f22;

  return df_dt + drift - diffusion;
}

}  // namespace gsieve
