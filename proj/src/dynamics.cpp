#include "gsieve/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "gsieve/error.hpp"

namespace gsieve {

Vec2 to_scaled(double q, double p, double m_omega) {
  const double r = std::sqrt(m_omega);
  return {r * q, p / r};
}

Vec2 to_raw(Vec2 scaled, double m_omega) {
  const double r = std::sqrt(m_omega);
  return {scaled.x1 / r, scaled.x2 * r};
}

Generator make_generator(const ModelParams& model) {
  return {build_drift(model).Y, build_scaled_diffusion(model).D, model.hbar};
}

Mat2 rhs_sigma(const Mat2& sigma, const Mat2& Y, const Mat2& D) {
  return Y * sigma + sigma * Y.transpose() + 2.0 * D;
}

Vec2 rhs_mean(Vec2 mean, const Mat2& Y) { return Y * mean; }

GaussianState step_rk4(const GaussianState& s, const Mat2& Y, const Mat2& D, double dt,
                       double t) {
  if (dt < 0.0 || !std::isfinite(dt))
    throw Error(ErrorCode::InvalidArgument, "step size must be finite and non-negative");
  if (dt == 0.0) return s;

  const auto f = [&](const GaussianState& x) {
    return GaussianState{rhs_mean(x.mean, Y), rhs_sigma(x.sigma, Y, D)};
  };
  const auto axpy = [](const GaussianState& x, double h, const GaussianState& k) {
    return GaussianState{x.mean + h * k.mean, x.sigma + h * k.sigma};
  };

  const GaussianState k1 = f(s);
  const GaussianState k2 = f(axpy(s, 0.5 * dt, k1));
  const GaussianState k3 = f(axpy(s, 0.5 * dt, k2));
  const GaussianState k4 = f(axpy(s, dt, k3));

  const double w = dt / 6.0;
  GaussianState out;
  out.mean = s.mean + w * (k1.mean + 2.0 * k2.mean + 2.0 * k3.mean + k4.mean);
  out.sigma = (s.sigma + w * (k1.sigma + 2.0 * k2.sigma + 2.0 * k3.sigma + k4.sigma)).symmetrized();

  const auto eig = sym_eigenvalues(out.sigma);
  const double tr = out.sigma.trace();
  if (!std::isfinite(tr) || !(eig.smallest > -1e-10 * tr) || !(tr > 0.0))
    throw IntegrationError(t + dt, "Sigma lost positive definiteness (step too large or invalid model)");
  return out;
}

Trajectory evolve(const GaussianState& initial, const Generator& gen, double t_final, double dt,
                  std::size_t sample_every) {
  if (!(t_final >= 0.0) || !std::isfinite(t_final))
    throw Error(ErrorCode::InvalidArgument, "t_final must be finite and non-negative");
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (sample_every == 0) throw Error(ErrorCode::InvalidArgument, "sample_every must be >= 1");

  const auto steps = t_final == 0.0
                         ? std::size_t{0}
                         : static_cast<std::size_t>(std::max(1.0, std::ceil(t_final / dt - 1e-9)));
  const double h = steps == 0 ? dt : t_final / static_cast<double>(steps);

  Trajectory traj;
  traj.generator = gen;
  traj.step = h;
  traj.sample_every = sample_every;
  traj.samples.reserve(steps / sample_every + 2);

  const auto record = [&](double t, const GaussianState& s) {
    try {
      traj.samples.push_back({t, s, entropy_report(s.sigma, gen.Y, gen.D, gen.hbar)});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnphysicalState || e.code() == ErrorCode::NonPositiveDeterminant)
        throw;
      throw IntegrationError(t, e.what());
    }
  };

  GaussianState state = initial;
  record(0.0, state);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_prev = static_cast<double>(k - 1) * h;
    state = step_rk4(state, gen.Y, gen.D, h, t_prev);
    if (k % sample_every == 0 || k == steps) record(static_cast<double>(k) * h, state);
  }
  return traj;
}

Trajectory evolve(const GaussianState& initial, const ModelParams& model, double t_final,
                  double dt, std::size_t sample_every) {
  return evolve(initial, make_generator(model), t_final, dt, sample_every);
}

namespace {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

// Unknowns (s11, s12, s22) of Y S + S Y^T = rhs.
Mat3 lyapunov_operator(const Mat2& Y) {
  return {{{2.0 * Y.a11, 2.0 * Y.a12, 0.0},
           {Y.a21, Y.a11 + Y.a22, Y.a12},
           {0.0, 2.0 * Y.a21, 2.0 * Y.a22}}};
}

Vec3 mat_vec(const Mat3& a, const Vec3& x) {
  Vec3 y{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i] += a[i][j] * x[j];
  return y;
}

// Gaussian elimination with partial pivoting; false on a negligible pivot.
bool solve3(Mat3 a, Vec3 b, Vec3& x) {
  double scale = 0.0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return false;
  const double tiny = 1e-13 * scale;

  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) <= tiny) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int r = 2; r >= 0; --r) {
    double acc = b[r];
    for (int c = r + 1; c < 3; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  return true;
}

}  // namespace

Mat2 stationary_covariance(const Mat2& Y, const Mat2& D) {
  if (!drift_stability(Y).hurwitz)
    throw Error(ErrorCode::NotStable, "drift matrix is not Hurwitz");

  const Mat3 op = lyapunov_operator(Y);
  const Vec3 rhs{-2.0 * D.a11, -(D.a12 + D.a21), -2.0 * D.a22};
  Vec3 x{};
  if (!solve3(op, rhs, x)) throw Error(ErrorCode::SingularSystem, "stationary system is singular");

  // One round of iterative refinement.
  const Vec3 ax = mat_vec(op, x);
  const Vec3 r{rhs[0] - ax[0], rhs[1] - ax[1], rhs[2] - ax[2]};
  Vec3 dx{};
  if (solve3(op, r, dx))
    for (int i = 0; i < 3; ++i) x[i] += dx[i];

  const Mat2 sigma = Mat2::symmetric(x[0], x[1], x[2]);
  const double residual = rhs_sigma(sigma, Y, D).frobenius();
  if (residual > 1e-10 * (2.0 * D).frobenius() && residual > 1e-300)
    throw Error(ErrorCode::SingularSystem, "stationary solution residual too large");
  return sigma;
}

double heisenberg_slack(const Mat2& sigma, double hbar) {
  return sigma.det() - 0.25 * hbar * hbar;
}

}  // namespace gsieve
