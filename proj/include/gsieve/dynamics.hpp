#pragma once

// Moment dynamics of Gaussian states:
//   dX/dt     = Y X
//   dSigma/dt = Y Sigma + Sigma Y^T + 2 D
// integrated with fixed-step classical RK4.

#include <cstddef>
#include <vector>

#include "gsieve/core.hpp"
#include "gsieve/entropy.hpp"
#include "gsieve/linalg.hpp"

namespace gsieve {

/// Mean in scaled coordinates (x1 = sqrt(m omega) q, x2 = p / sqrt(m omega))
/// and dispersion matrix [[m omega s_qq, s_pq], [s_pq, s_pp / (m omega)]].
struct GaussianState {
  Vec2 mean;
  Mat2 sigma;
};

/// Conversions between raw (q, p) and scaled phase-space coordinates.
Vec2 to_scaled(double q, double p, double m_omega);
Vec2 to_raw(Vec2 scaled, double m_omega);

/// Everything the moment equations need, detached from ModelParams so that
/// synthetic generators (e.g. Y = 0) can be evolved too.
struct Generator {
  Mat2 Y;
  Mat2 D;
  double hbar = 1.0;
};

Generator make_generator(const ModelParams& model);

struct TrajectorySample {
  double t = 0.0;
  GaussianState state;
  EntropyReport entropy;
};

struct Trajectory {
  Generator generator;
  double step = 0.0;          ///< integrator step actually used
  std::size_t sample_every = 1;
  std::vector<TrajectorySample> samples;
};

Mat2 rhs_sigma(const Mat2& sigma, const Mat2& Y, const Mat2& D);
Vec2 rhs_mean(Vec2 mean, const Mat2& Y);

/// One RK4 step applied jointly to (mean, Sigma). dt = 0 returns the state
/// unchanged. Throws IntegrationError (with time `t`) if Sigma loses positive
/// definiteness: smallest eigenvalue <= -1e-10 * trace.
GaussianState step_rk4(const GaussianState& state, const Mat2& Y, const Mat2& D, double dt,
                       double t = 0.0);

/// Integrates to t_final with the largest uniform step <= dt that divides
/// t_final, recording every `sample_every`-th step plus the final state.
Trajectory evolve(const GaussianState& initial, const Generator& gen, double t_final, double dt,
                  std::size_t sample_every = 1);
Trajectory evolve(const GaussianState& initial, const ModelParams& model, double t_final,
                  double dt, std::size_t sample_every = 1);

/// Solution of Y S + S Y^T + 2 D = 0. Throws NotStable unless Y is Hurwitz,
/// SingularSystem if the 3x3 system cannot be solved reliably.
Mat2 stationary_covariance(const Mat2& Y, const Mat2& D);

/// det Sigma - hbar^2 / 4.
double heisenberg_slack(const Mat2& sigma, double hbar);

}  // namespace gsieve
