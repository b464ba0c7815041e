#pragma once

// Damped harmonic oscillator under a Lindblad generator with two couplings
// V_j = a_j p + b_j q: coefficient derivation, drift/diffusion matrices and
// the positivity constraint D_pp D_qq - D_pq^2 >= lambda^2 hbar^2 / 4.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "gsieve/linalg.hpp"

namespace gsieve {

struct CouplingPair {
  std::complex<double> a;  ///< multiplies momentum
  std::complex<double> b;  ///< multiplies position
};

using LindbladCouplings = std::array<CouplingPair, 2>;

struct DiffusionCoefficients {
  double D_qq = 0.0;
  double D_pp = 0.0;
  double D_pq = 0.0;
  double lambda = 0.0;
};

/// Canonical model parameterization.
struct ModelParams {
  double m = 1.0;
  double omega = 1.0;
  double mu = 0.0;
  double hbar = 1.0;
  double D_qq = 0.0;
  double D_pp = 0.0;
  double D_pq = 0.0;
  double lambda = 0.0;

  double m_omega() const { return m * omega; }
};

/// Drift generator Y = [[-(lambda - mu), omega], [-omega, -(lambda + mu)]].
struct DriftMatrix {
  Mat2 Y;
};

/// Scaled diffusion: [[m omega D_qq, D_pq], [D_pq, D_pp / (m omega)]].
struct ScaledDiffusion {
  Mat2 D;
};

DiffusionCoefficients derive_coefficients(const LindbladCouplings& couplings, double hbar);

/// Builds ModelParams from couplings plus the Hamiltonian constants.
ModelParams model_from_couplings(const LindbladCouplings& couplings, double m, double omega,
                                 double mu, double hbar);

/// Eigenvalues of Y are -lambda +/- sqrt(mu^2 - omega^2).
struct DriftStability {
  double re_max = 0.0;  ///< largest real part
  double re_min = 0.0;
  bool oscillatory = false;  ///< complex pair (|mu| < omega)
  bool hurwitz = false;
};

DriftStability drift_stability(const Mat2& Y);

struct ValidationReport {
  bool mass_positive = true;
  bool omega_positive = true;
  bool hbar_positive = true;
  bool D_qq_nonnegative = true;
  bool D_pp_nonnegative = true;
  bool positivity_constraint = true;
  double slack = 0.0;      ///< D_pp D_qq - D_pq^2 - lambda^2 hbar^2 / 4
  double tolerance = 0.0;  ///< absolute tolerance applied to slack
  double delta = 0.0;      ///< diffusion intensity (2/hbar) sqrt(det D)
  bool anti_damped = false;
  DriftStability stability;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;

  bool passed() const { return failures.empty(); }
};

ValidationReport validate(const ModelParams& params);

DriftMatrix build_drift(const ModelParams& params);
ScaledDiffusion build_scaled_diffusion(const ModelParams& params);

/// Inverse of build_scaled_diffusion's scaling: recovers (D_qq, D_pp, D_pq)
/// from a scaled diffusion matrix for the given m omega.
void set_from_scaled_diffusion(ModelParams& params, const Mat2& scaled);

}  // namespace gsieve
