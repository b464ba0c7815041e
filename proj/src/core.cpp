#include "gsieve/core.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace gsieve {

DiffusionCoefficients derive_coefficients(const LindbladCouplings& couplings, double hbar) {
  double sum_a2 = 0.0;
  double sum_b2 = 0.0;
  std::complex<double> cross{0.0, 0.0};
  for (const auto& [a, b] : couplings) {
    sum_a2 += std::norm(a);
    sum_b2 += std::norm(b);
    cross += std::conj(a) * b;
  }
  DiffusionCoefficients out;
  out.D_qq = 0.5 * hbar * sum_a2;
  out.D_pp = 0.5 * hbar * sum_b2;
  out.D_pq = -0.5 * hbar * cross.real();
  out.lambda = -cross.imag();

  // Cauchy-Schwarz: sum|a|^2 sum|b|^2 >= |sum a* b|^2.
  [[maybe_unused]] const double slack =
      out.D_pp * out.D_qq - out.D_pq * out.D_pq - 0.25 * out.lambda * out.lambda * hbar * hbar;
  assert(slack >= -1e-12 * std::max(1.0, out.D_pp * out.D_qq));
  return out;
}

ModelParams model_from_couplings(const LindbladCouplings& couplings, double m, double omega,
                                 double mu, double hbar) {
  const auto c = derive_coefficients(couplings, hbar);
  return ModelParams{m, omega, mu, hbar, c.D_qq, c.D_pp, c.D_pq, c.lambda};
}

DriftStability drift_stability(const Mat2& Y) {
  const double half_trace = 0.5 * Y.trace();
  const double disc = half_trace * half_trace - Y.det();
  DriftStability s;
  if (disc < 0.0) {
    s.oscillatory = true;
    s.re_max = s.re_min = half_trace;
  } else {
    const double r = std::sqrt(disc);
    s.re_max = half_trace + r;
    s.re_min = half_trace - r;
  }
  s.hurwitz = s.re_max < 0.0;
  return s;
}

ValidationReport validate(const ModelParams& p) {
  ValidationReport r;
  r.mass_positive = p.m > 0.0;
  r.omega_positive = p.omega > 0.0;
  r.hbar_positive = p.hbar > 0.0;
  r.D_qq_nonnegative = p.D_qq >= 0.0;
  r.D_pp_nonnegative = p.D_pp >= 0.0;

  const double det = p.D_pp * p.D_qq - p.D_pq * p.D_pq;
  r.slack = det - 0.25 * p.lambda * p.lambda * p.hbar * p.hbar;
  r.tolerance = 1e-10 * std::max(1.0, std::abs(p.D_pp * p.D_qq));
  r.positivity_constraint = r.slack >= -r.tolerance;
  r.delta = (det > 0.0 && p.hbar > 0.0) ? 2.0 / p.hbar * std::sqrt(det) : 0.0;
  r.anti_damped = p.lambda < 0.0;

  if (!r.mass_positive) r.failures.emplace_back("mass must be positive");
  if (!r.omega_positive) r.failures.emplace_back("omega must be positive");
  if (!r.hbar_positive) r.failures.emplace_back("hbar must be positive");
  if (!r.D_qq_nonnegative) r.failures.emplace_back("D_qq must be non-negative");
  if (!r.D_pp_nonnegative) r.failures.emplace_back("D_pp must be non-negative");
  if (!r.positivity_constraint)
    r.failures.emplace_back("D_pp*D_qq - D_pq^2 < lambda^2*hbar^2/4 (slack " +
                            std::to_string(r.slack) + ")");
  if (r.anti_damped) r.warnings.emplace_back("lambda < 0: anti-damped dynamics");

  if (r.passed()) {
    // det D >= lambda^2 hbar^2 / 4 implies Delta >= |lambda|.
    assert(r.delta >= std::abs(p.lambda) * (1.0 - 1e-6) - 1e-6);
  }

  r.stability = drift_stability(build_drift(p).Y);
  if (!r.stability.hurwitz) r.warnings.emplace_back("drift is not Hurwitz: no stationary state");
  return r;
}

DriftMatrix build_drift(const ModelParams& p) {
  return {Mat2{-(p.lambda - p.mu), p.omega, -p.omega, -(p.lambda + p.mu)}};
}

ScaledDiffusion build_scaled_diffusion(const ModelParams& p) {
  const double mw = p.m_omega();
  return {Mat2::symmetric(mw * p.D_qq, p.D_pq, p.D_pp / mw)};
}

void set_from_scaled_diffusion(ModelParams& p, const Mat2& scaled) {
  const double mw = p.m_omega();
  p.D_qq = scaled.a11 / mw;
  p.D_pq = 0.5 * (scaled.a12 + scaled.a21);
  p.D_pp = scaled.a22 * mw;
}

}  // namespace gsieve
