// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "gsieve/core.hpp"
#include "gsieve/decomposition.hpp"
#include "gsieve/dynamics.hpp"
#include "gsieve/entropy.hpp"
#include "gsieve/error.hpp"
#include "gsieve/sieve.hpp"
#include "gsieve/wigner.hpp"

using namespace gsieve;
using oracle::kPi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Model with a prescribed diffusion decomposition and friction.
ModelParams model_with(std::mt19937_64& rng, const DiffDecomposition& diff, double lambda) {
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  ModelParams p;
  p.m = u(rng);
  p.omega = u(rng);
  p.mu = 0.8 * p.omega * sym(rng);
  p.hbar = u(rng);
  p.lambda = lambda;
  set_from_scaled_diffusion(p, compose_diffusion(diff, p.hbar));
  return p;
}

GaussianState pure_state(std::mt19937_64& rng, double hbar) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> n(0.0, 1.0);
  const CovDecomposition dec{1.0, std::exp(1.5 * u(rng)), kPi * u(rng)};
  return {{n(rng), n(rng)}, compose(dec, hbar)};
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome sieve_minimizer() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const GridSpec spec{401, 361, 0.5, 8.0};
  const auto start = std::chrono::steady_clock::now();
  double worst_aleph = 0.0, worst_theta = 0.0, worst_rate = 0.0;
  Outcome out;
  for (int k = 0; k < 100; ++k) {
    const double delta = 0.1 + 2.0 * u(rng);
    const DiffDecomposition diff{delta, 1.0 + 4.0 * u(rng), kPi * u(rng)};
    const ModelParams p = model_with(rng, diff, delta * u(rng));
    // Everything below is derived from the model, not from the sampled tuple.
    const DiffDecomposition got = decompose_diffusion(build_scaled_diffusion(p).D, p.hbar);
    const auto r = run_sieve(1.0, p.lambda, got, spec);
    const double da = std::abs(std::log(r.grid.canonical.aleph / got.d)) / r.grid.aleph_log_step;
    const double dt = got.d == 1.0 ? 0.0
                                   : half_turn_distance(r.grid.canonical.theta, got.phi) /
                                         r.grid.theta_step;
    const double rel = (r.refined.rate - r.analytic.min_rate) / std::abs(r.analytic.min_rate);
    worst_aleph = std::max(worst_aleph, da);
    worst_theta = std::max(worst_theta, dt);
    worst_rate = std::max(worst_rate, std::abs(rel));
    if (da > 1.0 || dt > 1.0 || rel < -1e-12 || rel > 1e-6) out.pass = false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 60.0) out.pass = false;
  out.detail = fmt("max |dln aleph|/step=%.3f, max |dtheta|/step=%.3f, max rel rate excess=%.2e",
                   worst_aleph, worst_theta, worst_rate) +
               fmt(", %.2fs", secs);
  return out;
}

Outcome minimum_rate_formula() {
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const double delta = 0.05 + 3.0 * u(rng);
    const double lambda = -delta + 2.0 * delta * u(rng);
    const DiffDecomposition diff{delta, 1.0 + 4.0 * u(rng), kPi * u(rng)};
    const double area = 1.0 + 9.0 * u(rng);
    const double hbar = 0.3 + 2.0 * u(rng);
    const double min_rate = analytic_minimizer(area, lambda, diff).min_rate;
    const double at = rate_at(diff.d, diff.phi, area, lambda, diff);
    const Mat2 sigma = compose({area, diff.d, diff.phi}, hbar);
    const Mat2 D = compose_diffusion(diff, hbar);
    const double init = initial_rate(sigma, D, lambda, hbar);
    // The rate is a difference of two positive terms; relative error is taken
    // against their magnitude so that near-cancelling cases remain meaningful.
    const double scale = std::max(std::abs(min_rate), 2.0 * (delta + std::abs(lambda) * area) /
                                                          (area * area));
    worst = std::max({worst, std::abs(min_rate - at) / scale, std::abs(min_rate - init) / scale});
  }
  return {worst <= 1e-12, fmt("max rel error=%.2e", worst)};
}

Outcome pure_state_bound() {
  std::mt19937_64 rng(1003);
  double lowest = 1e300;
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const ModelParams p = oracle::random_model(rng, false);
    if (!validate(p).passed()) return {false, "random model failed validation"};
    const auto diff = decompose_diffusion(build_scaled_diffusion(p).D, p.hbar);
    lowest = std::min(lowest, analytic_minimizer(1.0, p.lambda, diff).min_rate);
    ++checked;
  }
  std::normal_distribution<double> n(0.0, 1.0);
  double worst_saturated = 0.0;
  for (int k = 0; k < 200; ++k) {
    LindbladCouplings c{};
    c[0] = {{n(rng), n(rng)}, {n(rng), n(rng)}};
    if ((std::conj(c[0].a) * c[0].b).imag() > 0.0) c[0].b = -c[0].b;  // lambda >= 0
    const ModelParams p = model_from_couplings(c, 1.0, 1.0, 0.0, 0.5 + k * 0.01);
    const auto diff = decompose_diffusion(build_scaled_diffusion(p).D, p.hbar);
    worst_saturated =
        std::max(worst_saturated, std::abs(analytic_minimizer(1.0, p.lambda, diff).min_rate));
  }
  return {lowest >= -1e-10 && worst_saturated <= 1e-10,
          fmt("%g models, lowest min rate=%.3e, saturated max |rate|=%.2e", checked, lowest,
              worst_saturated)};
}

Outcome isotropic_coherent() {
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const GridAxes axes = make_axes({401, 361, 0.5, 8.0});
  const double log_step = std::log(axes.alephs[1] / axes.alephs[0]);
  double worst = 0.0;
  bool analytic_ok = true;
  for (int k = 0; k < 10; ++k) {
    const double delta = 0.1 + 2.0 * u(rng);
    const ModelParams p = model_with(rng, {delta, 1.0, 0.0}, delta * u(rng));
    const auto diff = decompose_diffusion(build_scaled_diffusion(p).D, p.hbar);
    const double area = 1.0 + 4.0 * u(rng);
    analytic_ok = analytic_ok && analytic_minimizer(area, p.lambda, diff).aleph_star == 1.0;
    const auto rows = rate_landscape(area, p.lambda, diff, axes);
    const std::size_t nt = axes.thetas.size();
    for (std::size_t j = 0; j < nt; ++j) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < axes.alephs.size(); ++i)
        if (rows[i * nt + j].rate < rows[best * nt + j].rate) best = i;
      worst = std::max(worst, std::abs(std::log(axes.alephs[best])) / log_step);
    }
  }
  return {analytic_ok && worst <= 1.0,
          std::string("aleph*=1 analytically: ") + (analytic_ok ? "yes" : "no") +
              fmt("; max column |ln aleph|/step=%.3f", worst)};
}

Outcome rate_trajectory_consistency() {
  std::mt19937_64 rng(1005);
  const double dt = 1e-4;
  const std::size_t steps = 10000;
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ModelParams p = oracle::random_model(rng);
    const GaussianState s0 = pure_state(rng, p.hbar);
    const auto traj = evolve(s0, p, steps * dt, dt);
    for (int n = 1; n <= 50; ++n) {
      const std::size_t i = n * (steps / 51);
      // Fourth-order central stencil: early transients of strongly squeezed
      // states are fast enough that the h^2 term of the 3-point rule alone
      // reaches the tolerance, which would say nothing about entropy_rate.
      const auto s_at = [&](std::size_t m) { return traj.samples[m].entropy.lin_entropy; };
      const double fd = (s_at(i - 2) - 8.0 * s_at(i - 1) + 8.0 * s_at(i + 1) - s_at(i + 2)) /
                        (12.0 * traj.step);
      const double rate = traj.samples[i].entropy.entropy_rate;
      worst = std::max(worst, std::abs(fd - rate) / std::abs(rate));
    }
  }
  return {worst <= 1e-5, fmt("max rel error=%.2e over 20 models x 50 samples", worst)};
}

Outcome heisenberg_preservation() {
  std::mt19937_64 rng(1006);
  double worst = 1e300;
  for (int k = 0; k < 100; ++k) {
    const ModelParams p = oracle::random_model(rng, k % 2 == 0);
    const GaussianState s0 = pure_state(rng, p.hbar);
    const double t_final = 10.0 / std::max(p.lambda, p.omega);
    const auto traj = evolve(s0, p, t_final, 1e-3);
    const double bound = 0.25 * p.hbar * p.hbar;
    for (const auto& s : traj.samples) worst = std::min(worst, s.state.sigma.det() / bound);
  }
  return {worst >= 1.0 - 1e-9, fmt("min det Sigma / (hbar^2/4) = 1 %+.2e", worst - 1.0)};
}

Outcome stationary_convergence() {
  std::mt19937_64 rng(1007);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  int models = 0;
  while (models < 20) {
    const ModelParams p = oracle::random_model(rng);
    if (p.lambda < 0.05 || !drift_stability(build_drift(p).Y).hurwitz) continue;
    ++models;
    const Generator gen = make_generator(p);
    const Mat2 target = stationary_covariance(gen.Y, gen.D);
    const GaussianState s0{{1.0, -1.0}, compose({1.0 + 3.0 * u(rng), std::exp(u(rng)),
                                                 kPi * u(rng)},
                                                p.hbar)};
    const double t_final = 30.0 / p.lambda;
    const auto traj = evolve(s0, gen, t_final, std::min(1e-2, 0.05 / p.omega), 1u << 30);
    worst = std::max(worst, (traj.samples.back().state.sigma - target).frobenius());
  }

  double iso_err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double delta = 0.1 + 2.0 * u(rng);
    const double lambda = 0.05 + (delta - 0.05) * u(rng);
    ModelParams p = model_with(rng, {delta, 1.0, 0.0}, lambda);
    p.mu = 0.0;
    const Generator gen = make_generator(p);
    const Mat2 want = (p.hbar * delta / (2.0 * lambda)) * Mat2::identity();
    iso_err = std::max(iso_err, relative_frobenius(stationary_covariance(gen.Y, gen.D), want));
  }
  return {worst <= 1e-8 && iso_err <= 1e-12,
          fmt("max ||Sigma(30/lambda) - Sigma_inf||_F=%.2e, isotropic rel error=%.2e", worst,
              iso_err)};
}

Outcome wigner_certification() {
  std::mt19937_64 rng(1008);
  std::normal_distribution<double> n(0.0, 0.6);
  const ModelParams model{1.0, 1.3, 0.1, 1.0, 0.7, 0.6, 0.05, 0.3};
  const GaussianState s0{{1.0, -0.5}, compose({1.0, 1.6, 0.8}, 1.0)};
  const double t_probe = 0.5;
  const double h = 2e-2;
  const auto coarse = evolve(s0, model, t_probe + h, h);
  const auto fine = evolve(s0, model, t_probe + h / 2, h / 2);
  const Vec2 centre = coarse.samples[coarse.samples.size() - 2].state.mean;
  double lo = 1e300, hi = 0.0;
  for (int k = 0; k < 20; ++k) {
    const PhasePoint p{centre.x1 + n(rng), centre.x2 + n(rng)};
    const double r1 = fp_residual(coarse, p, coarse.samples.size() - 2, h);
    const double r2 = fp_residual(fine, p, fine.samples.size() - 2, h / 2);
    lo = std::min(lo, r1 / r2);
    hi = std::max(hi, r1 / r2);
  }
  double norm_err = 0.0;
  for (const auto& s : coarse.samples)
    norm_err = std::max(norm_err, std::abs(wigner_normalization(s.state) - 1.0));
  return {lo >= 3.5 && hi <= 4.5 && norm_err <= 1e-8,
          fmt("residual ratio in [%.3f, %.3f], max |norm - 1|=%.2e", lo, hi, norm_err)};
}

Outcome decomposition_round_trip() {
  std::mt19937_64 rng(1009);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const Mat2 m = oracle::random_spd(rng, 1e6);
    const double hbar = u(rng);
    // Physical covariances only: scale so that det M >= hbar^2 / 4.
    const double det = m.det();
    const double boost = det < 0.25 * hbar * hbar ? 0.5 * hbar / std::sqrt(det) : 1.0;
    const Mat2 sigma = boost * m;
    const Mat2 back = compose(decompose(sigma, hbar), hbar);
    worst = std::max(worst, relative_frobenius(back, sigma));
  }
  return {worst <= 1e-12, fmt("max relative Frobenius error=%.2e", worst)};
}

Outcome purity_independence() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const GridSpec spec{401, 361, 0.5, 8.0};
  int mismatches = 0;
  for (int k = 0; k < 20; ++k) {
    const double delta = 0.1 + 2.0 * u(rng);
    const ModelParams p = model_with(rng, {delta, 1.0 + 4.0 * u(rng), kPi * u(rng)},
                                     delta * u(rng));
    const auto diff = decompose_diffusion(build_scaled_diffusion(p).D, p.hbar);
    const auto ref = grid_search(1.0, p.lambda, diff, spec);
    for (double a : {2.0, 10.0}) {
      const auto g = grid_search(a, p.lambda, diff, spec);
      if (g.i_aleph != ref.i_aleph || g.j_theta != ref.j_theta) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%g cell mismatches over 20 models x A in {1, 2, 10}",
                               static_cast<double>(mismatches))};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"sieve minimizer reproduction", sieve_minimizer},
      {"minimum-rate formula", minimum_rate_formula},
      {"pure-state bound", pure_state_bound},
      {"isotropic diffusion selects coherent states", isotropic_coherent},
      {"rate vs trajectory consistency", rate_trajectory_consistency},
      {"Heisenberg preservation", heisenberg_preservation},
      {"stationary convergence", stationary_convergence},
      {"Wigner / Fokker-Planck certification", wigner_certification},
      {"decomposition round trip", decomposition_round_trip},
      {"purity independence of the minimizer", purity_independence},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu. %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
