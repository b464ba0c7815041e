#include "gsieve/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gsieve/error.hpp"
#include "gsieve/kernels.hpp"

namespace gsieve {

namespace {

constexpr double kPi = std::numbers::pi;

double log_step(const std::vector<double>& alephs) {
  if (alephs.size() < 2) return 0.0;
  return std::log(alephs.back() / alephs.front()) / static_cast<double>(alephs.size() - 1);
}

double theta_step(const std::vector<double>& thetas) {
  return thetas.size() < 2 ? 0.0 : kPi / static_cast<double>(thetas.size());
}

/// True when a row of the rate table does not depend on theta beyond rounding.
bool row_is_flat(const std::vector<double>& rates, std::size_t row, std::size_t nt) {
  const auto first = rates.begin() + static_cast<std::ptrdiff_t>(row * nt);
  const auto [lo, hi] = std::minmax_element(first, first + static_cast<std::ptrdiff_t>(nt));
  return nt < 2 || *hi - *lo <= 1e-13 * std::max(std::abs(*lo), std::abs(*hi));
}

}  // namespace

double rate_at(double aleph, double theta, double area, double lambda,
               const DiffDecomposition& diff) {
  const double c = std::cos(theta - diff.phi);
  const double s = std::sin(theta - diff.phi);
  const double a2 = aleph * aleph;
  const double d2 = diff.d * diff.d;
  const double aligned = a2 / d2 + d2 / a2;
  const double crossed = a2 * d2 + 1.0 / (a2 * d2);
  const double bracket = c * c * aligned + s * s * crossed;
  return (-2.0 * lambda + diff.Delta / area * bracket) / area;
}

AnalyticSieve analytic_minimizer(double area, double lambda, const DiffDecomposition& diff) {
  AnalyticSieve out;
  out.aleph_star = diff.d;
  out.degenerate_angle = diff.d == 1.0;
  out.theta_star = out.degenerate_angle ? 0.0 : wrap_half_turn(diff.phi);
  out.min_rate = 2.0 * (diff.Delta - area * lambda) / (area * area);
  return out;
}

GridAxes make_axes(const GridSpec& spec) {
  if (spec.n_aleph < 3 || spec.n_theta < 3)
    throw Error(ErrorCode::InvalidArgument, "grid needs at least 3 points per axis");
  if (!(spec.aleph_lo > 0.0) || !(spec.aleph_hi > spec.aleph_lo) || !std::isfinite(spec.aleph_hi))
    throw Error(ErrorCode::InvalidArgument, "aleph range must satisfy 0 < lo < hi");

  GridAxes axes;
  axes.alephs.resize(spec.n_aleph);
  const double span = std::log(spec.aleph_hi / spec.aleph_lo);
  const double last = static_cast<double>(spec.n_aleph - 1);
  for (std::size_t i = 0; i < spec.n_aleph; ++i)
    axes.alephs[i] = spec.aleph_lo * std::exp(span * static_cast<double>(i) / last);
  axes.alephs.back() = spec.aleph_hi;

  axes.thetas.resize(spec.n_theta);
  for (std::size_t j = 0; j < spec.n_theta; ++j)
    axes.thetas[j] = kPi * static_cast<double>(j) / static_cast<double>(spec.n_theta);
  return axes;
}

GridMinimum grid_search(double area, double lambda, const DiffDecomposition& diff,
                        const GridAxes& axes) {
  if (axes.alephs.empty() || axes.thetas.empty())
    throw Error(ErrorCode::InvalidArgument, "empty grid");
  const std::size_t nt = axes.thetas.size();
  std::vector<double> rates(axes.alephs.size() * nt);
  kernels::rate_grid_omp({area, lambda, diff, axes.alephs, axes.thetas}, rates);

  const std::size_t k = kernels::argmin(rates);
  GridMinimum g;
  g.i_aleph = k / nt;
  g.j_theta = k % nt;
  g.aleph = axes.alephs[g.i_aleph];
  g.theta = axes.thetas[g.j_theta];
  g.rate = rates[k];
  g.canonical = canonicalize({area, g.aleph, g.theta});
  g.aleph_log_step = log_step(axes.alephs);
  g.theta_step = theta_step(axes.thetas);

  // On the aleph = 1 node every orientation ties, so the winning column is an
  // artefact of the tie-break. Take the orientation from the better of the
  // adjacent rows instead, which is where the ellipse actually points.
  if (row_is_flat(rates, g.i_aleph, nt)) {
    std::size_t best_row = g.i_aleph;
    std::size_t best = k;
    for (std::size_t nb : {g.i_aleph + 1, g.i_aleph - 1}) {
      if (nb >= axes.alephs.size() || row_is_flat(rates, nb, nt)) continue;
      const auto first = rates.begin() + static_cast<std::ptrdiff_t>(nb * nt);
      const std::size_t j = static_cast<std::size_t>(
          std::min_element(first, first + static_cast<std::ptrdiff_t>(nt)) - first);
      if (best_row == g.i_aleph || rates[nb * nt + j] < rates[best]) {
        best_row = nb;
        best = nb * nt + j;
      }
    }
    if (best_row != g.i_aleph) {
      const auto oriented = canonicalize({area, axes.alephs[best_row], axes.thetas[best % nt]});
      g.canonical.theta = oriented.theta;
      g.j_theta = best % nt;
      g.theta = axes.thetas[g.j_theta];
      g.rate = rates[g.i_aleph * nt + g.j_theta];
    }
  }
  return g;
}

GridMinimum grid_search(double area, double lambda, const DiffDecomposition& diff,
                        const GridSpec& spec) {
  return grid_search(area, lambda, diff, make_axes(spec));
}

RefinedMinimum refine_minimum(double area, double lambda, const DiffDecomposition& diff,
                              const GridMinimum& start, int levels, std::size_t n, double shrink) {
  RefinedMinimum best{start.canonical.aleph, start.canonical.theta, start.rate, 0};
  if (n < 3) n = 3;
  // Work in (ln aleph cos 2 theta, ln aleph sin 2 theta): smooth through the
  // coherent point aleph = 1, where theta is undefined.
  const double radius = std::log(best.aleph);
  double half = std::max(start.aleph_log_step, 2.0 * radius * start.theta_step);
  if (half == 0.0) return best;
  double cu = radius * std::cos(2.0 * best.theta);
  double cv = radius * std::sin(2.0 * best.theta);

  for (int level = 0; level < levels; ++level) {
    double next_u = cu;
    double next_v = cv;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = cu + half * (-1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1));
      for (std::size_t j = 0; j < n; ++j) {
        const double v =
            cv + half * (-1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(n - 1));
        const double aleph = std::exp(std::hypot(u, v));
        const double theta = 0.5 * std::atan2(v, u);
        const double rate = rate_at(aleph, theta, area, lambda, diff);
        if (rate < best.rate) {
          best = {aleph, theta, rate, level + 1};
          next_u = u;
          next_v = v;
        }
      }
    }
    cu = next_u;
    cv = next_v;
    best.levels = level + 1;
    half *= shrink;
  }
  return best;
}

SieveResult run_sieve(double area, double lambda, const DiffDecomposition& diff,
                      const GridSpec& spec, int refine_levels) {
  SieveResult r;
  r.analytic = analytic_minimizer(area, lambda, diff);
  r.grid_spec = spec;
  if (!(spec.aleph_lo < diff.d && diff.d < spec.aleph_hi))
    throw Error(ErrorCode::BracketError, "d = " + std::to_string(diff.d) +
                                             " is outside the aleph grid range");
  r.grid = grid_search(area, lambda, diff, spec);
  r.refined = refine_minimum(area, lambda, diff, r.grid, refine_levels);
  const auto refined = canonicalize({area, r.refined.aleph, r.refined.theta});
  r.refined.aleph = refined.aleph;
  r.refined.theta = refined.theta;

  r.delta_aleph = std::abs(r.grid.canonical.aleph - r.analytic.aleph_star);
  r.delta_theta = r.analytic.degenerate_angle
                      ? 0.0
                      : half_turn_distance(r.grid.canonical.theta, r.analytic.theta_star);
  r.delta_rate = r.refined.rate - r.analytic.min_rate;
  return r;
}

std::vector<LandscapeRow> rate_landscape(double area, double lambda, const DiffDecomposition& diff,
                                         const GridAxes& axes) {
  std::vector<double> rates(axes.alephs.size() * axes.thetas.size());
  kernels::rate_grid_omp({area, lambda, diff, axes.alephs, axes.thetas}, rates);
  std::vector<LandscapeRow> rows;
  rows.reserve(rates.size());
  for (std::size_t i = 0; i < axes.alephs.size(); ++i)
    for (std::size_t j = 0; j < axes.thetas.size(); ++j)
      rows.push_back({axes.alephs[i], axes.thetas[j], rates[i * axes.thetas.size() + j]});
  return rows;
}

}  // namespace gsieve
