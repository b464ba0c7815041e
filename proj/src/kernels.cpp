#include "gsieve/kernels.hpp"

#include <cstdint>
#include <vector>

#include "gsieve/dynamics.hpp"
#include "gsieve/error.hpp"
#include "gsieve/sieve.hpp"
#include "gsieve/wigner.hpp"

namespace gsieve::kernels {

namespace {

void check_size(std::size_t got, std::size_t want) {
  if (got != want) throw Error(ErrorCode::InvalidArgument, "output span has the wrong size");
}

double weight(std::size_t i, std::size_t n) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }

double moment_factor(Moment m, double x1, double x2) {
  switch (m) {
    case Moment::Zeroth: return 1.0;
    case Moment::X1: return x1;
    case Moment::X2: return x2;
    case Moment::X1X1: return x1 * x1;
    case Moment::X1X2: return x1 * x2;
    case Moment::X2X2: return x2 * x2;
  }
  return 1.0;
}

double row_sum(std::span<const double> values, std::span<const double> x1s,
               std::span<const double> x2s, Moment moment, std::size_t i) {
  const std::size_t n2 = x2s.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < n2; ++j)
    acc += weight(j, n2) * moment_factor(moment, x1s[i], x2s[j]) * values[i * n2 + j];
  return weight(i, x1s.size()) * acc;
}

double cell_area(std::span<const double> x1s, std::span<const double> x2s) {
  if (x1s.size() < 2 || x2s.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "quadrature needs at least 2 nodes per axis");
  const double h1 = (x1s.back() - x1s.front()) / static_cast<double>(x1s.size() - 1);
  const double h2 = (x2s.back() - x2s.front()) / static_cast<double>(x2s.size() - 1);
  return h1 * h2;
}

}  // namespace

void rate_grid_serial(const RateGrid& g, std::span<double> out) {
  const std::size_t nt = g.thetas.size();
  check_size(out.size(), g.alephs.size() * nt);
  for (std::size_t i = 0; i < g.alephs.size(); ++i)
    for (std::size_t j = 0; j < nt; ++j)
      out[i * nt + j] = rate_at(g.alephs[i], g.thetas[j], g.area, g.lambda, g.diff);
}

void rate_grid_omp(const RateGrid& g, std::span<double> out) {
  const std::size_t nt = g.thetas.size();
  check_size(out.size(), g.alephs.size() * nt);
  const auto na = static_cast<std::int64_t>(g.alephs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nt; ++j)
      out[static_cast<std::size_t>(i) * nt + j] =
          rate_at(g.alephs[static_cast<std::size_t>(i)], g.thetas[j], g.area, g.lambda, g.diff);
}

void wigner_grid_serial(const GaussianState& state, std::span<const double> x1s,
                        std::span<const double> x2s, std::span<double> out) {
  check_size(out.size(), x1s.size() * x2s.size());
  const WignerDensity f(state);
  const std::size_t n2 = x2s.size();
  for (std::size_t i = 0; i < x1s.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j) out[i * n2 + j] = f(x1s[i], x2s[j]);
}

void wigner_grid_omp(const GaussianState& state, std::span<const double> x1s,
                     std::span<const double> x2s, std::span<double> out) {
  check_size(out.size(), x1s.size() * x2s.size());
  const WignerDensity f(state);
  const std::size_t n2 = x2s.size();
  const auto n1 = static_cast<std::int64_t>(x1s.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n1; ++i) {
    const auto row = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < n2; ++j) out[row * n2 + j] = f(x1s[row], x2s[j]);
  }
}

double trapezoid_serial(std::span<const double> values, std::span<const double> x1s,
                        std::span<const double> x2s, Moment moment) {
  check_size(values.size(), x1s.size() * x2s.size());
  const double h = cell_area(x1s, x2s);
  double total = 0.0;
  for (std::size_t i = 0; i < x1s.size(); ++i) total += row_sum(values, x1s, x2s, moment, i);
  return total * h;
}

double trapezoid_omp(std::span<const double> values, std::span<const double> x1s,
                     std::span<const double> x2s, Moment moment) {
  check_size(values.size(), x1s.size() * x2s.size());
  const double h = cell_area(x1s, x2s);
  std::vector<double> rows(x1s.size());
  const auto n1 = static_cast<std::int64_t>(x1s.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n1; ++i)
    rows[static_cast<std::size_t>(i)] =
        row_sum(values, x1s, x2s, moment, static_cast<std::size_t>(i));
  double total = 0.0;
  for (double r : rows) total += r;
  return total * h;
}

std::size_t argmin(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] < values[best]) best = k;
  return best;
}

}  // namespace gsieve::kernels
