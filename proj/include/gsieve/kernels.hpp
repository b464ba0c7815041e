#pragma once

// Data-parallel grid kernels. Every kernel has an OpenMP variant used by the
// library and a serial reference kept for tests and benchmarks; both write
// identical values to identical slots.

#include <cstddef>
#include <span>

#include "gsieve/decomposition.hpp"
#include "gsieve/linalg.hpp"

namespace gsieve {
struct GaussianState;
}

namespace gsieve::kernels {

struct RateGrid {
  double area;
  double lambda;
  DiffDecomposition diff;
  std::span<const double> alephs;
  std::span<const double> thetas;
};

/// out[i * thetas.size() + j] = rate_at(alephs[i], thetas[j], ...).
void rate_grid_serial(const RateGrid& grid, std::span<double> out);
void rate_grid_omp(const RateGrid& grid, std::span<double> out);

/// out[i * x2s.size() + j] = wigner density at (x1s[i], x2s[j]).
void wigner_grid_serial(const GaussianState& state, std::span<const double> x1s,
                        std::span<const double> x2s, std::span<double> out);
void wigner_grid_omp(const GaussianState& state, std::span<const double> x1s,
                     std::span<const double> x2s, std::span<double> out);

/// Weighted tensor-product trapezoid sum of a row-major n1 x n2 table:
/// sum_ij w_i w_j g(x1_i, x2_j) values[i, j] h1 h2, where g is 1, x1, x2,
/// x1^2, x1 x2 or x2^2 according to `moment`. Row partial sums are combined
/// in row order, so the omp variant is bitwise reproducible.
enum class Moment { Zeroth, X1, X2, X1X1, X1X2, X2X2 };

double trapezoid_serial(std::span<const double> values, std::span<const double> x1s,
                        std::span<const double> x2s, Moment moment = Moment::Zeroth);
double trapezoid_omp(std::span<const double> values, std::span<const double> x1s,
                     std::span<const double> x2s, Moment moment = Moment::Zeroth);

/// Index of the smallest value, lowest index on ties.
std::size_t argmin(std::span<const double> values);

}  // namespace gsieve::kernels
