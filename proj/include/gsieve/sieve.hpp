#pragma once

// Predictability sieve: initial entropy production rate as a function of the
// initial squeezing aleph and orientation theta at fixed area A,
//
//   ds/dt|0 = (1/A) { -2 lambda + (Delta/A) [ cos^2(theta - phi)(aleph^2 d^-2 + aleph^-2 d^2)
//                                           + sin^2(theta - phi)(aleph^2 d^2 + aleph^-2 d^-2) ] },
//
// its closed-form minimizer (aleph* = d, theta* = phi) and a brute-force
// grid oracle that knows nothing about the closed form.

#include <cstddef>
#include <vector>

#include "gsieve/decomposition.hpp"

namespace gsieve {

double rate_at(double aleph, double theta, double area, double lambda,
               const DiffDecomposition& diff);

struct AnalyticSieve {
  double aleph_star = 1.0;
  double theta_star = 0.0;
  double min_rate = 0.0;
  bool degenerate_angle = false;  ///< d = 1: every orientation is optimal
};

/// aleph* = d, theta* = phi, min rate 2 (Delta - A lambda) / A^2.
AnalyticSieve analytic_minimizer(double area, double lambda, const DiffDecomposition& diff);

/// Log-spaced aleph axis (endpoints included) times uniform theta axis on [0, pi).
struct GridSpec {
  std::size_t n_aleph = 401;
  std::size_t n_theta = 361;
  double aleph_lo = 0.5;
  double aleph_hi = 8.0;
};

struct GridAxes {
  std::vector<double> alephs;
  std::vector<double> thetas;
};

/// Throws InvalidArgument for n < 3 or a range that is not 0 < lo < hi.
GridAxes make_axes(const GridSpec& spec);

struct GridMinimum {
  std::size_t i_aleph = 0;  ///< raw grid cell of the argmin
  std::size_t j_theta = 0;
  double aleph = 1.0;  ///< grid values at that cell
  double theta = 0.0;
  double rate = 0.0;
  CovDecomposition canonical;  ///< (aleph, theta) on the aleph >= 1 branch
  double aleph_log_step = 0.0;  ///< spacing of ln(aleph); 0 for a single point
  double theta_step = 0.0;
};

/// Exhaustive evaluation of rate_at over the axes; argmin with lowest-index
/// tie-break. If the winning row is the theta-independent aleph = 1 node, the
/// orientation is taken from the better adjacent row. Evaluation runs in
/// parallel; the result does not depend on it.
GridMinimum grid_search(double area, double lambda, const DiffDecomposition& diff,
                        const GridAxes& axes);
GridMinimum grid_search(double area, double lambda, const DiffDecomposition& diff,
                        const GridSpec& spec);

struct RefinedMinimum {
  double aleph = 1.0;
  double theta = 0.0;
  double rate = 0.0;
  int levels = 0;
};

/// Brute-force polish: repeated exhaustive n x n sub-grids in the coordinates
/// (ln aleph cos 2theta, ln aleph sin 2theta), centred on the current argmin and
/// shrinking by `shrink` each level. Uses only rate_at evaluations.
RefinedMinimum refine_minimum(double area, double lambda, const DiffDecomposition& diff,
                              const GridMinimum& start, int levels = 12, std::size_t n = 21,
                              double shrink = 0.25);

struct SieveResult {
  AnalyticSieve analytic;
  GridSpec grid_spec;
  GridMinimum grid;
  RefinedMinimum refined;
  double delta_aleph = 0.0;  ///< |canonical grid aleph - aleph*|
  double delta_theta = 0.0;  ///< half-turn distance, 0 when the angle is degenerate
  double delta_rate = 0.0;   ///< refined rate - analytic min
};

/// Analytic minimizer plus grid oracle. Throws BracketError when d lies
/// outside (aleph_lo, aleph_hi).
SieveResult run_sieve(double area, double lambda, const DiffDecomposition& diff,
                      const GridSpec& spec, int refine_levels = 12);

struct LandscapeRow {
  double aleph;
  double theta;
  double rate;
};

/// Full grid dump, aleph outer, theta inner.
std::vector<LandscapeRow> rate_landscape(double area, double lambda, const DiffDecomposition& diff,
                                         const GridAxes& axes);

}  // namespace gsieve
