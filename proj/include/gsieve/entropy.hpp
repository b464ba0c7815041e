#pragma once

// Purity diagnostics for Gaussian states: phase-space area
// A = (2/hbar) sqrt(det Sigma), linear entropy s = 1 - 1/A and their rates
//   dA/dt = A (Tr Y + Tr(D Sigma^-1)),   ds/dt = (dA/dt) / A^2.

#include "gsieve/linalg.hpp"

namespace gsieve {

struct EntropyReport {
  double area = 1.0;
  double lin_entropy = 0.0;
  double area_rate = 0.0;
  double entropy_rate = 0.0;
};

/// Areas down to 1 - kPurityTolerance are accepted as pure.
inline constexpr double kPurityTolerance = 1e-9;

double area(const Mat2& sigma, double hbar);
double linear_entropy(const Mat2& sigma, double hbar);
/// Same clamp and UnphysicalState rule, applied to a precomputed area.
double linear_entropy_from_area(double area);

double area_rate(const Mat2& sigma, const Mat2& Y, const Mat2& D, double hbar);
double entropy_rate(const Mat2& sigma, const Mat2& Y, const Mat2& D, double hbar);

/// ds/dt at t = 0: (1/A)[-2 lambda + Tr(Sigma0^-1 D)]. Only Tr Y = -2 lambda
/// enters, so it agrees with entropy_rate for any drift of that trace.
double initial_rate(const Mat2& sigma0, const Mat2& D, double lambda, double hbar);

EntropyReport entropy_report(const Mat2& sigma, const Mat2& Y, const Mat2& D, double hbar);

}  // namespace gsieve
