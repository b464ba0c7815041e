#pragma once

// Scale / squeezing / rotation factorization of 2x2 symmetric positive
// matrices:  M = (hbar * A / 2) O^T diag(aleph^2, aleph^-2) O,
// O = [[cos t, -sin t], [sin t, cos t]].
//
// Branch convention: aleph >= 1, theta in [0, pi), theta = 0 when aleph = 1.

#include "gsieve/linalg.hpp"

namespace gsieve {

struct CovDecomposition {
  double area = 1.0;
  double aleph = 1.0;
  double theta = 0.0;
};

struct DiffDecomposition {
  double Delta = 0.0;
  double d = 1.0;
  double phi = 0.0;
};

/// aleph^2 - 1 below this is reported as exactly isotropic.
inline constexpr double kIsotropyThreshold = 1e-12;

CovDecomposition decompose(const Mat2& M, double hbar);
Mat2 compose(const CovDecomposition& dec, double hbar);

DiffDecomposition decompose_diffusion(const Mat2& D, double hbar);
Mat2 compose_diffusion(const DiffDecomposition& dec, double hbar);

/// Maps any (aleph > 0, theta) onto the canonical branch describing the same
/// matrix: aleph < 1 becomes (1/aleph, theta + pi/2), theta reduced mod pi.
CovDecomposition canonicalize(CovDecomposition dec);

/// Reduces an angle to [0, pi).
double wrap_half_turn(double angle);

/// Distance between two angles on the circle of period pi.
double half_turn_distance(double a, double b);

}  // namespace gsieve
