#include "gsieve/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsieve/error.hpp"

namespace gsieve {

namespace {

constexpr double kPi = std::numbers::pi;

struct Factorization {
  double scale;  // sqrt(det M)
  double aleph;
  double theta;
};

// M11 - M22 = (a - b) cos 2t and 2 M12 = -(a - b) sin 2t for a = largest
// eigenvalue, b = smallest, so 2t = atan2(-2 M12, M11 - M22).
Factorization factor(const Mat2& M) {
  const auto eig = sym_eigenvalues(M);
  const double scale = std::sqrt(eig.largest * eig.smallest);
  const double aleph_sq = std::sqrt(eig.largest / eig.smallest);
  if (!(aleph_sq - 1.0 >= kIsotropyThreshold)) return {scale, 1.0, 0.0};
  const double theta = wrap_half_turn(0.5 * std::atan2(-2.0 * M.a12, M.a11 - M.a22));
  return {scale, std::sqrt(aleph_sq), theta};
}

Mat2 congruence(double prefactor, double aleph, double theta) {
  const double a = aleph * aleph;
  const double b = 1.0 / a;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double m11 = a * c * c + b * s * s;
  const double m22 = a * s * s + b * c * c;
  const double m12 = (b - a) * s * c;
  return prefactor * Mat2::symmetric(m11, m12, m22);
}

bool is_symmetric(const Mat2& M) {
  return std::abs(M.a12 - M.a21) <= 1e-12 * std::max(M.frobenius(), 1e-300);
}

}  // namespace

double wrap_half_turn(double angle) {
  double r = std::fmod(angle, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;
  return r;
}

double half_turn_distance(double a, double b) {
  const double d = wrap_half_turn(a - b);
  return std::min(d, kPi - d);
}

CovDecomposition decompose(const Mat2& M, double hbar) {
  if (!is_symmetric(M)) throw Error(ErrorCode::NotSPD, "matrix is not symmetric");
  const auto eig = sym_eigenvalues(M);
  if (!(eig.smallest > 0.0)) throw Error(ErrorCode::NotSPD, "matrix is not positive definite");
  const auto f = factor(M);
  return {2.0 / hbar * f.scale, f.aleph, f.theta};
}

Mat2 compose(const CovDecomposition& dec, double hbar) {
  return congruence(0.5 * hbar * dec.area, dec.aleph, dec.theta);
}

DiffDecomposition decompose_diffusion(const Mat2& D, double hbar) {
  if (!is_symmetric(D)) throw Error(ErrorCode::SingularDiffusion, "diffusion matrix is not symmetric");
  const auto eig = sym_eigenvalues(D);
  if (!(eig.smallest > 0.0) || !(D.det() > 0.0))
    throw Error(ErrorCode::SingularDiffusion,
                "det D <= 0: anisotropy d is undefined for singular diffusion");
  const auto f = factor(D);
  return {2.0 / hbar * f.scale, f.aleph, f.theta};
}

Mat2 compose_diffusion(const DiffDecomposition& dec, double hbar) {
  return congruence(0.5 * hbar * dec.Delta, dec.d, dec.phi);
}

CovDecomposition canonicalize(CovDecomposition dec) {
  if (dec.aleph < 1.0) {
    dec.aleph = 1.0 / dec.aleph;
    dec.theta += 0.5 * kPi;
  }
  dec.theta = wrap_half_turn(dec.theta);
  return dec;
}

}  // namespace gsieve
