#include "gsieve/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "gsieve/error.hpp"

namespace gsieve {

namespace {

Mat2 checked_inverse(const Mat2& sigma) {
  const double det = sigma.det();
  if (!(std::abs(det) > 0.0) || !std::isfinite(det))
    throw Error(ErrorCode::SingularSigma, "Sigma is not invertible");
  return sigma.inverse();
}

// Tr(A B) without forming the product.
double trace_of_product(const Mat2& a, const Mat2& b) {
  return a.a11 * b.a11 + a.a12 * b.a21 + a.a21 * b.a12 + a.a22 * b.a22;
}

}  // namespace

double area(const Mat2& sigma, double hbar) {
  const double det = sigma.det();
  if (!(det > 0.0))
    throw Error(ErrorCode::NonPositiveDeterminant, "det Sigma must be positive");
  return 2.0 / hbar * std::sqrt(det);
}

double linear_entropy_from_area(double a) {
  if (!(a >= 1.0 - kPurityTolerance))
    throw Error(ErrorCode::UnphysicalState, "phase-space area below 1 (Heisenberg violated)");
  return std::max(0.0, 1.0 - 1.0 / a);
}

double linear_entropy(const Mat2& sigma, double hbar) {
  return linear_entropy_from_area(area(sigma, hbar));
}

double area_rate(const Mat2& sigma, const Mat2& Y, const Mat2& D, double hbar) {
  const Mat2 inv = checked_inverse(sigma);
  return area(sigma, hbar) * (Y.trace() + trace_of_product(D, inv));
}

double entropy_rate(const Mat2& sigma, const Mat2& Y, const Mat2& D, double hbar) {
  const double a = area(sigma, hbar);
  return area_rate(sigma, Y, D, hbar) / (a * a);
}

double initial_rate(const Mat2& sigma0, const Mat2& D, double lambda, double hbar) {
  const Mat2 inv = checked_inverse(sigma0);
  return (-2.0 * lambda + trace_of_product(inv, D)) / area(sigma0, hbar);
}

EntropyReport entropy_report(const Mat2& sigma, const Mat2& Y, const Mat2& D, double hbar) {
  EntropyReport r;
  r.area = area(sigma, hbar);
  r.lin_entropy = linear_entropy_from_area(r.area);
  r.area_rate = r.area * (Y.trace() + trace_of_product(D, checked_inverse(sigma)));
  r.entropy_rate = r.area_rate / (r.area * r.area);
  return r;
}

}  // namespace gsieve
