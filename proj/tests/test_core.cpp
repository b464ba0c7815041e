#include "doctest.h"
#include "oracles.hpp"

#include "gsieve/core.hpp"

using namespace gsieve;
using std::complex;

namespace {
constexpr complex<double> I{0.0, 1.0};
}

TEST_CASE("derive_coefficients: single minimally dissipative coupling") {
  const LindbladCouplings c{{{1.0, -I}, {0.0, 0.0}}};
  const auto d = derive_coefficients(c, 1.0);
  CHECK(d.D_qq == doctest::Approx(0.5));
  CHECK(d.D_pp == doctest::Approx(0.5));
  CHECK(d.D_pq == doctest::Approx(0.0));
  CHECK(d.lambda == doctest::Approx(1.0));
}

TEST_CASE("derive_coefficients: zero couplings") {
  const auto d = derive_coefficients(LindbladCouplings{}, 1.0);
  CHECK(d.D_qq == 0.0);
  CHECK(d.D_pp == 0.0);
  CHECK(d.D_pq == 0.0);
  CHECK(d.lambda == 0.0);
}

TEST_CASE("derive_coefficients: real couplings on separate channels, hbar = 2") {
  const LindbladCouplings c{{{0.0, 1.0}, {1.0, 0.0}}};
  const auto d = derive_coefficients(c, 2.0);
  CHECK(d.D_qq == doctest::Approx(1.0));
  CHECK(d.D_pp == doctest::Approx(1.0));
  CHECK(d.D_pq == doctest::Approx(0.0));
  CHECK(d.lambda == doctest::Approx(0.0));
}

TEST_CASE("derived coefficients always satisfy the positivity constraint") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int k = 0; k < 2000; ++k) {
    const auto c = oracle::random_couplings(rng, false);
    const double hbar = u(rng);
    const auto d = derive_coefficients(c, hbar);
    const double slack = d.D_pp * d.D_qq - d.D_pq * d.D_pq - 0.25 * d.lambda * d.lambda * hbar * hbar;
    REQUIRE(slack >= -1e-12);
  }
}

TEST_CASE("validate: examples") {
  SUBCASE("lambda = 0 passes with slack 1") {
    const auto r = validate({1, 1, 0, 1, 1.0, 1.0, 0.0, 0.0});
    CHECK(r.passed());
    CHECK(r.slack == doctest::Approx(1.0));
  }
  SUBCASE("equality case passes with slack 0") {
    const auto r = validate({1, 1, 0, 1, 0.5, 0.5, 0.0, 1.0});
    CHECK(r.passed());
    CHECK(r.positivity_constraint);
    CHECK(std::abs(r.slack) <= 1e-15);
  }
  SUBCASE("weak diffusion fails with slack -0.24") {
    const auto r = validate({1, 1, 0, 1, 0.1, 0.1, 0.0, 1.0});
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.positivity_constraint);
    CHECK(r.slack == doctest::Approx(-0.24));
  }
}

TEST_CASE("validate: rounding at the equality case is tolerated") {
  ModelParams p{1, 1, 0, 1, 0.5, 0.5, 0.0, 1.0};
  p.D_pp = 0.5 * (1.0 - 1e-14);
  CHECK(validate(p).passed());
}

TEST_CASE("validate: negative lambda is a warning, negative diffusion an error") {
  ModelParams p{1, 1, 0, 1, 1.0, 1.0, 0.0, -0.5};
  auto r = validate(p);
  CHECK(r.passed());
  CHECK(r.anti_damped);
  CHECK_FALSE(r.warnings.empty());

  p.D_qq = -0.1;
  r = validate(p);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.D_qq_nonnegative);
}

TEST_CASE("validate: drift stability is reported") {
  ModelParams p{1, 1, 0, 1, 1.0, 1.0, 0.0, 0.5};
  CHECK(validate(p).stability.hurwitz);
  CHECK(validate(p).stability.oscillatory);
  p.lambda = 0.0;
  CHECK_FALSE(validate(p).stability.hurwitz);
  p = {1, 1, 3.0, 1, 1.0, 1.0, 0.0, 0.5};  // real eigenvalues -0.5 +/- sqrt(8)
  const auto s = validate(p).stability;
  CHECK_FALSE(s.oscillatory);
  CHECK_FALSE(s.hurwitz);
  CHECK(s.re_max == doctest::Approx(-0.5 + std::sqrt(8.0)));
}

TEST_CASE("build_drift: examples") {
  CHECK(build_drift({1, 1, 0, 1, 0, 0, 0, 0}).Y == Mat2{0, 1, -1, 0});
  CHECK(build_drift({1, 2, 0, 1, 0, 0, 0, 1}).Y == Mat2{-1, 2, -2, -1});
  CHECK(build_drift({1, 1, 1, 1, 0, 0, 0, 1}).Y == Mat2{0, 1, -1, -2});
}

TEST_CASE("build_drift: trace is -2 lambda") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const auto p = oracle::random_model(rng, false);
    const double tr = build_drift(p).Y.trace();
    const double ulp = 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max({std::abs(p.lambda), std::abs(p.mu), 1e-300});
    REQUIRE(std::abs(tr + 2.0 * p.lambda) <= ulp);
  }
}

TEST_CASE("build_scaled_diffusion: examples") {
  CHECK(build_scaled_diffusion({1, 1, 0, 1, 0.5, 0.5, 0.0, 0}).D == Mat2::diag(0.5, 0.5));
  const Mat2 d = build_scaled_diffusion({2, 3, 0, 1, 1.0, 6.0, 0.2, 0}).D;
  CHECK(d.a11 == doctest::Approx(6.0));
  CHECK(d.a12 == doctest::Approx(0.2));
  CHECK(d.a21 == doctest::Approx(0.2));
  CHECK(d.a22 == doctest::Approx(1.0));
  CHECK(build_scaled_diffusion({1, 1, 0, 1, 0, 0, 0, 0}).D == Mat2{});
}

TEST_CASE("build_scaled_diffusion: determinant is scale invariant") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    const auto p = oracle::random_model(rng, false);
    const double want = p.D_pp * p.D_qq - p.D_pq * p.D_pq;
    REQUIRE(oracle::rel_err(build_scaled_diffusion(p).D.det(), want) <= 1e-12);
  }
}

TEST_CASE("set_from_scaled_diffusion inverts the scaling") {
  ModelParams p{2, 3, 0, 1, 1.0, 6.0, 0.2, 0};
  ModelParams q = p;
  set_from_scaled_diffusion(q, build_scaled_diffusion(p).D);
  CHECK(q.D_qq == doctest::Approx(p.D_qq));
  CHECK(q.D_pp == doctest::Approx(p.D_pp));
  CHECK(q.D_pq == doctest::Approx(p.D_pq));
}
