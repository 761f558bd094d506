#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include <doctest.h>

#include "indca/errors.hpp"
#include "indca/spectral.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace indca;

namespace {

Matrix mat2(double a, double b, double c, double d) {
  Matrix M(2, 2);
  M << a, b, c, d;
  return M;
}

}  // namespace

TEST_CASE("jacobi on the reference matrix diag(2,-2)") {
  const SpectralBounds sb = jacobi_extreme_eigenvalues(mat2(2, 0, 0, -2));
  CHECK(sb.lambda_min == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(sb.lambda_max == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("jacobi on the identity") {
  const SpectralBounds sb =
      jacobi_extreme_eigenvalues(Matrix::Identity(5, 5));
  CHECK(sb.lambda_min == doctest::Approx(1.0));
  CHECK(sb.lambda_max == doctest::Approx(1.0));
}

TEST_CASE("jacobi on the 2x2 exchange matrix") {
  const SpectralBounds sb = jacobi_extreme_eigenvalues(mat2(0, 1, 1, 0));
  CHECK(sb.lambda_min == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sb.lambda_max == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gershgorin examples") {
  SpectralBounds sb = gershgorin_bounds(mat2(2, 0, 0, -2));
  CHECK(sb.lambda_min == -2.0);
  CHECK(sb.lambda_max == 2.0);

  sb = gershgorin_bounds(mat2(0, 1, 1, 0));
  CHECK(sb.lambda_min == -1.0);
  CHECK(sb.lambda_max == 1.0);

  Matrix one(1, 1);
  one << 1;
  sb = gershgorin_bounds(one);
  CHECK(sb.lambda_min == 1.0);
  CHECK(sb.lambda_max == 1.0);
}

TEST_CASE("non-symmetric input is rejected") {
  CHECK_THROWS_AS(jacobi_extreme_eigenvalues(mat2(0, 1, 0, 0)), NonSymmetric);
  CHECK_THROWS_AS(gershgorin_bounds(mat2(0, 1, 0, 0)), NonSymmetric);
}

TEST_CASE("gershgorin interval contains the jacobi interval") {
  testing::Rng rng(7);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = dim(rng);
    Matrix M(n, n);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) M(i, j) = M(j, i) = u(rng);
    }
    const SpectralBounds j = jacobi_extreme_eigenvalues(M);
    const SpectralBounds g = gershgorin_bounds(M);
    CHECK(g.lambda_min <= j.lambda_min + 1e-10);
    CHECK(g.lambda_max >= j.lambda_max - 1e-10);
  }
}

TEST_CASE("jacobi matches the characteristic-polynomial oracle for n <= 3") {
  testing::Rng rng(11);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = dim(rng);
    Matrix M(n, n);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) M(i, j) = M(j, i) = u(rng);
    }
    const std::vector<double> jac = jacobi_eigenvalues(M);
    const std::vector<double> ora = testing::charpoly_eigenvalues(M);
    REQUIRE(jac.size() == ora.size());
    for (size_t k = 0; k < jac.size(); ++k) {
      CHECK(std::abs(jac[k] - ora[k]) <= 1e-8);
    }
  }
}
