#include <cmath>

#include "chordal/eigen.hpp"
#include "chordal/errors.hpp"
#include "chordal/series.hpp"
#include "doctest.h"

using namespace chordal;

TEST_CASE("Laurent series arithmetic") {
  // (z + 1/z)^2 = z^2 + 2 + z^-2
  const LaurentSeries psi(1, {1.0, 0.0, 1.0, 0.0, 0.0, 0.0});
  const LaurentSeries sq = psi * psi;
  CHECK(sq.top() == 2);
  CHECK(sq.coeff(2) == 1.0);
  CHECK(sq.coeff(0) == 2.0);
  CHECK(sq.coeff(-2) == 1.0);
  CHECK(sq.coeff(1) == 0.0);
  CHECK(sq.coeff(5) == 0.0);
  CHECK(sq.order() == psi.order());
  CHECK_THROWS_AS(sq.coeff(sq.floor() - 1), DomainError);
  CHECK(psi.pow(3).coeff(-1) == 3.0);
  CHECK(psi.pow(0).coeff(0) == 1.0);

  // 1/(1 - 1/z) = sum z^-k
  const LaurentSeries inv = LaurentSeries(0, {1.0, -1.0, 0.0, 0.0, 0.0}).inverse();
  for (int k = 0; k <= 4; ++k) CHECK(inv.coeff(-k) == doctest::Approx(1.0));
  CHECK_THROWS_AS(LaurentSeries(0, {0.0, 1.0}).inverse(), DomainError);

  const LaurentSeries sum = psi + LaurentSeries::constant(3.0, 10);
  CHECK(sum.coeff(0) == 3.0);
  CHECK(sum.floor() == psi.floor());
  CHECK((psi * 2.0).coeff(-1) == 2.0);
  CHECK(psi.truncated(2).order() == 2);
  CHECK(LaurentSeries::monomial(-3, 4).coeff(-3) == 1.0);
}

TEST_CASE("symmetric eigenvalues") {
  auto eig = [](std::vector<std::vector<double>> rows) {
    return symmetric_eigenvalues(Matrix(rows));
  };
  const auto a = eig({{0, 0}, {0, 2}});
  CHECK(a[0] == doctest::Approx(0.0));
  CHECK(a[1] == doctest::Approx(2.0));
  for (double v : symmetric_eigenvalues(Matrix::identity(3))) CHECK(v == 1.0);
  const auto r = eig({{0, 1}, {1, 0}});
  CHECK(r[0] == doctest::Approx(-1.0));
  CHECK(r[1] == doctest::Approx(1.0));
  // Tridiagonal Toeplitz 2,-1: eigenvalues 2 - 2 cos(k pi / (n + 1)).
  const int n = 12;
  Matrix t(n, n);
  for (int i = 0; i < n; ++i) {
    t(i, i) = 2.0;
    if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = -1.0;
  }
  const auto ev = symmetric_eigenvalues(t);
  for (int k = 1; k <= n; ++k) {
    CHECK(ev[k - 1] == doctest::Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-13));
  }
  CHECK_THROWS_AS(symmetric_eigenvalues(Matrix(2, 3)), DomainError);
  CHECK_THROWS_AS(eig({{0, 1}, {0, 0}}), DomainError);
}
