#include <cmath>
#include <vector>

#include "chordal/errors.hpp"
#include "chordal/numerics.hpp"
#include "doctest.h"

using namespace chordal;

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  for (int n : {1, 2, 5, 16, 64}) {
    const QuadratureRule r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    for (int p = 0; p < 2 * n; ++p) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += r.weights[k] * std::pow(r.nodes[k], p);
      const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("limit_at_infinity removes 1/y and 1/y^2 terms") {
  const LimitEstimate est = limit_at_infinity(
      [](double y) { return cplx{3.0 + 2.0 / y - 5.0 / (y * y), 1.0 / y}; });
  CHECK(std::abs(est.value - cplx{3.0, 0.0}) < 1e-12);
  CHECK(est.error < 1e-10);
}

TEST_CASE("extrapolate_to_zero is exact on polynomial data") {
  const std::vector<double> xs{0.1, 0.05, 0.025, 0.0125};
  std::vector<double> vs;
  for (double x : xs) vs.push_back(2.0 - x + 4.0 * x * x);
  const LimitEstimate est = extrapolate_to_zero(xs, vs);
  CHECK(est.value.real() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(est.error < 1e-12);
}

TEST_CASE("adaptive_simpson handles a narrow peak") {
  const double eps = 1e-3;
  const double v = adaptive_simpson<double>(
      [&](double x) { return eps / (x * x + eps * eps); }, -1.0, 1.0, 1e-10, 500);
  CHECK(v == doctest::Approx(2.0 * std::atan(1.0 / eps)).epsilon(1e-9));
}

TEST_CASE("Chebyshev collocation integrates backward from the right end") {
  const ChebyshevCollocation col(16);
  std::vector<cplx> values, out(17);
  for (double t : col.nodes()) values.emplace_back(std::exp(t), t * t);
  col.backward_integral(values, out);
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double t = col.nodes()[j];
    const cplx exact{std::exp(1.0) - std::exp(t), (1.0 - t * t * t) / 3.0};
    CHECK(std::abs(out[j] - exact) < 1e-13);
  }
  const std::vector<cplx> c = col.coefficients(values);
  CHECK(std::abs(c[16]) < 1e-14);
}
