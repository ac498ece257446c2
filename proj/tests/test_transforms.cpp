#include <cmath>
#include <random>
#include <vector>

#include "chordal/errors.hpp"
#include "chordal/transforms.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chordal;
using namespace chordal::testing;

TEST_CASE("Cauchy transform of closed-form measures") {
  const cplx z{0.3, 0.7};
  CHECK(std::abs(cauchy_transform(RealMeasure::dirac(0.0), z) - 1.0 / z) < 1e-15);
  // Semicircle on [-2, 2]: G = (z - sqrt(z^2 - 4)) / 2 with the branch ~ z.
  const cplx root = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
  CHECK(std::abs(cauchy_transform(semicircle(), z) - 0.5 * (z - root)) < 1e-13);
  // Arcsine on [-2, 2]: G = 1 / sqrt(z^2 - 4).
  CHECK(std::abs(cauchy_transform(arcsine(), z) - 1.0 / root) < 1e-13);
  CHECK(std::abs(cauchy_transform(semicircle(), cplx{0.0, 1.0}) -
                 cplx{0.0, -0.6180339887498949}) < 1e-14);
}

TEST_CASE("Cauchy transform stays accurate near the support") {
  for (double y : {1e-2, 1e-4, 1e-6}) {
    const cplx z{0.5, y};
    const cplx root = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
    // Cancellation in 1/(z - x) costs about eps / y.
    CHECK(std::abs(cauchy_transform(semicircle(), z) - 0.5 * (z - root)) < 1e-15 / y + 1e-12);
    CHECK(std::abs(cauchy_transform(arcsine(), z) - 1.0 / root) < 1e-15 / y + 1e-12);
  }
}

TEST_CASE("reciprocal Cauchy transform") {
  const cplx z{1.0, 1.0};
  CHECK(std::abs(reciprocal_cauchy(RealMeasure::dirac(0.0), z) - z) < 1e-15);
  const cplx f = reciprocal_cauchy(bernoulli(), cplx{0.0, 1.0});
  CHECK(std::abs(f - cplx{0.0, 2.0}) < 1e-14);
  CHECK_THROWS_AS(reciprocal_cauchy(RealMeasure::dirac(0.0, 0.5), z), DomainError);
  CHECK_THROWS_AS(cauchy_transform(semicircle(), cplx{1.0, 0.0}), DomainError);
}

TEST_CASE("moments of the semicircle are Catalan numbers") {
  const double catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int k = 0; k <= 6; ++k) {
    CHECK(moment(semicircle(), 2 * k) == doctest::Approx(catalan[k]).epsilon(1e-10));
    CHECK(std::abs(moment(semicircle(), 2 * k + 1)) < 1e-10);
  }
  CHECK(moment(bernoulli(), 4) == doctest::Approx(1.0));
  CHECK(moment(arcsine(), 4) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK_THROWS_AS(moment(semicircle(), -1), DomainError);
}

TEST_CASE("transform invariants at sampled points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.05, 5.0);
  const RealMeasure measures[] = {semicircle(), arcsine(), bernoulli(), uniform04()};
  for (const RealMeasure& mu : measures) {
    const double mean = moment(mu, 1);
    for (int k = 0; k < 50; ++k) {
      const cplx z{re(rng), im(rng)};
      const cplx g = cauchy_transform(mu, z);
      CHECK(g.imag() < 0.0);
      const cplx f = 1.0 / g;
      CHECK(f.imag() > 0.0);
      if (std::abs(mean) < 1e-12) CHECK(f.imag() >= z.imag() - 1e-12);
    }
    const LimitEstimate lim = limit_at_infinity([&](double y) {
      return cplx{0.0, y} * cauchy_transform(mu, cplx{0.0, y});
    });
    CHECK(std::abs(lim.value - 1.0) < 1e-6);
  }
}

TEST_CASE("class_r_constant and Nevanlinna data") {
  // F_mu(z) - z -> -m1 - (m2 - m1^2) / z, so the constant is the variance
  // for centred measures.
  CHECK(class_r_constant([](cplx z) { return reciprocal_cauchy(semicircle(), z); }) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(class_r_constant([](cplx z) { return reciprocal_cauchy(bernoulli(), z); }) ==
        doctest::Approx(1.0).epsilon(1e-6));
  const NevanlinnaTriple t =
      nevanlinna_triple([](cplx z) { return reciprocal_cauchy(semicircle(), z); });
  CHECK(std::abs(t.b) < 1e-12);
  CHECK(t.c == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(t.nu_mass == doctest::Approx(0.6180339887498949 - 0.0).epsilon(1e-8));
  const NevanlinnaTriple id = nevanlinna_triple([](cplx z) { return z; });
  CHECK(id.c == doctest::Approx(1.0));
  CHECK(id.nu_mass == 0.0);
  CHECK_THROWS_AS(nevanlinna_triple([](cplx z) { return -z; }), DomainError);
}

TEST_CASE("Stieltjes inversion") {
  const std::vector<double> ladder{0.1, 0.05, 0.025, 0.0125};
  auto G = [](const RealMeasure& mu) {
    return [&mu](cplx z) { return cauchy_transform(mu, z); };
  };
  const RealMeasure sc = semicircle();
  CHECK(stieltjes_invert(G(sc), {-3.0, 3.0}, ladder) == doctest::Approx(2.0).epsilon(1e-3));
  const RealMeasure d0 = RealMeasure::dirac(0.0);
  CHECK(std::abs(stieltjes_invert(G(d0), {1.0, 2.0}, ladder)) < 1e-6);
  // An atom shows up as a spike: a window of width ~eps around it holds its mass.
  const RealMeasure b = bernoulli();
  CHECK(stieltjes_invert(G(b), {0.5, 1.5}, ladder) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(stieltjes_invert(G(sc), {1.0, 1.0}, ladder), DomainError);
  const std::vector<double> bad{0.1, 0.2};
  CHECK_THROWS_AS(stieltjes_invert(G(sc), {-1.0, 1.0}, bad), DomainError);
}

TEST_CASE("affine pushforward") {
  const RealMeasure d = affine_pushforward(RealMeasure::dirac(0.0), 2.0, 1.0);
  REQUIRE(d.atoms().size() == 1);
  CHECK(d.atoms()[0].position == 1.0);
  const RealMeasure two = affine_pushforward(
      RealMeasure({{-3.0, 0.5}, {3.0, 0.5}}, {}), 2.0 / 3.0, 0.0);
  CHECK(two.atoms()[0].position == doctest::Approx(-2.0));
  CHECK(two.atoms()[1].position == doctest::Approx(2.0));
  const RealMeasure u = affine_pushforward(uniform04(), 1.0, -2.0);
  CHECK(std::abs(moment(u, 1)) < 1e-13);
  CHECK(moment(u, 2) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(u.mass() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(affine_pushforward(u, 0.0, 0.0), DomainError);
}

TEST_CASE("measure validation") {
  CHECK_THROWS_AS(RealMeasure({{0.0, -1.0}}, {}), DomainError);
  CHECK_THROWS_AS(RealMeasure({}, {{1.0, 0.0, densities::uniform(0, 1), 64}}), DomainError);
  CHECK_THROWS_AS(RealMeasure({}, {{0.0, 1.0, densities::polynomial({-1.0}), 64}}),
                  DomainError);
  CHECK_THROWS_AS(RealMeasure().support_hull(), DomainError);
}
