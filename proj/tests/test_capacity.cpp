#include <cmath>
#include <vector>

#include "chordal/capacity.hpp"
#include "chordal/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chordal;
using namespace chordal::testing;

namespace {

std::vector<cplx> interval_cloud(int count) {
  std::vector<cplx> pts;
  for (double x : chebyshev_grid(-2.0, 2.0, count)) pts.emplace_back(x, 0.0);
  return pts;
}

}  // namespace

TEST_CASE("chebyshev_grid") {
  const auto g = chebyshev_grid(-1.0, 3.0, 9);
  REQUIRE(g.size() == 9);
  CHECK(g[4] == doctest::Approx(1.0));
  for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] > g[k - 1]);
  CHECK(g.front() > -1.0);
  CHECK(g.back() < 3.0);
}

TEST_CASE("discrete transfinite diameter, closed forms") {
  const std::vector<cplx> pair{{-2.0, 0.0}, {2.0, 0.0}};
  CHECK(discrete_transfinite_diameter(pair, 2, 5) == doctest::Approx(4.0));
  std::vector<cplx> circle;
  for (int k = 0; k < 360; ++k) circle.push_back(std::polar(1.0, 2.0 * M_PI * k / 360));
  CHECK(discrete_transfinite_diameter(circle, 3, 10) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(discrete_transfinite_diameter(circle, 12, 10) ==
        doctest::Approx(std::pow(12.0, 1.0 / 11.0)).epsilon(1e-12));
  CHECK_THROWS_AS(discrete_transfinite_diameter(pair, 3, 5), DomainError);
  CHECK_THROWS_AS(discrete_transfinite_diameter(pair, 1, 5), DomainError);
}

TEST_CASE("interval cloud: bracket and monotonicity") {
  const auto pts = interval_cloud(4096);
  double previous = INFINITY;
  for (int n : {2, 4, 8, 16, 32, 64}) {
    const double d = discrete_transfinite_diameter(pts, n, 20);
    CHECK(d <= previous * (1.0 + 1e-12));
    previous = d;
  }
  CHECK(previous >= 1.0);
  CHECK(previous <= 1.1);
}

TEST_CASE("transfinite diameter invariances") {
  std::vector<cplx> pts;
  for (int k = 0; k < 300; ++k) {
    const double t = 2.0 * M_PI * k / 300;
    pts.emplace_back(std::cos(t) + 0.3 * std::cos(2 * t), 0.7 * std::sin(t));
  }
  const double d = discrete_transfinite_diameter(pts, 16, 10);
  const cplx rot = std::polar(1.0, 0.7);
  std::vector<cplx> moved, scaled;
  for (const cplx& p : pts) {
    moved.push_back(rot * p + cplx{3.0, -1.0});
    scaled.push_back(2.5 * p);
  }
  CHECK(std::abs(discrete_transfinite_diameter(moved, 16, 10) - d) <= 1e-12 * d);
  CHECK(std::abs(discrete_transfinite_diameter(scaled, 16, 10) - 2.5 * d) <= 1e-12 * d);
}

TEST_CASE("Fekete selection is deterministic and ignores duplicates") {
  std::vector<cplx> pts = interval_cloud(200);
  const auto a = fekete_indices(pts, 10, 5);
  pts.push_back(pts[17]);
  const auto b = fekete_indices(pts, 10, 5);
  CHECK(a == b);
}

TEST_CASE("polygon self-intersection") {
  const std::vector<cplx> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK_FALSE(polygon_self_intersects(square));
  const std::vector<cplx> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK(polygon_self_intersects(bowtie));
}

TEST_CASE("boundary images") {
  const BoundaryCurve sc = boundary_image(semicircle(), 512, 1e-3);
  CHECK_FALSE(sc.self_intersects);
  CHECK_FALSE(sc.unbounded);
  CHECK(sc.support_lo == -2.0);
  CHECK(sc.support_hi == 2.0);
  const std::size_t n = sc.points.size();
  REQUIRE(n == 1024);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(std::abs(sc.points[k] - std::conj(sc.points[n - 1 - k])) <= 1e-9);
    // F maps the upper trace near the circle |w| = 1 in the upper half-plane.
    if (k < n / 2) CHECK(std::abs(std::abs(sc.points[k]) - 1.0) < 0.05);
  }
  const BoundaryCurve arc = boundary_image(arcsine(), 512, 1e-3);
  CHECK_FALSE(arc.self_intersects);
  for (const cplx& p : arc.points) CHECK(std::abs(p.real()) < 0.1);
  const BoundaryCurve b = boundary_image(bernoulli(), 512, 1e-3);
  CHECK((b.self_intersects || b.unbounded));

  CHECK_THROWS_AS(boundary_image(RealMeasure::dirac(0.0), 64, 1e-3), DomainError);
  CHECK_THROWS_AS(boundary_image(semicircle(), 64, 0.5), DomainError);
  CHECK_THROWS_AS(boundary_image(semicircle(), 64, 0.0), DomainError);
}

TEST_CASE("Hayman report verdicts") {
  const CapacityReport sc = hayman_report(semicircle(), 32, 1024, 4e-3, 10);
  CHECK(sc.ratio == doctest::Approx(1.0).epsilon(0.05));
  CHECK(sc.verdict == CapacityVerdict::consistent_with_univalence);
  CHECK(to_string(sc.verdict) == "consistent_with_univalence");
  const CapacityReport b = hayman_report(bernoulli(), 32, 1024, 4e-3, 10);
  CHECK(b.verdict == CapacityVerdict::inconsistent);
}
