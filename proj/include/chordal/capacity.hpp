#pragma once

#include <span>
#include <string>
#include <vector>

#include "chordal/numerics.hpp"
#include "chordal/transforms.hpp"

namespace chordal {

/// Closed polygon sampling the boundary of F(C \ [A, B]): the upper trace
/// F(x + i eps) for x on a Chebyshev grid of [A, B], followed by its complex
/// conjugate in reverse order.
struct BoundaryCurve {
  std::vector<cplx> points;
  double epsilon = 0.0;
  double support_lo = 0.0;   // A
  double support_hi = 0.0;   // B
  bool self_intersects = false;
  /// The curve leaves the box a univalent image could occupy: its bounding
  /// box diagonal exceeds 2 (B - A), while a univalent image has diameter at
  /// most 4 cap = B - A.
  bool unbounded = false;
};

enum class CapacityVerdict { consistent_with_univalence, inconsistent, inconclusive };
std::string to_string(CapacityVerdict v);

struct CapacityReport {
  int n_points = 0;
  double d_image = 0.0;
  double d_interval = 0.0;
  double ratio = 0.0;
  bool self_intersects = false;
  bool unbounded = false;
  double epsilon = 0.0;
  CapacityVerdict verdict = CapacityVerdict::inconclusive;
};

/// Chebyshev points of the first kind on [lo, hi], ascending.
std::vector<double> chebyshev_grid(double lo, double hi, int count);

BoundaryCurve boundary_image(const RealMeasure& mu, int resolution,
                             double epsilon);

/// True if any two non-adjacent edges of the closed polygon cross.
bool polygon_self_intersects(std::span<const cplx> points);

/// Discrete transfinite diameter d_n = (prod_{i<j} |p_i - p_j|)^{2/(n(n-1))}
/// of n points chosen from the cloud: greedy Leja seeding followed by
/// exchange sweeps that keep every improving swap. Ties go to the lowest
/// sample index, so the result is deterministic.
double discrete_transfinite_diameter(std::span<const cplx> points, int n,
                                     int sweeps);

/// Fekete selection behind discrete_transfinite_diameter; returns indices
/// into the de-duplicated cloud order of `points`.
std::vector<std::size_t> fekete_indices(std::span<const cplx> points, int n,
                                        int sweeps);

CapacityReport hayman_report(const RealMeasure& mu, int n, int resolution,
                             double epsilon, int sweeps);

}  // namespace chordal
