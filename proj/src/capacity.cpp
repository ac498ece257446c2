#include "chordal/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "chordal/errors.hpp"

namespace chordal {

std::string to_string(CapacityVerdict v) {
  switch (v) {
    case CapacityVerdict::consistent_with_univalence:
      return "consistent_with_univalence";
    case CapacityVerdict::inconsistent: return "inconsistent";
    case CapacityVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> chebyshev_grid(double lo, double hi, int count) {
  if (count < 1) throw DomainError("chebyshev_grid: count must be positive");
  std::vector<double> x(count);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int k = 0; k < count; ++k) {
    x[k] = mid - half * std::cos((2.0 * k + 1.0) * kPi / (2.0 * count));
  }
  return x;
}

namespace {

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_cross(cplx p1, cplx p2, cplx q1, cplx q2) {
  const double d1 = cross(p2 - p1, q1 - p1);
  const double d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1);
  const double d4 = cross(q2 - q1, p2 - q1);
  return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
         ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

}  // namespace

bool polygon_self_intersects(std::span<const cplx> pts) {
  const std::size_t m = pts.size();
  if (m < 4) return false;
  struct Edge {
    std::size_t index;
    double xmin, xmax, ymin, ymax;
  };
  std::vector<Edge> edges(m);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx a = pts[i];
    const cplx b = pts[(i + 1) % m];
    edges[i] = {i, std::min(a.real(), b.real()), std::max(a.real(), b.real()),
                std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag())};
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
    return l.xmin < r.xmin || (l.xmin == r.xmin && l.index < r.index);
  });
  // Sweep in x: only edges whose x-ranges overlap are tested.
  for (std::size_t u = 0; u < m; ++u) {
    const Edge& e = edges[u];
    for (std::size_t v = u + 1; v < m && edges[v].xmin <= e.xmax; ++v) {
      const Edge& f = edges[v];
      if (f.ymin > e.ymax || f.ymax < e.ymin) continue;
      const std::size_t gap = e.index > f.index ? e.index - f.index : f.index - e.index;
      if (gap <= 1 || gap == m - 1) continue;  // adjacent edges share a vertex
      if (segments_cross(pts[e.index], pts[(e.index + 1) % m], pts[f.index],
                         pts[(f.index + 1) % m])) {
        return true;
      }
    }
  }
  return false;
}

BoundaryCurve boundary_image(const RealMeasure& mu, int resolution,
                             double epsilon) {
  if (!mu.is_probability()) {
    throw DomainError("boundary_image: measure must have mass 1");
  }
  const auto [lo, hi] = mu.support_hull();
  if (!(hi > lo)) {
    throw DomainError("boundary_image: degenerate support (point mass)");
  }
  if (!(epsilon > 0.0 && epsilon < 0.1 * (hi - lo))) {
    throw DomainError("boundary_image: epsilon must lie in (0, 0.1 (B - A))");
  }
  if (resolution < 2) throw DomainError("boundary_image: resolution must be >= 2");

  BoundaryCurve curve;
  curve.epsilon = epsilon;
  curve.support_lo = lo;
  curve.support_hi = hi;
  const std::vector<double> xs = chebyshev_grid(lo, hi, resolution);
  curve.points.reserve(2 * xs.size());
  for (double x : xs) curve.points.push_back(reciprocal_cauchy(mu, {x, epsilon}));
  for (std::size_t k = xs.size(); k-- > 0;) {
    curve.points.push_back(std::conj(curve.points[k]));
  }

  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  bool finite = true;
  for (const cplx& p : curve.points) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      finite = false;
      break;
    }
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  curve.unbounded = !finite || std::hypot(xmax - xmin, ymax - ymin) > 2.0 * (hi - lo);
  curve.self_intersects = finite && polygon_self_intersects(curve.points);
  return curve;
}

std::vector<std::size_t> fekete_indices(std::span<const cplx> points, int n,
                                        int sweeps) {
  if (n < 2) throw DomainError("discrete_transfinite_diameter: n must be >= 2");
  if (sweeps < 0) throw DomainError("discrete_transfinite_diameter: sweeps < 0");

  // Distinct samples only, keeping the first occurrence of each value.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const cplx pa = points[a];
    const cplx pb = points[b];
    return pa.real() < pb.real() || (pa.real() == pb.real() && pa.imag() < pb.imag());
  });
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && points[order[i]] == points[order[i - 1]]) continue;
    if (!std::isfinite(points[order[i]].real()) ||
        !std::isfinite(points[order[i]].imag())) {
      throw DomainError("discrete_transfinite_diameter: non-finite sample");
    }
    keep.push_back(order[i]);
  }
  std::sort(keep.begin(), keep.end());
  const std::size_t m = keep.size();
  if (static_cast<std::size_t>(n) > m) {
    throw DomainError(
        "discrete_transfinite_diameter: n exceeds the number of distinct samples");
  }
  std::vector<cplx> cloud(m);
  for (std::size_t i = 0; i < m; ++i) cloud[i] = points[keep[i]];

  auto logdist = [&](std::size_t i, std::size_t j) {
    return std::log(std::abs(cloud[i] - cloud[j]));
  };

  // potential[y] = sum over selected j != y of log |y - p_j|
  std::vector<double> potential(m, 0.0);
  std::vector<char> selected(m, 0);
  std::vector<std::size_t> chosen;
  chosen.reserve(n);

  auto add = [&](std::size_t x) {
    selected[x] = 1;
    chosen.push_back(x);
    for (std::size_t y = 0; y < m; ++y) {
      if (y != x) potential[y] += logdist(x, y);
    }
  };

  // Seed with the sample farthest from the centroid, then Leja points.
  cplx centroid{};
  for (const cplx& p : cloud) centroid += p;
  centroid /= static_cast<double>(m);
  std::size_t first = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (std::abs(cloud[i] - centroid) > std::abs(cloud[first] - centroid)) first = i;
  }
  add(first);
  while (chosen.size() < static_cast<std::size_t>(n)) {
    std::size_t best = m;
    for (std::size_t y = 0; y < m; ++y) {
      if (selected[y]) continue;
      if (best == m || potential[y] > potential[best]) best = y;
    }
    add(best);
  }

  for (int sweep = 0; sweep < sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t slot = 0; slot < chosen.size(); ++slot) {
      const std::size_t old = chosen[slot];
      const double current = potential[old];
      std::size_t best = m;
      double best_gain = 0.0;
      for (std::size_t y = 0; y < m; ++y) {
        if (selected[y]) continue;
        const double gain = potential[y] - logdist(y, old) - current;
        if (gain > best_gain) {
          best_gain = gain;
          best = y;
        }
      }
      if (best == m || best_gain <= 1e-13 * std::max(1.0, std::abs(current))) {
        continue;
      }
      selected[old] = 0;
      selected[best] = 1;
      chosen[slot] = best;
      for (std::size_t y = 0; y < m; ++y) {
        if (y != best) potential[y] += logdist(y, best);
        if (y != old) potential[y] -= logdist(y, old);
      }
      improved = true;
    }
    if (!improved) break;
  }

  std::vector<std::size_t> out(chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) out[i] = keep[chosen[i]];
  return out;
}

double discrete_transfinite_diameter(std::span<const cplx> points, int n,
                                     int sweeps) {
  if (n < 2) throw DomainError("discrete_transfinite_diameter: n must be >= 2");
  if (points.size() < static_cast<std::size_t>(n)) {
    throw DomainError("discrete_transfinite_diameter: n exceeds sample count");
  }
  const std::vector<std::size_t> idx = fekete_indices(points, n, sweeps);
  double energy = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      energy += std::log(std::abs(points[idx[i]] - points[idx[j]]));
    }
  }
  return std::exp(2.0 * energy / (static_cast<double>(n) * (n - 1)));
}

CapacityReport hayman_report(const RealMeasure& mu, int n, int resolution,
                             double epsilon, int sweeps) {
  const BoundaryCurve curve = boundary_image(mu, resolution, epsilon);
  CapacityReport report;
  report.n_points = n;
  report.epsilon = epsilon;
  report.self_intersects = curve.self_intersects;
  report.unbounded = curve.unbounded;

  const std::vector<double> xs =
      chebyshev_grid(curve.support_lo, curve.support_hi, 2 * resolution);
  std::vector<cplx> interval(xs.begin(), xs.end());
  report.d_interval = discrete_transfinite_diameter(interval, n, sweeps);

  bool finite = true;
  for (const cplx& p : curve.points) {
    finite = finite && std::isfinite(p.real()) && std::isfinite(p.imag());
  }
  if (finite) {
    report.d_image = discrete_transfinite_diameter(curve.points, n, sweeps);
    report.ratio = report.d_image / report.d_interval;
  } else {
    report.d_image = std::numeric_limits<double>::infinity();
    report.ratio = std::numeric_limits<double>::infinity();
  }

  const bool flagged = curve.self_intersects || curve.unbounded;
  if (!flagged && std::abs(report.ratio - 1.0) <= 0.05) {
    report.verdict = CapacityVerdict::consistent_with_univalence;
  } else if (flagged || report.ratio < 0.9) {
    report.verdict = CapacityVerdict::inconsistent;
  } else {
    report.verdict = CapacityVerdict::inconclusive;
  }
  return report;
}

}  // namespace chordal
