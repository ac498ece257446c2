#include "chordal/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

// Largest Bernstein-ellipse parameter rho such that the pole theta lies on
// the ellipse with foci at the panel ends.
double bernstein_rho(cplx theta, double center, double radius) {
  const cplx t = (theta - center) / radius;
  const cplx s = std::sqrt(t - 1.0) * std::sqrt(t + 1.0);
  return std::max(std::abs(t + s), std::abs(t - s));
}

}  // namespace

RealMeasure::RealMeasure(std::vector<Atom> atoms,
                         std::vector<DensitySegment> segments)
    : atoms_(std::move(atoms)), segments_(std::move(segments)) {
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.position) || !std::isfinite(a.weight)) {
      throw DomainError("RealMeasure: atom must be finite");
    }
    if (a.weight < 0.0) throw DomainError("RealMeasure: negative atom weight");
    mass_ += a.weight;
  }
  rules_.reserve(segments_.size());
  for (const DensitySegment& seg : segments_) {
    if (!(seg.lo < seg.hi) || !std::isfinite(seg.lo) ||
        !std::isfinite(seg.hi)) {
      throw DomainError("RealMeasure: segment interval must satisfy lo < hi");
    }
    if (seg.order < 2) {
      throw DomainError("RealMeasure: quadrature order must be at least 2");
    }
    if (!seg.density) throw DomainError("RealMeasure: segment has no density");
    SegmentRule rule;
    rule.mid = 0.5 * (seg.lo + seg.hi);
    rule.half = 0.5 * (seg.hi - seg.lo);
    QuadratureRule gl = gauss_legendre(seg.order);
    rule.theta_nodes = std::move(gl.nodes);
    rule.theta_weights = std::move(gl.weights);
    const double c = 0.5 * kPi;
    double peak = 0.0;
    for (std::size_t k = 0; k < rule.theta_nodes.size(); ++k) {
      const double theta = c + c * rule.theta_nodes[k];
      const double x = rule.mid + rule.half * std::cos(theta);
      const double rho = seg.density(x);
      if (!std::isfinite(rho)) {
        throw DomainError("RealMeasure: density is not finite at a node");
      }
      peak = std::max(peak, std::abs(rho));
      if (rho < -1e-12 * std::max(1.0, peak)) {
        throw DomainError("RealMeasure: density is negative at x = " +
                          std::to_string(x));
      }
      rule.x.push_back(x);
      rule.w.push_back(rho * rule.half * std::sin(theta) * c *
                       rule.theta_weights[k]);
      mass_ += rule.w.back();
    }
    rules_.push_back(std::move(rule));
  }
}

RealMeasure RealMeasure::dirac(double position, double weight) {
  return RealMeasure({{position, weight}}, {});
}

bool RealMeasure::is_probability(double tol) const {
  return std::abs(mass_ - 1.0) <= tol;
}

std::pair<double, double> RealMeasure::support_hull() const {
  if (empty()) throw DomainError("support_hull: measure is empty");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Atom& a : atoms_) {
    lo = std::min(lo, a.position);
    hi = std::max(hi, a.position);
  }
  for (const DensitySegment& s : segments_) {
    lo = std::min(lo, s.lo);
    hi = std::max(hi, s.hi);
  }
  return {lo, hi};
}

double RealMeasure::integrate(const std::function<double(double)>& f) const {
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.weight * f(a.position);
  for (const SegmentRule& r : rules_) {
    for (std::size_t k = 0; k < r.x.size(); ++k) total += r.w[k] * f(r.x[k]);
  }
  return total;
}

cplx RealMeasure::segment_cauchy(const DensitySegment& seg,
                                 const SegmentRule& rule, cplx z) const {
  const cplx theta_pole = std::acos((z - rule.mid) / rule.half);
  const cplx poles[] = {theta_pole, -theta_pole, 2.0 * kPi - theta_pole};
  const double needed = 40.0 / (2.0 * static_cast<double>(seg.order));

  auto resolved = [&](double center, double radius) {
    for (const cplx& p : poles) {
      if (std::log(bernstein_rho(p, center, radius)) < needed) return false;
    }
    return true;
  };

  if (resolved(0.5 * kPi, 0.5 * kPi)) {
    cplx total{};
    for (std::size_t k = 0; k < rule.x.size(); ++k) {
      total += rule.w[k] / (z - rule.x[k]);
    }
    return total;
  }

  // Bisect in theta until every panel resolves the pole.
  struct Panel {
    double a, b;
    int depth;
  };
  std::vector<Panel> stack{{0.0, kPi, 0}};
  cplx total{};
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double center = 0.5 * (p.a + p.b);
    const double radius = 0.5 * (p.b - p.a);
    if (p.depth < 60 && !resolved(center, radius)) {
      stack.push_back({p.a, center, p.depth + 1});
      stack.push_back({center, p.b, p.depth + 1});
      continue;
    }
    for (std::size_t k = 0; k < rule.theta_nodes.size(); ++k) {
      const double theta = center + radius * rule.theta_nodes[k];
      const double x = rule.mid + rule.half * std::cos(theta);
      const double w = seg.density(x) * rule.half * std::sin(theta) * radius *
                       rule.theta_weights[k];
      total += w / (z - x);
    }
  }
  return total;
}

cplx RealMeasure::cauchy(cplx z) const {
  cplx total{};
  for (const Atom& a : atoms_) total += a.weight / (z - a.position);
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    total += segment_cauchy(segments_[i], rules_[i], z);
  }
  return total;
}

namespace densities {

Density semicircle(double lo, double hi) {
  const double r = 0.5 * (hi - lo);
  const double scale = 2.0 / (kPi * r * r);
  return [=](double x) {
    const double q = (x - lo) * (hi - x);
    return q > 0.0 ? scale * std::sqrt(q) : 0.0;
  };
}

Density arcsine(double lo, double hi) {
  return [=](double x) {
    const double q = (x - lo) * (hi - x);
    return q > 0.0 ? 1.0 / (kPi * std::sqrt(q)) : 0.0;
  };
}

Density uniform(double lo, double hi) {
  const double h = 1.0 / (hi - lo);
  return [=](double) { return h; };
}

Density polynomial(std::vector<double> coeffs) {
  return [c = std::move(coeffs)](double x) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  };
}

}  // namespace densities

cplx cauchy_transform(const RealMeasure& mu, cplx z) {
  if (!(z.imag() > 0.0)) {
    throw DomainError("cauchy_transform: requires Im z > 0");
  }
  return mu.cauchy(z);
}

cplx reciprocal_cauchy(const RealMeasure& mu, cplx z) {
  if (!mu.is_probability()) {
    throw DomainError("reciprocal_cauchy: measure must have mass 1");
  }
  return 1.0 / cauchy_transform(mu, z);
}

double moment(const RealMeasure& mu, int n) {
  if (n < 0) throw DomainError("moment: order must be non-negative");
  if (n == 0) return mu.mass();
  return mu.integrate([n](double x) { return std::pow(x, n); });
}

double class_r_constant(const Evaluator& F, const Ladder& ladder) {
  const LimitEstimate est = limit_at_infinity(
      [&](double y) {
        const cplx iy{0.0, y};
        return iy * (iy - F(iy));
      },
      ladder);
  if (!(est.error <= 1e-3)) {
    throw ConvergenceError("class_r_constant: ladder did not converge");
  }
  return std::abs(est.value);
}

NevanlinnaTriple nevanlinna_triple(const Evaluator& F, const Ladder& ladder) {
  const cplx at_i = F(cplx{0.0, 1.0});
  const LimitEstimate slope = limit_at_infinity(
      [&](double y) { return cplx{F(cplx{0.0, y}).imag() / y, 0.0}; }, ladder);
  if (!(slope.error <= 1e-3)) {
    throw ConvergenceError("nevanlinna_triple: Im F(iy)/y did not converge");
  }
  NevanlinnaTriple out;
  out.b = at_i.real();
  out.c = slope.value.real();
  out.nu_mass = at_i.imag() - out.c;
  if (out.nu_mass < -1e-9 || out.c < -1e-9) {
    throw DomainError("nevanlinna_triple: evaluator is not a Pick function");
  }
  if (out.nu_mass < 0.0) out.nu_mass = 0.0;
  if (out.c < 0.0 && out.c > -1e-9) out.c = 0.0;
  return out;
}

double stieltjes_invert(const Evaluator& G, std::pair<double, double> interval,
                        std::span<const double> eps_ladder) {
  return stieltjes_invert_estimate(G, interval, eps_ladder).value.real();
}

LimitEstimate stieltjes_invert_estimate(const Evaluator& G,
                                        std::pair<double, double> interval,
                                        std::span<const double> eps_ladder) {
  const auto [a, b] = interval;
  if (!(a < b)) throw DomainError("stieltjes_invert: need a < b");
  if (eps_ladder.size() < 2) {
    throw DomainError("stieltjes_invert: need at least two eps values");
  }
  for (std::size_t k = 0; k < eps_ladder.size(); ++k) {
    if (!(eps_ladder[k] > 0.0) ||
        (k > 0 && !(eps_ladder[k] < eps_ladder[k - 1]))) {
      throw DomainError(
          "stieltjes_invert: eps ladder must be positive, strictly decreasing");
    }
  }
  std::vector<double> samples;
  samples.reserve(eps_ladder.size());
  for (double eps : eps_ladder) {
    const double span = b - a;
    const int panels = static_cast<int>(
        std::clamp(std::ceil(span / (4.0 * eps)), 1.0, 4096.0));
    const double integral = adaptive_simpson<double>(
        [&](double x) { return G(cplx{x, eps}).imag(); }, a, b, 1e-11, panels);
    samples.push_back(-2.0 / kPi * integral);
  }
  const LimitEstimate est = extrapolate_to_zero(eps_ladder, samples);
  if (!(est.error <= 1e-3)) {
    throw ConvergenceError("stieltjes_invert: eps extrapolation did not settle");
  }
  return est;
}

RealMeasure affine_pushforward(const RealMeasure& mu, double scale,
                               double shift) {
  if (!(scale > 0.0)) throw DomainError("affine_pushforward: scale must be > 0");
  std::vector<Atom> atoms;
  atoms.reserve(mu.atoms().size());
  for (const Atom& a : mu.atoms()) {
    atoms.push_back({scale * a.position + shift, a.weight});
  }
  std::vector<DensitySegment> segments;
  segments.reserve(mu.segments().size());
  for (const DensitySegment& s : mu.segments()) {
    segments.push_back({scale * s.lo + shift, scale * s.hi + shift,
                        [d = s.density, scale, shift](double y) {
                          return d((y - shift) / scale) / scale;
                        },
                        s.order});
  }
  return RealMeasure(std::move(atoms), std::move(segments));
}

}  // namespace chordal
