#pragma once

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "chordal/numerics.hpp"

namespace chordal {

using Density = std::function<double(double)>;
using Evaluator = std::function<cplx(cplx)>;

struct Atom {
  double position = 0.0;
  double weight = 0.0;
};

/// A density on [lo, hi] integrated with a Gauss–Legendre rule of the given
/// order in the angle variable x = mid + half * cos(theta). The substitution
/// absorbs square-root endpoint behaviour (semicircle, arcsine) so the rule
/// converges spectrally for the built-in densities.
struct DensitySegment {
  double lo = 0.0;
  double hi = 0.0;
  Density density;
  int order = 64;
};

/// Finite positive Borel measure on the real line made of point masses and
/// density segments. Immutable once constructed.
class RealMeasure {
 public:
  RealMeasure() = default;
  RealMeasure(std::vector<Atom> atoms, std::vector<DensitySegment> segments);

  static RealMeasure dirac(double position, double weight = 1.0);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensitySegment>& segments() const { return segments_; }

  bool empty() const { return atoms_.empty() && segments_.empty(); }
  double mass() const { return mass_; }
  bool is_probability(double tol = 1e-12) const;

  /// Convex hull [A, B] of the support. Throws DomainError when empty.
  std::pair<double, double> support_hull() const;

  /// int f dmu with atoms summed exactly and segments by their fixed rule.
  double integrate(const std::function<double(double)>& f) const;

  /// int mu(dx) / (z - x). Segments are split into panels in the angle
  /// variable until the rule's Bernstein-ellipse error estimate for the pole
  /// at z is below double precision, so points close to the support stay
  /// accurate.
  cplx cauchy(cplx z) const;

 private:
  struct SegmentRule {
    double mid = 0.0;
    double half = 0.0;
    std::vector<double> theta_nodes;   // reference GL nodes on [-1, 1]
    std::vector<double> theta_weights;
    std::vector<double> x;             // single-panel nodes in x
    std::vector<double> w;             // density * jacobian * GL weight
  };

  cplx segment_cauchy(const DensitySegment& seg, const SegmentRule& rule,
                      cplx z) const;

  std::vector<Atom> atoms_;
  std::vector<DensitySegment> segments_;
  std::vector<SegmentRule> rules_;
  double mass_ = 0.0;
};

/// Built-in densities, each normalized to unit mass on [lo, hi].
namespace densities {
Density semicircle(double lo, double hi);
Density arcsine(double lo, double hi);
Density uniform(double lo, double hi);
/// sum_k coeffs[k] * x^k, not normalized.
Density polynomial(std::vector<double> coeffs);
}  // namespace densities

/// (b, c, nu(R)) of the Nevanlinna representation of a Pick function.
struct NevanlinnaTriple {
  double b = 0.0;
  double c = 0.0;
  double nu_mass = 0.0;
};

/// G_mu(z) = int mu(dx) / (z - x), Im z > 0.
cplx cauchy_transform(const RealMeasure& mu, cplx z);

/// F_mu(z) = 1 / G_mu(z). mu must be a probability measure.
cplx reciprocal_cauchy(const RealMeasure& mu, cplx z);

/// a_n = int x^n mu(dx).
double moment(const RealMeasure& mu, int n);

/// Least C with |F(z) - z| <= C / Im z, estimated as the extrapolated limit of
/// |iy (iy - F(iy))|. Throws ConvergenceError if the ladder does not settle
/// to 1e-3.
double class_r_constant(const Evaluator& F, const Ladder& ladder = {});

NevanlinnaTriple nevanlinna_triple(const Evaluator& F,
                                   const Ladder& ladder = {});

/// -(2/pi) int_a^b Im G(x + i eps) dx extrapolated to eps = 0, i.e.
/// mu((a,b)) + mu([a,b]). The eps ladder must be strictly decreasing and
/// positive.
double stieltjes_invert(const Evaluator& G, std::pair<double, double> interval,
                        std::span<const double> eps_ladder);
/// Same, returning the extrapolation error as well.
LimitEstimate stieltjes_invert_estimate(const Evaluator& G,
                                        std::pair<double, double> interval,
                                        std::span<const double> eps_ladder);

/// Image of mu under x -> scale * x + shift.
RealMeasure affine_pushforward(const RealMeasure& mu, double scale,
                               double shift);

}  // namespace chordal
