#pragma once

#include <memory>

#include "chordal/loewner.hpp"
#include "chordal/transforms.hpp"

namespace chordal::testing {

inline RealMeasure semicircle(double lo = -2.0, double hi = 2.0) {
  return RealMeasure({}, {{lo, hi, densities::semicircle(lo, hi), 64}});
}

inline RealMeasure arcsine(double lo = -2.0, double hi = 2.0) {
  return RealMeasure({}, {{lo, hi, densities::arcsine(lo, hi), 64}});
}

inline RealMeasure uniform04() {
  return RealMeasure({}, {{0.0, 4.0, densities::uniform(0.0, 4.0), 64}});
}

inline RealMeasure bernoulli() { return RealMeasure({{-1.0, 0.5}, {1.0, 0.5}}, {}); }

inline cplx slit(cplx z, double t, double c = 0.0) {
  const cplx w = z - c;
  // Branch of sqrt(w^2 - 2t) asymptotic to w in the upper half-plane.
  const double r = std::sqrt(2.0 * t);
  return c + std::sqrt(w - r) * std::sqrt(w + r);
}

}  // namespace chordal::testing
