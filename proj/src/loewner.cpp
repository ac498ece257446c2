#include "chordal/loewner.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

constexpr double kMassTol = 1e-12;
constexpr double kMinStep = 1e-12;
constexpr int kCollocationDegree = 16;
constexpr int kMaxPicardIterations = 200;

const ChebyshevCollocation& collocation() {
  static const ChebyshevCollocation rule(kCollocationDegree);
  return rule;
}

}  // namespace

DriverFamily DriverFamily::piecewise_constant(std::vector<double> breaks,
                                              std::vector<RealMeasure> measures,
                                              double horizon) {
  if (breaks.empty() || breaks.size() != measures.size()) {
    throw DomainError(
        "piecewise_constant: need one measure per breakpoint (at least one)");
  }
  if (breaks.front() != 0.0) {
    throw DomainError("piecewise_constant: breakpoints must start at 0");
  }
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i] > breaks[i - 1])) {
      throw DomainError("piecewise_constant: breakpoints must increase");
    }
  }
  if (!(horizon >= breaks.back()) || !std::isfinite(horizon)) {
    throw DomainError("piecewise_constant: horizon precedes last breakpoint");
  }
  DriverFamily family;
  for (const RealMeasure& mu : measures) {
    if (!mu.is_probability(kMassTol)) {
      throw DomainError("piecewise_constant: every measure must have mass 1");
    }
    const auto [lo, hi] = mu.support_hull();
    family.support_bound_ =
        std::max({family.support_bound_, std::abs(lo), std::abs(hi)});
  }
  family.variant_ = PiecewiseConstant{std::move(breaks), std::move(measures)};
  family.horizon_ = horizon;
  return family;
}

DriverFamily DriverFamily::constant(RealMeasure mu, double horizon) {
  return piecewise_constant({0.0}, {std::move(mu)}, horizon);
}

DriverFamily DriverFamily::moving_atom(
    std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) {
    throw DomainError("moving_atom: need at least two samples");
  }
  if (samples.front().first != 0.0) {
    throw DomainError("moving_atom: samples must start at t = 0");
  }
  DriverFamily family;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].first) || !std::isfinite(samples[i].second)) {
      throw DomainError("moving_atom: samples must be finite");
    }
    if (i > 0 && !(samples[i].first > samples[i - 1].first)) {
      throw DomainError("moving_atom: sample times must increase");
    }
    family.support_bound_ =
        std::max(family.support_bound_, std::abs(samples[i].second));
  }
  family.horizon_ = samples.back().first;
  family.variant_ = MovingAtom{std::move(samples)};
  return family;
}

std::size_t DriverFamily::piece_index(double t) const {
  if (const auto* pc = std::get_if<PiecewiseConstant>(&variant_)) {
    const auto it = std::upper_bound(pc->breaks.begin(), pc->breaks.end(), t);
    return static_cast<std::size_t>(std::max<std::ptrdiff_t>(
        0, std::distance(pc->breaks.begin(), it) - 1));
  }
  const auto& s = std::get<MovingAtom>(variant_).samples;
  const auto it = std::upper_bound(
      s.begin(), s.end(), t,
      [](double v, const std::pair<double, double>& p) { return v < p.first; });
  const auto idx = std::distance(s.begin(), it) - 1;
  return static_cast<std::size_t>(
      std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(s.size()) - 2));
}

double DriverFamily::atom_position(double t) const {
  const auto& s = std::get<MovingAtom>(variant_).samples;
  const std::size_t k = piece_index(t);
  const auto [t0, u0] = s[k];
  const auto [t1, u1] = s[k + 1];
  return u0 + (u1 - u0) * (t - t0) / (t1 - t0);
}

double DriverFamily::atom_velocity(double t) const {
  const auto& s = std::get<MovingAtom>(variant_).samples;
  const std::size_t k = piece_index(t);
  return (s[k + 1].second - s[k].second) / (s[k + 1].first - s[k].first);
}

const RealMeasure& DriverFamily::active_measure(double t) const {
  return std::get<PiecewiseConstant>(variant_).measures[piece_index(t)];
}

RealMeasure DriverFamily::measure_at(double t) const {
  if (!(t >= 0.0) || t > horizon_) {
    throw DomainError("driver_measure_at: t outside [0, horizon]");
  }
  if (const auto* pc = std::get_if<PiecewiseConstant>(&variant_)) {
    return pc->measures[piece_index(t)];
  }
  return RealMeasure::dirac(atom_position(t));
}

cplx DriverFamily::cauchy_at(double t, cplx w) const {
  if (const auto* pc = std::get_if<PiecewiseConstant>(&variant_)) {
    return pc->measures[piece_index(t)].cauchy(w);
  }
  return 1.0 / (w - atom_position(t));
}

std::vector<double> DriverFamily::knots_between(double a, double b) const {
  std::vector<double> out;
  if (const auto* pc = std::get_if<PiecewiseConstant>(&variant_)) {
    for (double t : pc->breaks) {
      if (t > a && t < b) out.push_back(t);
    }
  } else {
    for (const auto& [t, u] : std::get<MovingAtom>(variant_).samples) {
      if (t > a && t < b) out.push_back(t);
    }
  }
  return out;
}

RealMeasure driver_measure_at(const DriverFamily& family, double t) {
  return family.measure_at(t);
}

void SolverConfig::validate() const {
  if (!(tol >= 1e-14)) throw DomainError("SolverConfig: tol must be >= 1e-14");
  if (!(max_step > 0.0)) throw DomainError("SolverConfig: max_step must be > 0");
  if (!(contraction_margin > 0.0 && contraction_margin <= 0.5)) {
    throw DomainError("SolverConfig: contraction_margin must be in (0, 1/2]");
  }
}

namespace {

struct PicardOutcome {
  cplx value;
  int iterations = 0;
  double truncation = 0.0;
  double collocation = 0.0;
};

// Picard iteration for B(s0, s1; w) on one substep. The integrand is frozen
// to the driver piece containing the substep interior so knots at either end
// never leak the neighbouring piece into the collocation nodes.
PicardOutcome picard_substep(const DriverFamily& family, double s0, double s1,
                             cplx w, double truncation_budget,
                             SubstepRecord* record) {
  const ChebyshevCollocation& rule = collocation();
  const int n = rule.degree() + 1;
  const double h = s1 - s0;
  const double half = 0.5 * h;
  const double im = w.imag();
  const double q = h / (im * im);
  const double interior = 0.5 * (s0 + s1);
  const bool moving = family.is_moving_atom();
  const RealMeasure* frozen = moving ? nullptr : &family.active_measure(interior);
  // Moving atom: U is linear on the substep because sample times are knots.
  const double u0 = moving ? family.atom_position(interior) : 0.0;
  const double u1 = moving ? family.atom_velocity(interior) : 0.0;

  std::vector<double> times(n);
  for (int j = 0; j < n; ++j) times[j] = s0 + (rule.nodes()[j] + 1.0) * half;

  auto integrand = [&](int j, cplx b) -> cplx {
    if (frozen != nullptr) return frozen->cauchy(b);
    return 1.0 / (b - (u0 + u1 * (times[j] - interior)));
  };

  std::vector<cplx> current(n, w);
  std::vector<cplx> next(n);
  std::vector<cplx> g(n);
  std::vector<cplx> integral(n);

  // bound_k = Im^{-(2k+1)} h^{k+1} / (k+1)!
  double bound = h / im;
  PicardOutcome out;
  for (int iter = 0; iter < kMaxPicardIterations; ++iter) {
    for (int j = 0; j < n; ++j) g[j] = integrand(j, current[j]);
    rule.backward_integral(g, integral);
    double increment = 0.0;
    for (int j = 0; j < n; ++j) {
      next[j] = w - half * integral[j];
      increment = std::max(increment, std::abs(next[j] - current[j]));
    }
    current.swap(next);
    out.iterations = iter + 1;
    if (record != nullptr) {
      record->picard_bounds.push_back(bound);
      record->increments.push_back(increment);
    }
    // Remaining error after this iterate: sum of later bounds, a series
    // dominated by a geometric one with ratio q / (iter + 3).
    const double following = bound * q / (iter + 2);
    const double ratio = q / (iter + 3);
    const double tail = following / (1.0 - ratio);
    bound = following;
    if (tail <= truncation_budget) {
      out.truncation = tail;
      break;
    }
    if (iter + 1 == kMaxPicardIterations) {
      throw ConvergenceError("solve_transition: Picard iteration budget exhausted");
    }
  }

  for (int j = 0; j < n; ++j) g[j] = integrand(j, current[j]);
  const std::vector<cplx> coeffs = rule.coefficients(g);
  const double tail_coeffs = std::abs(coeffs[n - 1]) + std::abs(coeffs[n - 2]) +
                             std::abs(coeffs[n - 3]);
  out.collocation = h * tail_coeffs;
  out.value = current[n - 1];  // node tau = -1, i.e. time s0
  return out;
}

}  // namespace

TransitionResult solve_transition(const DriverFamily& family, double a,
                                  double b, cplx z,
                                  const SolverConfig& config) {
  config.validate();
  if (!(a >= 0.0) || !(a <= b)) {
    throw DomainError("solve_transition: need 0 <= a <= b");
  }
  if (b > family.horizon()) {
    throw DomainError("solve_transition: b beyond the driver horizon");
  }
  if (!(z.imag() > 0.0) || !std::isfinite(z.real())) {
    throw DomainError("solve_transition: requires Im z > 0");
  }
  if (z.imag() < 10.0 * std::sqrt(config.tol)) {
    throw DomainError(
        "solve_transition: Im z below 10 sqrt(tol); too close to the real axis");
  }
  TransitionResult result;
  result.value = z;
  if (a == b) return result;

  const std::vector<double> knots = family.knots_between(a, b);
  const double total = b - a;
  cplx w = z;
  double s1 = b;
  auto knot_it = knots.rbegin();
  while (s1 > a) {
    while (knot_it != knots.rend() && *knot_it >= s1) ++knot_it;
    const double floor_time = (knot_it != knots.rend()) ? *knot_it : a;
    const double im = w.imag();
    double h = std::min({s1 - floor_time, config.max_step,
                         config.contraction_margin * im * im});
    for (;;) {
      if (h < kMinStep) {
        throw ConvergenceError(
            "solve_transition: step fell below 1e-12 (point too close to the "
            "hull)");
      }
      double s0 = s1 - h;
      if (s1 - floor_time - h < 1e-14 * std::max(1.0, s1)) s0 = floor_time;
      const double amp = 1.0 + (s0 - a) / (im * im);
      const double budget = config.tol * ((s1 - s0) / total) / amp;
      // Chebyshev coefficients of an integrand bounded by 1 / Im cannot drop
      // below roundoff, so the collocation test has a floor proportional to h.
      const double rounding =
          16.0 * std::numeric_limits<double>::epsilon() * (s1 - s0) / im;
      SubstepRecord record;
      SubstepRecord* rec = config.record_trace ? &record : nullptr;
      const PicardOutcome step =
          picard_substep(family, s0, s1, w, 0.5 * budget, rec);
      if (step.collocation > std::max(0.5 * budget, rounding)) {
        h *= 0.5;
        continue;
      }
      result.err_bound += (step.truncation + step.collocation) * amp;
      result.substeps += 1;
      if (rec != nullptr) {
        record.start = s0;
        record.end = s1;
        record.im_floor = im;
        record.iterations = step.iterations;
        record.truncation_error = step.truncation;
        record.collocation_error = step.collocation;
        result.trace.push_back(std::move(record));
      }
      w = step.value;
      s1 = s0;
      break;
    }
  }
  result.value = w;
  return result;
}

TransitionMap::TransitionMap(std::shared_ptr<const DriverFamily> family,
                             double a, double b, SolverConfig config)
    : family_(std::move(family)), a_(a), b_(b), config_(config) {
  if (!family_) throw DomainError("TransitionMap: family is null");
  config_.validate();
  if (!(a_ >= 0.0) || !(a_ <= b_) || b_ > family_->horizon()) {
    throw DomainError("TransitionMap: need 0 <= a <= b <= horizon");
  }
}

TransitionResult TransitionMap::evaluate(cplx z) const {
  return solve_transition(*family_, a_, b_, z, config_);
}

TransitionResult evaluate_map(const DriverFamily& family, double t, cplx z,
                              const SolverConfig& config) {
  return solve_transition(family, 0.0, t, z, config);
}

std::vector<TransitionResult> evaluate_map_many(const DriverFamily& family,
                                                double t,
                                                std::span<const cplx> zs,
                                                const SolverConfig& config,
                                                unsigned threads) {
  std::vector<TransitionResult> out(zs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, zs.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < zs.size(); ++i) {
      out[i] = evaluate_map(family, t, zs[i], config);
    }
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < zs.size(); i += threads) {
          out[i] = evaluate_map(family, t, zs[i], config);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& th : workers) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

HydrodynamicEstimate hydrodynamic_estimate(const DriverFamily& family,
                                           double t,
                                           const SolverConfig& config,
                                           const Ladder& ladder) {
  if (!(t >= 0.0)) throw DomainError("hydrodynamic_parameter: need t >= 0");
  HydrodynamicEstimate out;
  if (t == 0.0) return out;
  const LimitEstimate est = limit_at_infinity(
      [&](double y) {
        const cplx iy{0.0, y};
        return iy * (iy - evaluate_map(family, t, iy, config).value);
      },
      ladder);
  out.value = est.value.real();
  out.imag_residual = std::abs(est.value.imag());
  out.ladder_error = est.error;
  return out;
}

double hydrodynamic_parameter(const DriverFamily& family, double t,
                              const SolverConfig& config) {
  const HydrodynamicEstimate est = hydrodynamic_estimate(family, t, config);
  if (!(est.ladder_error <= 1e-3)) {
    throw ConvergenceError("hydrodynamic_parameter: ladder did not converge");
  }
  if (!(est.imag_residual < 1e-6)) {
    throw ConvergenceError(
        "hydrodynamic_parameter: imaginary residual above 1e-6");
  }
  return est.value;
}

double semigroup_defect(const DriverFamily& family, double a, double b,
                        double c, std::span<const cplx> zs,
                        const SolverConfig& config) {
  if (!(a >= 0.0 && a <= b && b <= c)) {
    throw DomainError("semigroup_defect: need 0 <= a <= b <= c");
  }
  double worst = 0.0;
  for (const cplx& z : zs) {
    const cplx direct = solve_transition(family, a, c, z, config).value;
    const cplx inner = solve_transition(family, b, c, z, config).value;
    const cplx chained = solve_transition(family, a, b, inner, config).value;
    worst = std::max(worst, std::abs(direct - chained));
  }
  return worst;
}

bool univalence_probe(const DriverFamily& family, double t,
                      std::span<const std::pair<cplx, cplx>> pairs,
                      const SolverConfig& config) {
  for (const auto& [z1, z2] : pairs) {
    if (z1.imag() < 0.1 || z2.imag() < 0.1) {
      throw DomainError("univalence_probe: points need Im >= 0.1");
    }
  }
  for (const auto& [z1, z2] : pairs) {
    if (std::abs(z1 - z2) <= 1e-6) continue;
    const cplx f1 = evaluate_map(family, t, z1, config).value;
    const cplx f2 = evaluate_map(family, t, z2, config).value;
    if (!(std::abs(f1 - f2) > 2.0 * config.tol)) return false;
  }
  return true;
}

}  // namespace chordal
