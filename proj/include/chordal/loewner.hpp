#pragma once

#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "chordal/numerics.hpp"
#include "chordal/transforms.hpp"

namespace chordal {

/// Time-indexed family of probability measures {mu_t} driving the chordal
/// Loewner equation. Two forms are supported: piecewise constant in time
/// (right-continuous at breakpoints) and a single moving atom delta_{U(t)}
/// with U piecewise linear between samples.
class DriverFamily {
 public:
  struct PiecewiseConstant {
    std::vector<double> breaks;         // 0 = t_0 < t_1 < ...
    std::vector<RealMeasure> measures;  // measures[i] is active on [t_i, t_{i+1})
  };
  struct MovingAtom {
    std::vector<std::pair<double, double>> samples;  // (time, position)
  };

  static DriverFamily piecewise_constant(std::vector<double> breaks,
                                         std::vector<RealMeasure> measures,
                                         double horizon);
  static DriverFamily constant(RealMeasure mu, double horizon);
  static DriverFamily moving_atom(
      std::vector<std::pair<double, double>> samples);

  double horizon() const { return horizon_; }
  /// Bound M with supp mu_t in [-M, M] for every t.
  double support_bound() const { return support_bound_; }
  bool is_moving_atom() const {
    return std::holds_alternative<MovingAtom>(variant_);
  }

  RealMeasure measure_at(double t) const;

  /// int mu_t(dx) / (w - x).
  cplx cauchy_at(double t, cplx w) const;

  /// Piecewise-constant drivers only: the measure active at t.
  const RealMeasure& active_measure(double t) const;
  /// Moving-atom drivers only: U(t) and the slope of its linear piece.
  double atom_position(double t) const;
  double atom_velocity(double t) const;

  /// Times strictly inside (a, b) where the driver is not smooth.
  std::vector<double> knots_between(double a, double b) const;

 private:
  DriverFamily() = default;
  std::size_t piece_index(double t) const;

  std::variant<PiecewiseConstant, MovingAtom> variant_;
  double horizon_ = 0.0;
  double support_bound_ = 0.0;
};

/// driver_measure_at: the measure mu_t. Throws DomainError outside [0, T].
RealMeasure driver_measure_at(const DriverFamily& family, double t);

struct SolverConfig {
  double tol = 1e-9;                 // absolute error target per point
  double max_step = 1.0;
  double contraction_margin = 0.5;   // substep h <= margin * Im(w)^2
  bool record_trace = false;

  void validate() const;
};

/// Certificate data for one substep of the transition solver.
struct SubstepRecord {
  double start = 0.0;   // s0
  double end = 0.0;     // s1 (the solver walks from b down to a)
  double im_floor = 0.0;
  int iterations = 0;
  /// The factorial bound Im^{-(2n+1)} h^{n+1} / (n+1)! for n = 0..iterations-1.
  std::vector<double> picard_bounds;
  /// Observed sup-norm increments |B_{n+1} - B_n| over the collocation nodes.
  std::vector<double> increments;
  double truncation_error = 0.0;
  double collocation_error = 0.0;
};

struct TransitionResult {
  cplx value;
  /// Sum of local truncation bounds plus collocation estimates, each
  /// amplified by the derivative bound 1 + (s - a) / Im^2 of the remaining
  /// transition.
  double err_bound = 0.0;
  int substeps = 0;
  std::vector<SubstepRecord> trace;
};

/// B(a, b; .) for a fixed driver. Immutable, cheap to copy, and safe to
/// evaluate from many threads at once.
class TransitionMap {
 public:
  TransitionMap(std::shared_ptr<const DriverFamily> family, double a, double b,
                SolverConfig config = {});

  double a() const { return a_; }
  double b() const { return b_; }
  const SolverConfig& config() const { return config_; }
  const DriverFamily& family() const { return *family_; }

  TransitionResult evaluate(cplx z) const;
  cplx operator()(cplx z) const { return evaluate(z).value; }

 private:
  std::shared_ptr<const DriverFamily> family_;
  double a_;
  double b_;
  SolverConfig config_;
};

/// B(a, b; z) via Picard iteration on collocated substeps chained by the
/// semigroup identity.
TransitionResult solve_transition(const DriverFamily& family, double a,
                                  double b, cplx z,
                                  const SolverConfig& config = {});

/// f(t; z) = B(0, t; z).
TransitionResult evaluate_map(const DriverFamily& family, double t, cplx z,
                              const SolverConfig& config = {});

/// f(t; z) for many points, split across `threads` workers (0 = hardware
/// concurrency). Output order matches input order.
std::vector<TransitionResult> evaluate_map_many(const DriverFamily& family,
                                                double t,
                                                std::span<const cplx> zs,
                                                const SolverConfig& config = {},
                                                unsigned threads = 0);

struct HydrodynamicEstimate {
  double value = 0.0;
  double imag_residual = 0.0;
  double ladder_error = 0.0;
};

/// Extrapolated lim iy [iy - f(t; iy)], which must equal t.
HydrodynamicEstimate hydrodynamic_estimate(const DriverFamily& family,
                                           double t,
                                           const SolverConfig& config = {},
                                           const Ladder& ladder = {});
double hydrodynamic_parameter(const DriverFamily& family, double t,
                              const SolverConfig& config = {});

/// max_z |B(a, c; z) - B(a, b; B(b, c; z))|.
double semigroup_defect(const DriverFamily& family, double a, double b,
                        double c, std::span<const cplx> zs,
                        const SolverConfig& config = {});

/// True iff distinct pairs (|z1 - z2| > 1e-6) have images further apart than
/// 2 * tol. Every point must have Im >= 0.1.
bool univalence_probe(const DriverFamily& family, double t,
                      std::span<const std::pair<cplx, cplx>> pairs,
                      const SolverConfig& config = {});

}  // namespace chordal
