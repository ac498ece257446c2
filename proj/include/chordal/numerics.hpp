#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace chordal {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Gauss–Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Computes the n-point Gauss–Legendre rule by Newton iteration on P_n.
/// Throws DomainError for n < 1.
QuadratureRule gauss_legendre(int n);

/// Result of an extrapolated limit: the estimate and the size of the last
/// correction, used as the convergence criterion.
struct LimitEstimate {
  cplx value;
  double error = 0.0;
};

/// Ladder of sample points y_k = y0 * 2^k, k = 0..doublings, used for every
/// y -> infinity limit in the library.
struct Ladder {
  double y0 = 8.0;
  int doublings = 10;
};

/// Richardson extrapolation of samples taken on a geometric ladder
/// (y_{k+1} = ratio * y_k) whose error expands in the given powers of 1/y.
/// Each power is eliminated in turn; the returned error is the difference of
/// the last two entries in the final column.
LimitEstimate richardson_geometric(std::span<const cplx> values, double ratio,
                                   std::span<const int> powers);

/// Estimates lim_{y->inf} f(y) on the ladder, eliminating 1/y and 1/y^2.
LimitEstimate limit_at_infinity(const std::function<cplx(double)>& f,
                                const Ladder& ladder = {});

/// Polynomial (Neville) extrapolation of samples (x_k, v_k) to x = 0.
/// The error is the change contributed by the final point.
LimitEstimate extrapolate_to_zero(std::span<const double> xs,
                                  std::span<const double> values);

namespace detail {

template <class T, class F>
T simpson_step(F& f, double a, double b, T fa, T fm, T fb, T whole,
               double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step<T>(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step<T>(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
/// The interval is first split into `panels` pieces so that narrow features
/// wider than a panel are never skipped by the initial samples.
template <class T = double, class F>
T adaptive_simpson(F&& f, double a, double b, double tol, int panels = 1,
                   int max_depth = 48) {
  if (panels < 1) panels = 1;
  const double width = (b - a) / panels;
  T total{};
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double hi = (p + 1 == panels) ? b : lo + width;
    const T flo = f(lo);
    const T fhi = f(hi);
    const T fm = f(0.5 * (lo + hi));
    const T whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
    total += detail::simpson_step<T>(f, lo, hi, flo, fm, fhi, whole,
                                     tol / panels, max_depth);
  }
  return total;
}

/// Chebyshev–Lobatto collocation on [-1, 1] with m+1 nodes
/// tau_j = cos(pi j / m) (so tau_0 = 1, tau_m = -1).
///
/// `backward_integral` maps node values of g to the node values of
/// int_{tau_j}^{1} p(s) ds, where p interpolates g. `coefficients` maps node
/// values to Chebyshev coefficients of the interpolant.
class ChebyshevCollocation {
 public:
  explicit ChebyshevCollocation(int m);

  int degree() const { return m_; }
  std::span<const double> nodes() const { return nodes_; }

  /// out[j] = int_{tau_j}^{1} p(s) ds for the interpolant p of values.
  void backward_integral(std::span<const cplx> values,
                         std::span<cplx> out) const;

  /// Chebyshev coefficients c_0..c_m of the interpolant.
  std::vector<cplx> coefficients(std::span<const cplx> values) const;

 private:
  int m_;
  std::vector<double> nodes_;
  std::vector<double> integral_;      // (m+1) x (m+1), row-major
  std::vector<double> coefficient_;   // (m+1) x (m+1), row-major
};

}  // namespace chordal
