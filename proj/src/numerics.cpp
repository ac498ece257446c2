#include "chordal/numerics.hpp"

#include <algorithm>
#include <limits>

#include "chordal/errors.hpp"

namespace chordal {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: order must be positive");
  if (n == 1) return {{0.0}, {2.0}};
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

LimitEstimate richardson_geometric(std::span<const cplx> values, double ratio,
                                   std::span<const int> powers) {
  std::vector<cplx> column(values.begin(), values.end());
  if (column.size() < 2) {
    return {column.empty() ? cplx{} : column.back(),
            std::numeric_limits<double>::infinity()};
  }
  for (int p : powers) {
    if (column.size() < 3) break;
    const double factor = std::pow(ratio, p);
    std::vector<cplx> next(column.size() - 1);
    for (std::size_t k = 0; k + 1 < column.size(); ++k) {
      next[k] = (factor * column[k + 1] - column[k]) / (factor - 1.0);
    }
    column = std::move(next);
  }
  const std::size_t n = column.size();
  return {column[n - 1], std::abs(column[n - 1] - column[n - 2])};
}

LimitEstimate limit_at_infinity(const std::function<cplx(double)>& f,
                                const Ladder& ladder) {
  std::vector<cplx> values;
  values.reserve(ladder.doublings + 1);
  double y = ladder.y0;
  for (int k = 0; k <= ladder.doublings; ++k, y *= 2.0) values.push_back(f(y));
  static constexpr int kPowers[] = {1, 2};
  return richardson_geometric(values, 2.0, kPowers);
}

LimitEstimate extrapolate_to_zero(std::span<const double> xs,
                                  std::span<const double> values) {
  if (xs.size() != values.size() || xs.empty()) {
    throw DomainError("extrapolate_to_zero: need matching, non-empty samples");
  }
  const std::size_t n = xs.size();
  if (n == 1) return {values[0], std::numeric_limits<double>::infinity()};
  // Neville tableau at 0. After the loop, p[0] interpolates all points and
  // p[1] interpolates all but the first (coarsest) one.
  std::vector<double> p(values.begin(), values.end());
  double without_first = values[n - 1];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      p[i] = (xs[i + level] * p[i] - xs[i] * p[i + 1]) /
             (xs[i + level] - xs[i]);
    }
    if (level == n - 2) without_first = p[1];
  }
  return {p[0], std::abs(p[0] - without_first)};
}

ChebyshevCollocation::ChebyshevCollocation(int m) : m_(m) {
  if (m < 2) throw DomainError("ChebyshevCollocation: degree must be >= 2");
  const int n = m + 1;
  nodes_.resize(n);
  for (int j = 0; j < n; ++j) nodes_[j] = std::cos(kPi * j / m);

  // Chebyshev coefficients from Lobatto values (DCT-I).
  coefficient_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      double w = (j == 0 || j == m) ? 0.5 : 1.0;
      double c = 2.0 / m * w * std::cos(kPi * k * j / m);
      if (k == 0 || k == m) c *= 0.5;
      coefficient_[static_cast<std::size_t>(k) * n + j] = c;
    }
  }

  // Integrate the Chebyshev series: int_x^1 T_k = F_k(1) - F_k(x) with
  // F_0 = T_1, F_1 = T_2/4, F_k = T_{k+1}/(2(k+1)) - T_{k-1}/(2(k-1)).
  auto cheb = [](int k, double x) { return std::cos(k * std::acos(x)); };
  auto antiderivative = [&](int k, double x) {
    if (k == 0) return x;
    if (k == 1) return 0.25 * cheb(2, x);
    return cheb(k + 1, x) / (2.0 * (k + 1)) - cheb(k - 1, x) / (2.0 * (k - 1));
  };
  std::vector<double> mode_integral(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    const double x = std::clamp(nodes_[j], -1.0, 1.0);
    for (int k = 0; k < n; ++k) {
      mode_integral[static_cast<std::size_t>(j) * n + k] =
          antiderivative(k, 1.0) - antiderivative(k, x);
    }
  }
  integral_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += mode_integral[static_cast<std::size_t>(j) * n + k] *
             coefficient_[static_cast<std::size_t>(k) * n + i];
      }
      integral_[static_cast<std::size_t>(j) * n + i] = s;
    }
  }
}

void ChebyshevCollocation::backward_integral(std::span<const cplx> values,
                                             std::span<cplx> out) const {
  const int n = m_ + 1;
  for (int j = 0; j < n; ++j) {
    cplx s{};
    const double* row = integral_.data() + static_cast<std::size_t>(j) * n;
    for (int i = 0; i < n; ++i) s += row[i] * values[i];
    out[j] = s;
  }
}

std::vector<cplx> ChebyshevCollocation::coefficients(
    std::span<const cplx> values) const {
  const int n = m_ + 1;
  std::vector<cplx> c(n);
  for (int k = 0; k < n; ++k) {
    cplx s{};
    const double* row = coefficient_.data() + static_cast<std::size_t>(k) * n;
    for (int i = 0; i < n; ++i) s += row[i] * values[i];
    c[k] = s;
  }
  return c;
}

}  // namespace chordal
