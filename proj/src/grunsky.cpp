#include "chordal/grunsky.hpp"

#include <algorithm>
#include <cmath>

#include "chordal/errors.hpp"
#include "chordal/series.hpp"

namespace chordal {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

void require_normalized(const SeriesCoefficients& g) {
  if (g.coeffs.empty() || std::abs(g.coeffs[0] - 1.0) > 1e-12) {
    throw DomainError("series must be normalized with leading coefficient 1");
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::boundary: return "boundary";
    case Verdict::fail: return "fail";
  }
  return "fail";
}

std::vector<double> moments_to_alpha(std::span<const double> a) {
  if (a.empty() || std::abs(a[0] - 1.0) > 1e-12) {
    throw DomainError("moments_to_alpha: a_0 must equal 1");
  }
  const int m = static_cast<int>(a.size());
  std::vector<double> alpha(m, 0.0);
  for (int n = 0; n < m; ++n) {
    double s = 0.0;
    for (int k = 0; 2 * k <= n; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      s += sign * binomial(n - k, n - 2 * k) * a[n - 2 * k];
    }
    alpha[n] = s;
  }
  return alpha;
}

std::vector<double> alpha_to_beta(std::span<const double> alpha) {
  if (alpha.empty() || std::abs(alpha[0] - 1.0) > 1e-12) {
    throw DomainError("alpha_to_beta: alpha_0 must equal 1");
  }
  const std::size_t m = alpha.size();
  std::vector<double> beta(m, 0.0);
  beta[0] = 1.0 / alpha[0];
  for (std::size_t n = 1; n < m; ++n) {
    double s = 0.0;
    for (std::size_t j = 1; j <= n; ++j) s += alpha[j] * beta[n - j];
    beta[n] = -s / alpha[0];
  }
  return beta;
}

std::vector<Polynomial> faber_polynomials(const SeriesCoefficients& g, int N) {
  require_normalized(g);
  if (N < 0) throw DomainError("faber_polynomials: N must be non-negative");
  if (N > g.tail_length()) {
    throw DomainError("faber_polynomials: N exceeds available series data");
  }
  // b[k] is the coefficient of zeta^{-k}: g = zeta + b[0] + b[1]/zeta + ...
  auto b = [&](int k) { return g.coeffs[static_cast<std::size_t>(k) + 1]; };
  std::vector<Polynomial> F;
  F.reserve(N + 1);
  F.push_back({1.0});
  if (N == 0) return F;
  F.push_back({-b(0), 1.0});
  // F_{n+1} = (w - b_0) F_n - sum_{k=1}^{n} b_k F_{n-k} - n b_n
  for (int n = 1; n < N; ++n) {
    Polynomial next(n + 2, 0.0);
    const Polynomial& fn = F[n];
    for (int i = 0; i <= n; ++i) {
      next[i + 1] += fn[i];
      next[i] -= b(0) * fn[i];
    }
    for (int k = 1; k <= n; ++k) {
      const Polynomial& fk = F[n - k];
      for (std::size_t i = 0; i < fk.size(); ++i) next[i] -= b(k) * fk[i];
    }
    next[0] -= n * b(n);
    F.push_back(std::move(next));
  }
  return F;
}

Matrix grunsky_coefficients(const SeriesCoefficients& g, int N) {
  require_normalized(g);
  if (N < 1) throw DomainError("grunsky_coefficients: N must be positive");
  if (g.tail_length() < 2 * N) {
    throw DomainError(
        "grunsky_coefficients: need 2N tail coefficients of the series");
  }
  // S_n = F_n(g(z)) from the Faber recursion evaluated on series,
  //   S_{n+1} = (g - b_0) S_n - sum_{k=1}^n b_k S_{n-k} - n b_n,
  // which keeps every S_n close to z^n. Expanding F_n in powers of w and
  // composing with g^j instead cancels large terms. g is known through
  // z^{1 - 2N}, so S_n is known through z^{n - 2N}, covering z^{-N} for n <= N.
  const int order = 2 * N;
  const std::vector<double>& c = g.coeffs;
  std::vector<double> shifted(c.begin(), c.begin() + order + 1);
  shifted[1] = 0.0;
  const LaurentSeries g_minus_b0(1, std::move(shifted));
  std::vector<LaurentSeries> S;
  S.reserve(N + 1);
  S.push_back(LaurentSeries::constant(1.0, order));
  for (int n = 0; n < N; ++n) {
    LaurentSeries next = g_minus_b0 * S[n];
    for (int k = 1; k <= n; ++k) next = next + S[n - k] * (-c[k + 1]);
    if (n > 0) next = next + LaurentSeries::constant(-n * c[n + 1], order);
    S.push_back(std::move(next));
  }

  Matrix beta(N, N);
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= N; ++k) beta(n - 1, k - 1) = S[n].coeff(-k);
  }
  return beta;
}

Matrix grunsky_matrix(const SeriesCoefficients& g, int N) {
  Matrix c = grunsky_coefficients(g, N);
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= N; ++k) {
      c(n - 1, k - 1) *= std::sqrt(static_cast<double>(k) / n);
    }
  }
  return c;
}

GrunskyReport univalence_certificate(std::span<const double> moments, int N,
                                     double boundary_tol) {
  if (N < 1) throw DomainError("univalence_certificate: order must be >= 1");
  if (!(boundary_tol >= 0.0)) {
    throw DomainError("univalence_certificate: boundary_tol must be >= 0");
  }
  if (moments.size() < static_cast<std::size_t>(2 * N + 1)) {
    throw DomainError("univalence_certificate: need moments a_0..a_{2N}");
  }
  if (std::abs(moments[0] - 1.0) > 1e-12) {
    throw DomainError("univalence_certificate: a_0 must equal 1");
  }
  const std::size_t last_even = (moments.size() - 1) / 2 * 2;
  if (last_even >= 2) {
    const double root = std::pow(std::abs(moments[last_even]),
                                 1.0 / static_cast<double>(last_even));
    if (root > 2.0 + 1e-9) {
      throw DomainError(
          "univalence_certificate: moments indicate support outside [-2, 2]; "
          "rescale the measure first");
    }
  }
  const std::vector<double> a(moments.begin(), moments.begin() + 2 * N + 1);
  const std::vector<double> beta = alpha_to_beta(moments_to_alpha(a));

  GrunskyReport report;
  report.N = N;
  report.boundary_tol = boundary_tol;
  report.c_matrix = grunsky_matrix(SeriesCoefficients{beta}, N);
  report.symmetry_defect = report.c_matrix.symmetry_defect();
  double scale = 1.0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      scale = std::max(scale, std::abs(report.c_matrix(i, j)));
    }
  }
  if (report.symmetry_defect > 1e-10 * scale) {
    throw ConvergenceError(
        "univalence_certificate: Grunsky matrix lost symmetry in floating "
        "point");
  }
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      const double avg = 0.5 * (report.c_matrix(i, j) + report.c_matrix(j, i));
      report.c_matrix(i, j) = report.c_matrix(j, i) = avg;
    }
  }
  report.eigenvalues = symmetric_eigenvalues(report.c_matrix);
  for (double l : report.eigenvalues) {
    report.max_abs_eigenvalue = std::max(report.max_abs_eigenvalue, std::abs(l));
  }
  if (report.max_abs_eigenvalue < 1.0 - boundary_tol) {
    report.verdict = Verdict::pass;
  } else if (report.max_abs_eigenvalue > 1.0 + boundary_tol) {
    report.verdict = Verdict::fail;
  } else {
    report.verdict = Verdict::boundary;
  }
  return report;
}

}  // namespace chordal
