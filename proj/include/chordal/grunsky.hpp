#pragma once

#include <span>
#include <string>
#include <vector>

#include "chordal/eigen.hpp"

namespace chordal {

/// Laurent tail at infinity, coeffs[0] z + coeffs[1] + coeffs[2] / z + ...
/// For a map normalized at infinity coeffs[0] = 1 and coeffs[k + 1] = b_k.
struct SeriesCoefficients {
  std::vector<double> coeffs;

  /// Number of known tail coefficients b_0, b_1, ...
  int tail_length() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Polynomial with ascending coefficients, p[k] multiplies w^k.
using Polynomial = std::vector<double>;

enum class Verdict { pass, boundary, fail };
std::string to_string(Verdict v);

struct GrunskyReport {
  int N = 0;
  Matrix c_matrix;
  std::vector<double> eigenvalues;   // ascending
  double max_abs_eigenvalue = 0.0;
  Verdict verdict = Verdict::fail;
  double boundary_tol = 1e-8;
  double symmetry_defect = 0.0;
};

/// alpha_n = sum_{k <= n/2} a_{n-2k} (-1)^k binom(n-k, n-2k): the coefficients
/// of G(psi(z)) = sum alpha_n z^{-(n+1)} with psi(z) = z + 1/z.
std::vector<double> moments_to_alpha(std::span<const double> moments);

/// Solves the triangular convolution system sum_j alpha_j beta_{n-j} = [n = 0],
/// giving F(psi(z)) = sum beta_n z^{1-n}.
std::vector<double> alpha_to_beta(std::span<const double> alpha);

/// Faber polynomials F_0..F_N of g, from the recursion obtained by matching
/// powers of zeta in zeta g'(zeta) = (g(zeta) - w) sum F_n(w) zeta^{-n}.
std::vector<Polynomial> faber_polynomials(const SeriesCoefficients& g, int N);

/// beta_{nk}, n, k = 1..N, from F_n(g(z)) = z^n + sum_k beta_{nk} z^{-k}.
/// Row n-1, column k-1 holds beta_{nk}. Needs 2N tail coefficients.
Matrix grunsky_coefficients(const SeriesCoefficients& g, int N);

/// Grunsky matrix c_{nk} = sqrt(k/n) beta_{nk}.
Matrix grunsky_matrix(const SeriesCoefficients& g, int N);

/// Moment pipeline moments -> alpha -> beta -> Grunsky matrix -> eigenvalues
/// for a probability measure supported in [-2, 2]. Needs a_0..a_{2N}.
GrunskyReport univalence_certificate(std::span<const double> moments, int N,
                                     double boundary_tol = 1e-8);

}  // namespace chordal
