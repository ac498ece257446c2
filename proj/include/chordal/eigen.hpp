#pragma once

#include <cstddef>
#include <vector>

namespace chordal {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::vector<std::vector<double>> const& rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::vector<std::vector<double>> to_rows() const;

  /// max |a_ij - a_ji|; throws DomainError for non-square input.
  double symmetry_defect() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// All eigenvalues of a real symmetric matrix, ascending, by cyclic Jacobi
/// rotations. The input is symmetrized first; a symmetry defect above 1e-9
/// or a non-square input throws DomainError.
std::vector<double> symmetric_eigenvalues(const Matrix& m);

}  // namespace chordal
