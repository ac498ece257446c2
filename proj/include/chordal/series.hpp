#pragma once

#include <vector>

namespace chordal {

/// Truncated Laurent series at infinity,
///
///   sum_{k=0}^{order} c[k] z^{top - k} + O(z^{top - order - 1}).
///
/// Arithmetic tracks the truncation order exactly: a product is known to the
/// smaller of the two relative orders, so no coefficient is ever reported
/// that the inputs do not determine.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int top, std::vector<double> coeffs);

  static LaurentSeries constant(double value, int order);
  static LaurentSeries monomial(int power, int order);

  int top() const { return top_; }
  /// Number of known terms minus one.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest power that is known.
  int floor() const { return top_ - order(); }
  const std::vector<double>& coeffs() const { return c_; }

  /// Coefficient of z^power; zero above top. Throws DomainError if the power
  /// lies below the truncation floor.
  double coeff(int power) const;

  LaurentSeries operator*(const LaurentSeries& other) const;
  LaurentSeries operator+(const LaurentSeries& other) const;
  LaurentSeries operator*(double s) const;
  /// 1 / series; requires a nonzero leading coefficient.
  LaurentSeries inverse() const;
  LaurentSeries pow(int n) const;
  /// Keeps at most `order` + 1 terms.
  LaurentSeries truncated(int order) const;

 private:
  int top_ = 0;
  std::vector<double> c_{0.0};
};

}  // namespace chordal
