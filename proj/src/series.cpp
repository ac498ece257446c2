#include "chordal/series.hpp"

#include <algorithm>
#include <cmath>

#include "chordal/errors.hpp"

namespace chordal {

LaurentSeries::LaurentSeries(int top, std::vector<double> coeffs)
    : top_(top), c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("LaurentSeries: needs at least one term");
}

LaurentSeries LaurentSeries::constant(double value, int order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = value;
  return LaurentSeries(0, std::move(c));
}

LaurentSeries LaurentSeries::monomial(int power, int order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = 1.0;
  return LaurentSeries(power, std::move(c));
}

double LaurentSeries::coeff(int power) const {
  if (power > top_) return 0.0;
  if (power < floor()) {
    throw DomainError("LaurentSeries: coefficient below truncation order");
  }
  return c_[static_cast<std::size_t>(top_ - power)];
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& other) const {
  const int order = std::min(this->order(), other.order());
  std::vector<double> out(order + 1, 0.0);
  for (int i = 0; i <= order; ++i) {
    if (c_[i] == 0.0) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += c_[i] * other.c_[j];
  }
  return LaurentSeries(top_ + other.top_, std::move(out));
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& other) const {
  const int top = std::max(top_, other.top_);
  const int fl = std::max(floor(), other.floor());
  std::vector<double> out(top - fl + 1, 0.0);
  for (int p = top; p >= fl; --p) out[top - p] = coeff(p) + other.coeff(p);
  return LaurentSeries(top, std::move(out));
}

LaurentSeries LaurentSeries::operator*(double s) const {
  std::vector<double> out(c_);
  for (double& v : out) v *= s;
  return LaurentSeries(top_, std::move(out));
}

LaurentSeries LaurentSeries::inverse() const {
  if (c_[0] == 0.0) {
    throw DomainError("LaurentSeries: cannot invert a zero leading term");
  }
  const int order = this->order();
  std::vector<double> out(order + 1, 0.0);
  out[0] = 1.0 / c_[0];
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += c_[j] * out[k - j];
    out[k] = -s / c_[0];
  }
  return LaurentSeries(-top_, std::move(out));
}

LaurentSeries LaurentSeries::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  LaurentSeries result = constant(1.0, order());
  for (int i = 0; i < n; ++i) result = result * *this;
  return result;
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order >= this->order()) return *this;
  if (order < 0) throw DomainError("LaurentSeries: negative truncation order");
  return LaurentSeries(top_, std::vector<double>(c_.begin(), c_.begin() + order + 1));
}

}  // namespace chordal
