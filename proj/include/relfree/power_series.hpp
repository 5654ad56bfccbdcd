#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "relfree/rational.hpp"

namespace relfree {

/// Univariate power series over Q, truncated at a fixed order N.
/// Holds exactly N+1 coefficients for degrees 0..N.
class PowerSeriesQ {
public:
  explicit PowerSeriesQ(std::size_t order) : coeff_(order + 1) {}
  PowerSeriesQ(std::size_t order, std::vector<Rational> coeff) : coeff_(std::move(coeff)) {
    coeff_.resize(order + 1);
  }

  static PowerSeriesQ constant(std::size_t order, const Rational& c) {
    PowerSeriesQ p(order);
    p.coeff_[0] = c;
    return p;
  }

  std::size_t order() const { return coeff_.size() - 1; }

  const Rational& operator[](std::size_t k) const {
    if (k >= coeff_.size()) throw std::out_of_range("PowerSeriesQ: coefficient past truncation");
    return coeff_[k];
  }
  Rational& operator[](std::size_t k) {
    if (k >= coeff_.size()) throw std::out_of_range("PowerSeriesQ: coefficient past truncation");
    return coeff_[k];
  }

  const std::vector<Rational>& coefficients() const { return coeff_; }

  PowerSeriesQ truncated(std::size_t order) const {
    std::vector<Rational> c(coeff_.begin(), coeff_.begin() + std::min(order + 1, coeff_.size()));
    return PowerSeriesQ(order, std::move(c));
  }

  friend PowerSeriesQ operator+(const PowerSeriesQ& a, const PowerSeriesQ& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeriesQ r(n);
    for (std::size_t k = 0; k <= n; ++k) r.coeff_[k] = a.coeff_[k] + b.coeff_[k];
    return r;
  }

  friend PowerSeriesQ operator-(const PowerSeriesQ& a, const PowerSeriesQ& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeriesQ r(n);
    for (std::size_t k = 0; k <= n; ++k) r.coeff_[k] = a.coeff_[k] - b.coeff_[k];
    return r;
  }

  friend PowerSeriesQ operator*(const PowerSeriesQ& a, const PowerSeriesQ& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeriesQ r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeff_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    return r;
  }

  PowerSeriesQ& operator*=(const Rational& c) {
    for (auto& x : coeff_) x *= c;
    return *this;
  }
  friend PowerSeriesQ operator*(PowerSeriesQ a, const Rational& c) { return a *= c; }

  friend bool operator==(const PowerSeriesQ& a, const PowerSeriesQ& b) {
    return a.coeff_ == b.coeff_;
  }

  /// "c0, c1, ..., cN"
  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < coeff_.size(); ++k) {
      if (k) s += ", ";
      s += coeff_[k].str();
    }
    return s;
  }

private:
  std::vector<Rational> coeff_;
};

/// Multiplicative inverse up to the truncation order; the constant term must
/// be nonzero.
inline PowerSeriesQ series_invert(const PowerSeriesQ& p) {
  if (p[0].is_zero())
    throw std::invalid_argument("series_invert: constant term is zero");
  const std::size_t n = p.order();
  PowerSeriesQ r(n);
  const Rational inv0 = Rational(1) / p[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += p[j] * r[k - j];
    r[k] = -inv0 * acc;
  }
  return r;
}

}  // namespace relfree
