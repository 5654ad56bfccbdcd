#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "relfree/power_series.hpp"
#include "relfree/rational.hpp"

namespace relfree {

/// Dense matrix over Q, row-major. Dimensions are fixed at construction.
class MatrixQ {
public:
  MatrixQ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("MatrixQ: dimensions must be >= 1");
  }

  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows)
      : MatrixQ(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("MatrixQ: ragged rows");
      std::size_t j = 0;
      for (const auto& x : row) at(i, j++) = x;
      ++i;
    }
  }

  static MatrixQ identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("MatrixQ: size mismatch in product");
    MatrixQ r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("MatrixQ: size mismatch in sum");
    MatrixQ r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
  }

  friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("MatrixQ: size mismatch in difference");
    MatrixQ r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
  }

  friend MatrixQ operator*(const MatrixQ& a, const Rational& c) {
    MatrixQ r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] * c;
    return r;
  }

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Entrywise lexicographic order; used for canonical group element ordering.
  friend bool operator<(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
      if (a.a_[i] != b.a_[i]) return a.a_[i] < b.a_[i];
    }
    return false;
  }

  Rational trace() const {
    if (!is_square()) throw std::invalid_argument("MatrixQ::trace: matrix not square");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
    }
    return s + "]";
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Exact determinant by Gaussian elimination with column pivoting.
inline Rational det(MatrixQ m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  Rational d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    const Rational inv = Rational(1) / m.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

/// det(I - m t) as a polynomial in t of degree <= d, padded with zeros up to
/// the requested truncation order.
inline PowerSeriesQ det_one_minus_gt(const MatrixQ& g, std::size_t order) {
  if (!g.is_square()) throw std::invalid_argument("det_one_minus_gt: matrix not square");
  const std::size_t d = g.rows();
  // Faddeev-LeVerrier: M_0 = 0, c_d = 1;
  // M_k = g M_{k-1} + c_{d-k+1} I, c_{d-k} = -tr(g M_k) / k.
  std::vector<Rational> c(d + 1);
  c[d] = Rational(1);
  MatrixQ mk(d, d);
  for (std::size_t k = 1; k <= d; ++k) {
    mk = g * mk;
    for (std::size_t i = 0; i < d; ++i) mk.at(i, i) += c[d - k + 1];
    c[d - k] = -(g * mk).trace() / Rational(static_cast<long>(k));
  }
  // det(sI - g) = sum_j c[j] s^j, so det(I - g t) = sum_k c[d-k] t^k.
  PowerSeriesQ p(order);
  for (std::size_t k = 0; k <= d && k <= order; ++k) p[k] = c[d - k];
  return p;
}

}  // namespace relfree
