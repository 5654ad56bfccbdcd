#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "relfree/matrix.hpp"
#include "relfree/rational.hpp"

namespace relfree {

using VectorQ = std::vector<Rational>;

namespace detail {

/// In-place reduced row echelon form on a list of row vectors.
/// Returns the pivot column of each surviving row; zero rows are dropped.
inline std::vector<std::size_t> rref_rows(std::vector<VectorQ>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline bool is_zero_vector(const VectorQ& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace detail

/// A linear subspace of Q^n, stored as a basis in reduced row echelon form
/// so that equal subspaces compare equal.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  Subspace(std::size_t ambient_dim, std::vector<VectorQ> spanning)
      : ambient_(ambient_dim), basis_(std::move(spanning)) {
    for (const auto& v : basis_)
      if (v.size() != ambient_)
        throw std::invalid_argument("Subspace: vector length differs from ambient dimension");
    detail::rref_rows(basis_);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<VectorQ>& basis() const { return basis_; }

  bool contains(VectorQ v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("Subspace::contains: vector length mismatch");
    reduce_against_basis(v);
    return detail::is_zero_vector(v);
  }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  void reduce_against_basis(VectorQ& v) const {
    std::size_t row = 0;
    for (std::size_t c = 0; c < ambient_ && row < basis_.size(); ++c) {
      if (basis_[row][c].is_zero()) continue;  // not this row's pivot column
      // basis is in RREF: row `row` has pivot at its first nonzero column
      if (!v[c].is_zero()) {
        const Rational f = v[c];
        for (std::size_t j = c; j < ambient_; ++j) v[j] -= f * basis_[row][j];
      }
      ++row;
    }
  }

  std::size_t ambient_;
  std::vector<VectorQ> basis_;
};

/// Basis of the kernel {v : m v = 0}, in RREF. dim kernel = cols - rank.
inline Subspace kernel_basis(const MatrixQ& m) {
  const std::size_t n = m.cols();
  std::vector<VectorQ> rows(m.rows(), VectorQ(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
  const auto pivots = detail::rref_rows(rows);

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<VectorQ> kernel;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    VectorQ v(n);
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free_col];
    kernel.push_back(std::move(v));
  }
  return Subspace(n, std::move(kernel));
}

inline std::size_t rank(const MatrixQ& m) {
  std::vector<VectorQ> rows(m.rows(), VectorQ(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return detail::rref_rows(rows).size();
}

/// Subspace spanned by a list of vectors.
inline Subspace span_of(std::size_t ambient_dim, std::vector<VectorQ> vectors) {
  return Subspace(ambient_dim, std::move(vectors));
}

/// Vectors from `space`'s basis extending a basis of `sub` to a basis of
/// `space`. Requires sub to lie inside space.
inline std::vector<VectorQ> span_complement(const Subspace& space, const Subspace& sub) {
  if (space.ambient_dim() != sub.ambient_dim())
    throw std::invalid_argument("span_complement: ambient dimension mismatch");
  if (!space.contains(sub))
    throw std::invalid_argument("span_complement: sub is not contained in space");

  std::vector<VectorQ> rows = sub.basis();
  std::vector<VectorQ> complement;
  for (const auto& v : space.basis()) {
    std::vector<VectorQ> trial = rows;
    trial.push_back(v);
    if (detail::rref_rows(trial).size() > rows.size()) {
      complement.push_back(v);
      rows = std::move(trial);
    }
  }
  return complement;
}

}  // namespace relfree
