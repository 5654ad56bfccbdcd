#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relfree/matrix.hpp"
#include "relfree/partition.hpp"
#include "relfree/power_series.hpp"
#include "relfree/schur.hpp"

namespace relfree {

/// Graded multiplicity map lambda -> m_lambda describing a graded module
/// decomposition into the irreducibles W_d(lambda), truncated at total
/// degree N. Partitions with more than d parts are rejected.
class SymmSeries {
public:
  SymmSeries(std::size_t d, std::size_t n) : d_(d), n_(n) {}

  std::size_t d() const { return d_; }
  std::size_t truncation() const { return n_; }
  const std::map<Partition, long long>& terms() const { return terms_; }

  long long multiplicity(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
  }

  void set(const Partition& lambda, long long mult) {
    if (lambda.num_parts() > d_)
      throw std::invalid_argument("SymmSeries: partition has more than d parts");
    if (static_cast<std::size_t>(lambda.weight()) > n_)
      throw std::invalid_argument("SymmSeries: partition weight above truncation");
    if (mult == 0)
      terms_.erase(lambda);
    else
      terms_[lambda] = mult;
  }

  void add(const Partition& lambda, long long mult) { set(lambda, multiplicity(lambda) + mult); }

  /// Termwise difference; mismatched truncations truncate to the minimum.
  friend SymmSeries operator-(const SymmSeries& a, const SymmSeries& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("SymmSeries: variable count mismatch");
    SymmSeries r(a.d_, std::min(a.n_, b.n_));
    for (const auto& [lambda, m] : a.terms_)
      if (static_cast<std::size_t>(lambda.weight()) <= r.n_) r.add(lambda, m);
    for (const auto& [lambda, m] : b.terms_)
      if (static_cast<std::size_t>(lambda.weight()) <= r.n_) r.add(lambda, -m);
    return r;
  }

  friend bool operator==(const SymmSeries& a, const SymmSeries& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Coefficients of the Hilbert series: dim of each graded piece, degrees 0..N.
  std::vector<long long> hilbert_dims() const {
    std::vector<long long> dims(n_ + 1, 0);
    for (const auto& [lambda, m] : terms_)
      dims[static_cast<std::size_t>(lambda.weight())] += m * weyl_dim(lambda, d_);
    return dims;
  }

  /// Lines "l1,l2,...: multiplicity", weight-major order.
  std::string str() const {
    std::string s;
    for (const auto& [lambda, m] : sorted_by_weight()) {
      std::string parts;
      for (std::size_t i = 0; i < lambda.num_parts(); ++i) {
        if (i) parts += ",";
        parts += std::to_string(lambda.parts()[i]);
      }
      if (parts.empty()) parts = "()";  // the empty partition (degree 0)
      s += parts + ": " + std::to_string(m) + "\n";
    }
    return s;
  }

  std::vector<std::pair<Partition, long long>> sorted_by_weight() const {
    std::vector<std::pair<Partition, long long>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      return a.first.weight() < b.first.weight();
    });
    return v;
  }

private:
  std::size_t d_, n_;
  std::map<Partition, long long> terms_;
};

/// Module series of the degree-graded left-nilpotent right-symmetric algebra
/// on d generators: (1) once, then (n) and (n-1,1) once each for n >= 2.
inline SymmSeries glmodule_series_L(std::size_t d, std::size_t n) {
  if (d < 2) throw std::invalid_argument("glmodule_series_L: requires d >= 2");
  if (n < 1) throw std::invalid_argument("glmodule_series_L: requires N >= 1");
  SymmSeries s(d, n);
  s.set(Partition{1}, 1);
  for (int k = 2; k <= static_cast<int>(n); ++k) {
    s.set(Partition{k}, 1);
    s.set(Partition{k - 1, 1}, 1);
  }
  return s;
}

/// Module series of the free metabelian Lie algebra: (1) once, then (n-1,1)
/// once for each n >= 2.
inline SymmSeries glmodule_series_metabelian(std::size_t d, std::size_t n) {
  if (d < 2) throw std::invalid_argument("glmodule_series_metabelian: requires d >= 2");
  if (n < 1) throw std::invalid_argument("glmodule_series_metabelian: requires N >= 1");
  SymmSeries s(d, n);
  s.set(Partition{1}, 1);
  for (int k = 2; k <= static_cast<int>(n); ++k) s.set(Partition{k - 1, 1}, 1);
  return s;
}

/// Module series of the polynomial algebra: (n) once for each n >= 0.
inline SymmSeries glmodule_series_poly(std::size_t d, std::size_t n) {
  SymmSeries s(d, n);
  s.set(Partition{}, 1);
  for (int k = 1; k <= static_cast<int>(n); ++k) s.set(Partition{k}, 1);
  return s;
}

/// The per-element summand of the Molien-Formanek average: coefficient of
/// z^n is sum over |lambda|=n of m_lambda * schur_char(lambda, g).
inline PowerSeriesQ series_eval_at_element(const SymmSeries& s, const MatrixQ& g) {
  if (!g.is_square() || g.rows() != s.d())
    throw std::invalid_argument("series_eval_at_element: matrix size differs from d");
  const std::size_t n = s.truncation();
  const PowerSeriesQ h = complete_homogeneous_series(g, n);
  PowerSeriesQ out(n);
  for (const auto& [lambda, m] : s.terms()) {
    const auto w = static_cast<std::size_t>(lambda.weight());
    out[w] += schur_char_from_h(lambda, h) * Rational(m);
  }
  return out;
}

}  // namespace relfree
