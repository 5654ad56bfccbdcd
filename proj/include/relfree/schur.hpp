#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "relfree/matrix.hpp"
#include "relfree/partition.hpp"
#include "relfree/power_series.hpp"
#include "relfree/rational.hpp"

namespace relfree {

/// dim W_d(lambda): the number of semistandard Young tableaux of shape lambda
/// with entries in 1..d, by the hook content product. Rejects partitions with
/// more than d parts.
inline long long weyl_dim(const Partition& lambda, std::size_t d) {
  if (lambda.num_parts() > d)
    throw std::invalid_argument("weyl_dim: partition has more than d parts");
  const auto& parts = lambda.parts();

  // conjugate partition column lengths
  const int lam1 = parts.empty() ? 0 : parts[0];
  std::vector<int> conj(lam1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) ++conj[j];

  mpz_class num(1), den(1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      const long content = static_cast<long>(j) - static_cast<long>(i);
      const long hook = (parts[i] - j) + (conj[j] - static_cast<long>(i)) - 1;
      num *= static_cast<long>(d) + content;
      den *= hook;
    }
  }
  mpz_class q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dim: hook content product not integral");
  return q.get_si();
}

/// All partitions with at most d parts obtained from lambda by adding one
/// box, in top-to-bottom row order.
inline std::vector<Partition> branch_add_box(const Partition& lambda, std::size_t d) {
  if (lambda.num_parts() > d)
    throw std::invalid_argument("branch_add_box: partition has more than d parts");
  std::vector<Partition> out;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0 || parts[i - 1] > parts[i]) {
      std::vector<int> nu = parts;
      ++nu[i];
      out.push_back(Partition(std::move(nu)));
    }
  }
  if (parts.size() < d) {
    std::vector<int> nu = parts;
    nu.push_back(1);
    out.push_back(Partition(std::move(nu)));
  }
  return out;
}

/// Complete homogeneous symmetric functions of the eigenvalues of g:
/// sum_m h_m(g) t^m = 1 / det(I - g t), exact in Q.
inline PowerSeriesQ complete_homogeneous_series(const MatrixQ& g, std::size_t order) {
  return series_invert(det_one_minus_gt(g, order));
}

/// Schur function of lambda evaluated on the h-series of a fixed matrix via
/// the Jacobi-Trudi determinant s_lambda = det(h_{lambda_i - i + j}).
inline Rational schur_char_from_h(const Partition& lambda, const PowerSeriesQ& h) {
  const std::size_t l = lambda.num_parts();
  if (l == 0) return Rational(1);
  MatrixQ jt(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const long m = lambda.parts()[i] - static_cast<long>(i) + static_cast<long>(j);
      if (m < 0) continue;  // h_m = 0 for negative m
      if (static_cast<std::size_t>(m) > h.order())
        throw std::invalid_argument("schur_char_from_h: h-series truncated too low");
      jt.at(i, j) = h[static_cast<std::size_t>(m)];
    }
  }
  return det(jt);
}

/// Trace of g acting on W_d(lambda), computed without eigenvalue extraction:
/// S_lambda(xi_1(g),...,xi_d(g)) stays in Q for rational g.
inline Rational schur_char(const Partition& lambda, const MatrixQ& g) {
  if (!g.is_square()) throw std::invalid_argument("schur_char: matrix not square");
  if (lambda.num_parts() > g.rows())
    throw std::invalid_argument("schur_char: partition has more than d parts");
  const std::size_t l = lambda.num_parts();
  if (l == 0) return Rational(1);
  const std::size_t need = static_cast<std::size_t>(lambda.parts()[0]) + l - 1;
  return schur_char_from_h(lambda, complete_homogeneous_series(g, need));
}

}  // namespace relfree
