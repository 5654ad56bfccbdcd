#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "relfree/action.hpp"
#include "relfree/invariants.hpp"
#include "relfree/linalg.hpp"
#include "relfree/matrix.hpp"
#include "relfree/rational.hpp"

namespace relfree {

/// Nilpotent derivation in Jordan form: block sizes p_1,...,p_k acting on
/// variables grouped consecutively, sending each variable in a block to the
/// next one and the last to zero. With the column convention of substitute,
/// that is a subdiagonal of ones inside each block.
struct WeitzenbockDerivation {
  std::size_t d = 0;
  std::vector<int> blocks;
  MatrixQ matrix = MatrixQ::identity(1);
};

inline WeitzenbockDerivation weitzenbock_from_blocks(const std::vector<int>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("weitzenbock_from_blocks: no blocks");
  for (int b : blocks)
    if (b < 1) throw std::invalid_argument("weitzenbock_from_blocks: block sizes must be >= 1");
  const std::size_t d =
      static_cast<std::size_t>(std::accumulate(blocks.begin(), blocks.end(), 0));
  MatrixQ m(d, d);
  std::size_t offset = 0;
  for (int b : blocks) {
    for (int k = 0; k + 1 < b; ++k)
      m.at(offset + static_cast<std::size_t>(k) + 1, offset + static_cast<std::size_t>(k)) =
          Rational(1);
    offset += static_cast<std::size_t>(b);
  }
  return WeitzenbockDerivation{d, blocks, m};
}

/// Constants of the derivation in one homogeneous component: the kernel of
/// its induced linear map there.
inline GradedInvariantBasis delta_constants(const MatrixQ& delta, AlgebraKind kind, int n) {
  GradedComponent comp(kind, delta.rows(), n);
  return GradedInvariantBasis{kind, delta.rows(), n, kernel_basis(derivation_matrix(delta, comp))};
}

inline GradedInvariantBasis delta_constants(const WeitzenbockDerivation& delta, AlgebraKind kind,
                                            int n) {
  return delta_constants(delta.matrix, kind, n);
}

/// exp(alpha * delta) for a nilpotent delta; the series terminates at the
/// nilpotency index.
inline MatrixQ exp_automorphism(const MatrixQ& delta, const Rational& alpha) {
  if (delta.rows() != delta.cols())
    throw std::invalid_argument("exp_automorphism: matrix must be square");
  const std::size_t d = delta.rows();
  const MatrixQ zero(d, d);
  MatrixQ acc = MatrixQ::identity(d);
  MatrixQ power = MatrixQ::identity(d);
  Rational coeff(1);
  for (std::size_t k = 1; k <= d; ++k) {
    power = power * delta;
    if (power == zero) return acc;
    coeff *= alpha / Rational(static_cast<long>(k));
    acc = acc + power * coeff;
  }
  // A nilpotent d x d matrix has index at most d, so surviving the loop
  // means the input was not nilpotent.
  throw std::invalid_argument("exp_automorphism: matrix is not nilpotent");
}

inline MatrixQ exp_automorphism(const WeitzenbockDerivation& delta, const Rational& alpha) {
  return exp_automorphism(delta.matrix, alpha);
}

/// Fixed vectors of a single algebra automorphism on one component.
inline GradedInvariantBasis fixed_space(const MatrixQ& g, AlgebraKind kind, int n) {
  GradedComponent comp(kind, g.rows(), n);
  return GradedInvariantBasis{
      kind, g.rows(), n,
      detail::fixed_space_of_actions({action_matrix(g, comp)}, comp.dim())};
}

}  // namespace relfree
