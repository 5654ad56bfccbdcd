#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "relfree/action.hpp"
#include "relfree/group.hpp"
#include "relfree/linalg.hpp"
#include "relfree/matrix.hpp"
#include "relfree/partition.hpp"
#include "relfree/power_series.hpp"
#include "relfree/rational.hpp"
#include "relfree/schur.hpp"
#include "relfree/symm_series.hpp"

namespace relfree {

/// Invariant subspace of one homogeneous component, in the coordinates of
/// that component's monomial basis.
struct GradedInvariantBasis {
  AlgebraKind kind;
  std::size_t d;
  int degree;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
};

namespace detail {

/// Vectors fixed by every generator: kernel of the stacked (A(g) - I).
inline Subspace fixed_space_of_actions(const std::vector<MatrixQ>& actions, std::size_t m) {
  if (actions.empty()) {
    std::vector<VectorQ> rows;
    for (std::size_t i = 0; i < m; ++i) {
      VectorQ v(m, Rational(0));
      v[i] = Rational(1);
      rows.push_back(std::move(v));
    }
    return Subspace(m, rows);
  }
  MatrixQ stacked(actions.size() * m, m);
  for (std::size_t a = 0; a < actions.size(); ++a) {
    if (actions[a].rows() != m || actions[a].cols() != m)
      throw std::invalid_argument("fixed_space: action size mismatch");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rational v = actions[a].at(i, j);
        if (i == j) v -= Rational(1);
        stacked.at(a * m + i, j) = v;
      }
  }
  return kernel_basis(stacked);
}

}  // namespace detail

/// Invariants of the degree-n component under the whole group. Fixed by the
/// generators is fixed by everything, so only generator actions are built.
inline GradedInvariantBasis fixed_space(const FiniteMatrixGroup& G, AlgebraKind kind, int n) {
  GradedComponent comp(kind, G.d(), n);
  std::vector<MatrixQ> actions;
  actions.reserve(G.generators().size());
  for (const auto& g : G.generators()) actions.push_back(action_matrix(g, comp));
  return GradedInvariantBasis{kind, G.d(), n, detail::fixed_space_of_actions(actions, comp.dim())};
}

/// Fixed vectors of the natural degree-1 action, where every algebra kind
/// acts by the matrices themselves.
inline Subspace linear_invariants(const FiniteMatrixGroup& G) {
  std::vector<MatrixQ> gens = G.generators();
  return detail::fixed_space_of_actions(gens, G.d());
}

/// Averaging projector onto the invariants, in coordinates.
inline VectorQ reynolds_project(const FiniteMatrixGroup& G, const GradedComponent& comp,
                                const VectorQ& v) {
  if (v.size() != comp.dim()) throw std::invalid_argument("reynolds_project: length mismatch");
  VectorQ acc(comp.dim(), Rational(0));
  for (const auto& g : G.elements()) {
    const MatrixQ a = action_matrix(g, comp);
    for (std::size_t i = 0; i < comp.dim(); ++i) {
      Rational s(0);
      for (std::size_t j = 0; j < comp.dim(); ++j) s += a.at(i, j) * v[j];
      acc[i] += s;
    }
  }
  const Rational scale(1, static_cast<long>(G.order()));
  for (auto& c : acc) c *= scale;
  return acc;
}

inline PolyElement reynolds_project(const FiniteMatrixGroup& G, const PolyElement& v) {
  PolyElement acc;
  for (const auto& g : G.elements()) acc += substitute(g, v);
  acc *= Rational(1, static_cast<long>(G.order()));
  return acc;
}

inline LElement reynolds_project(const FiniteMatrixGroup& G, const LElement& v) {
  LElement acc;
  for (const auto& g : G.elements()) acc += substitute(g, v);
  acc *= Rational(1, static_cast<long>(G.order()));
  return acc;
}

inline MetabElement reynolds_project(const FiniteMatrixGroup& G, const MetabElement& v) {
  MetabElement acc;
  for (const auto& g : G.elements()) acc += substitute(g, v);
  acc *= Rational(1, static_cast<long>(G.order()));
  return acc;
}

/// Averaged character series: coefficient of t^n is the invariant dimension
/// of the degree-n component of the module the symmetric series describes.
inline PowerSeriesQ molien_series(const SymmSeries& s, const FiniteMatrixGroup& G) {
  PowerSeriesQ acc(static_cast<std::size_t>(s.truncation()));
  for (const auto& g : G.elements()) acc = acc + series_eval_at_element(s, g);
  acc *= Rational(1, static_cast<long>(G.order()));
  return acc;
}

/// Multiplicity-weighted invariant count for a single irreducible summand:
/// the average of its character over the group. Always a nonnegative integer;
/// anything else means the inputs were inconsistent.
inline long long isotypic_invariant_dim(const Partition& lambda, const FiniteMatrixGroup& G) {
  Rational acc(0);
  for (const auto& g : G.elements()) acc += schur_char(lambda, g);
  acc /= Rational(static_cast<long>(G.order()));
  if (!acc.is_integer() || acc.sign() < 0)
    throw std::logic_error("isotypic_invariant_dim: averaged character is not a nonnegative integer");
  return static_cast<long long>(acc.numerator().get_si());
}

}  // namespace relfree
