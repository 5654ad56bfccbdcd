#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "relfree/lalgebra.hpp"
#include "relfree/linalg.hpp"
#include "relfree/matrix.hpp"
#include "relfree/metabelian.hpp"
#include "relfree/polyalg.hpp"
#include "relfree/rational.hpp"

namespace relfree {

/// The three graded algebras the rest of the library acts on.
enum class AlgebraKind { Polynomial, LeftNilpotent, Metabelian };

inline std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Polynomial: return "polynomial";
    case AlgebraKind::LeftNilpotent: return "left-nilpotent";
    case AlgebraKind::Metabelian: return "metabelian";
  }
  throw std::logic_error("to_string(AlgebraKind): bad enum value");
}

inline AlgebraKind parse_algebra_kind(const std::string& s) {
  if (s == "polynomial" || s == "poly") return AlgebraKind::Polynomial;
  if (s == "left-nilpotent" || s == "L") return AlgebraKind::LeftNilpotent;
  if (s == "metabelian" || s == "metab") return AlgebraKind::Metabelian;
  throw std::invalid_argument("unknown algebra kind: " + s);
}

namespace detail {

/// g sends x_i to the linear form with coefficients in column i.
inline void check_square_for(const MatrixQ& g, std::size_t d, const char* where) {
  if (g.rows() != d || g.cols() != d)
    throw std::invalid_argument(std::string(where) + ": matrix size does not match variable count");
}

inline PolyElement linear_form_poly(const MatrixQ& g, std::size_t i) {
  PolyElement f;
  for (std::size_t j = 0; j < g.rows(); ++j) {
    Exponents e(g.rows(), 0);
    e[j] = 1;
    f.add_term(e, g.at(j, i));
  }
  return f;
}

inline MetabElement linear_form_metab(const MatrixQ& g, std::size_t i) {
  MetabElement f;
  for (std::size_t j = 0; j < g.rows(); ++j)
    f.add_term(MetabMonomial{static_cast<int>(j + 1), {}}, g.at(j, i));
  return f;
}

}  // namespace detail

/// Linear substitution x_i -> sum_j g(j,i) x_j extended to polynomials.
/// Columns hold images, so substitute(g*h, v) == substitute(g, substitute(h, v)).
inline PolyElement substitute(const MatrixQ& g, const PolyElement& v) {
  PolyElement out;
  for (const auto& [e, c] : v.terms()) {
    detail::check_square_for(g, e.size(), "substitute");
    PolyElement prod = PolyElement::one(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const PolyElement f = detail::linear_form_poly(g, i);
      for (int k = 0; k < e[i]; ++k) prod = prod * f;
    }
    out += prod * c;
  }
  return out;
}

/// Same substitution on the head-and-tail algebra: the head transforms as a
/// vector, the tail as a polynomial, and the two recombine through the module
/// action.
inline LElement substitute(const MatrixQ& g, const LElement& v) {
  LElement out;
  for (const auto& [m, c] : v.terms()) {
    const std::size_t d = m.tail.size();
    detail::check_square_for(g, d, "substitute");
    PolyElement tail_img = substitute(g, PolyElement::monomial(m.tail));
    for (std::size_t j = 0; j < d; ++j) {
      const Rational coeff = g.at(j, static_cast<std::size_t>(m.head - 1)) * c;
      if (coeff.is_zero()) continue;
      LElement head = LElement::generator(d, j + 1);
      out += l_module_action(head, tail_img) * coeff;
    }
  }
  return out;
}

/// Substitution on the metabelian algebra: replace every letter of the
/// left-normed word by its image and rebuild the bracket chain.
inline MetabElement substitute(const MatrixQ& g, const MetabElement& v) {
  MetabElement out;
  const std::size_t d = g.rows();
  detail::check_square_for(g, d, "substitute");
  for (const auto& [m, c] : v.terms()) {
    if (m.head < 1 || static_cast<std::size_t>(m.head) > d)
      throw std::invalid_argument("substitute: generator index out of range");
    MetabElement cur = detail::linear_form_metab(g, static_cast<std::size_t>(m.head - 1));
    for (int letter : m.rest) {
      if (letter < 1 || static_cast<std::size_t>(letter) > d)
        throw std::invalid_argument("substitute: generator index out of range");
      cur = metab_bracket(cur, detail::linear_form_metab(g, static_cast<std::size_t>(letter - 1)));
    }
    out += cur * c;
  }
  return out;
}

/// Derivation with delta(x_i) = sum_k delta(k,i) x_k, extended by the Leibniz
/// rule. Each overload walks the letters of a monomial and replaces one at a
/// time.
inline PolyElement derivation_apply(const MatrixQ& delta, const PolyElement& v) {
  PolyElement out;
  for (const auto& [e, c] : v.terms()) {
    detail::check_square_for(delta, e.size(), "derivation_apply");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      for (std::size_t k = 0; k < e.size(); ++k) {
        const Rational w = delta.at(k, i);
        if (w.is_zero()) continue;
        Exponents ee = e;
        ee[i] -= 1;
        ee[k] += 1;
        out.add_term(ee, c * w * Rational(e[i]));
      }
    }
  }
  return out;
}

inline LElement derivation_apply(const MatrixQ& delta, const LElement& v) {
  LElement out;
  for (const auto& [m, c] : v.terms()) {
    const std::size_t d = m.tail.size();
    detail::check_square_for(delta, d, "derivation_apply");
    for (std::size_t k = 0; k < d; ++k) {
      const Rational w = delta.at(k, static_cast<std::size_t>(m.head - 1));
      if (!w.is_zero()) out.add_term(LMonomial{static_cast<int>(k + 1), m.tail}, c * w);
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (m.tail[i] == 0) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const Rational w = delta.at(k, i);
        if (w.is_zero()) continue;
        LMonomial mm = m;
        mm.tail[i] -= 1;
        mm.tail[k] += 1;
        out.add_term(mm, c * w * Rational(m.tail[i]));
      }
    }
  }
  return out;
}

inline MetabElement derivation_apply(const MatrixQ& delta, const MetabElement& v) {
  MetabElement out;
  const std::size_t d = delta.rows();
  detail::check_square_for(delta, d, "derivation_apply");
  for (const auto& [m, c] : v.terms()) {
    std::vector<int> letters;
    letters.push_back(m.head);
    letters.insert(letters.end(), m.rest.begin(), m.rest.end());
    for (std::size_t p = 0; p < letters.size(); ++p) {
      auto factor = [&](std::size_t q) -> MetabElement {
        const std::size_t i = static_cast<std::size_t>(letters[q] - 1);
        if (q == p) return detail::linear_form_metab(delta, i);
        return MetabElement::generator(d, i + 1);
      };
      MetabElement cur = factor(0);
      for (std::size_t q = 1; q < letters.size(); ++q) cur = metab_bracket(cur, factor(q));
      out += cur * c;
    }
  }
  return out;
}

/// A fixed homogeneous component of one of the three algebras, carrying its
/// ordered monomial basis and coordinate maps.
class GradedComponent {
public:
  GradedComponent(AlgebraKind kind, std::size_t d, int n) : kind_(kind), d_(d), n_(n) {
    if (d < 1) throw std::invalid_argument("GradedComponent: d must be >= 1");
    switch (kind) {
      case AlgebraKind::Polynomial:
        poly_ = poly_basis(d, n);
        for (std::size_t i = 0; i < poly_.size(); ++i) poly_index_[poly_[i]] = i;
        break;
      case AlgebraKind::LeftNilpotent:
        lmon_ = l_basis(d, n);
        for (std::size_t i = 0; i < lmon_.size(); ++i) l_index_[lmon_[i]] = i;
        break;
      case AlgebraKind::Metabelian:
        metab_ = metab_basis(d, n);
        for (std::size_t i = 0; i < metab_.size(); ++i) metab_index_[metab_[i]] = i;
        break;
    }
  }

  AlgebraKind kind() const { return kind_; }
  std::size_t d() const { return d_; }
  int degree() const { return n_; }

  std::size_t dim() const {
    switch (kind_) {
      case AlgebraKind::Polynomial: return poly_.size();
      case AlgebraKind::LeftNilpotent: return lmon_.size();
      case AlgebraKind::Metabelian: return metab_.size();
    }
    return 0;
  }

  const std::vector<Exponents>& poly_monomials() const { return poly_; }
  const std::vector<LMonomial>& l_monomials() const { return lmon_; }
  const std::vector<MetabMonomial>& metab_monomials() const { return metab_; }

  VectorQ coords_of(const PolyElement& v) const {
    require(AlgebraKind::Polynomial);
    VectorQ out(poly_.size(), Rational(0));
    for (const auto& [e, c] : v.terms()) {
      auto it = poly_index_.find(e);
      if (it == poly_index_.end())
        throw std::invalid_argument("coords_of: monomial outside this component");
      out[it->second] = c;
    }
    return out;
  }

  VectorQ coords_of(const LElement& v) const {
    require(AlgebraKind::LeftNilpotent);
    VectorQ out(lmon_.size(), Rational(0));
    for (const auto& [m, c] : v.terms()) {
      auto it = l_index_.find(m);
      if (it == l_index_.end())
        throw std::invalid_argument("coords_of: monomial outside this component");
      out[it->second] = c;
    }
    return out;
  }

  VectorQ coords_of(const MetabElement& v) const {
    require(AlgebraKind::Metabelian);
    VectorQ out(metab_.size(), Rational(0));
    for (const auto& [m, c] : v.terms()) {
      auto it = metab_index_.find(m);
      if (it == metab_index_.end())
        throw std::invalid_argument("coords_of: monomial outside this component");
      out[it->second] = c;
    }
    return out;
  }

  PolyElement poly_element(const VectorQ& coords) const {
    require(AlgebraKind::Polynomial);
    check_len(coords.size());
    PolyElement v;
    for (std::size_t i = 0; i < coords.size(); ++i) v.add_term(poly_[i], coords[i]);
    return v;
  }

  LElement l_element(const VectorQ& coords) const {
    require(AlgebraKind::LeftNilpotent);
    check_len(coords.size());
    LElement v;
    for (std::size_t i = 0; i < coords.size(); ++i) v.add_term(lmon_[i], coords[i]);
    return v;
  }

  MetabElement metab_element(const VectorQ& coords) const {
    require(AlgebraKind::Metabelian);
    check_len(coords.size());
    MetabElement v;
    for (std::size_t i = 0; i < coords.size(); ++i) v.add_term(metab_[i], coords[i]);
    return v;
  }

private:
  void require(AlgebraKind k) const {
    if (kind_ != k) throw std::logic_error("GradedComponent: wrong algebra kind for this accessor");
  }
  void check_len(std::size_t n) const {
    if (n != dim()) throw std::invalid_argument("GradedComponent: coordinate length mismatch");
  }

  AlgebraKind kind_;
  std::size_t d_;
  int n_;
  std::vector<Exponents> poly_;
  std::vector<LMonomial> lmon_;
  std::vector<MetabMonomial> metab_;
  std::map<Exponents, std::size_t, ExponentsDescLex> poly_index_;
  std::map<LMonomial, std::size_t> l_index_;
  std::map<MetabMonomial, std::size_t> metab_index_;
};

/// Matrix of substitute(g, .) on a homogeneous component: column j holds the
/// coordinates of the image of the j-th basis monomial. Composition matches
/// matrix product: action_matrix(g*h) == action_matrix(g) * action_matrix(h).
inline MatrixQ action_matrix(const MatrixQ& g, const GradedComponent& comp) {
  detail::check_square_for(g, comp.d(), "action_matrix");
  const std::size_t n = comp.dim();
  if (n == 0) throw std::invalid_argument("action_matrix: component has empty basis");
  MatrixQ a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    VectorQ col;
    switch (comp.kind()) {
      case AlgebraKind::Polynomial:
        col = comp.coords_of(substitute(g, PolyElement::monomial(comp.poly_monomials()[j])));
        break;
      case AlgebraKind::LeftNilpotent:
        col = comp.coords_of(substitute(g, LElement::monomial(comp.l_monomials()[j])));
        break;
      case AlgebraKind::Metabelian:
        col = comp.coords_of(substitute(g, MetabElement::monomial(comp.metab_monomials()[j])));
        break;
    }
    for (std::size_t i = 0; i < n; ++i) a.at(i, j) = col[i];
  }
  return a;
}

/// Matrix of derivation_apply(delta, .) on a homogeneous component.
inline MatrixQ derivation_matrix(const MatrixQ& delta, const GradedComponent& comp) {
  detail::check_square_for(delta, comp.d(), "derivation_matrix");
  const std::size_t n = comp.dim();
  if (n == 0) throw std::invalid_argument("derivation_matrix: component has empty basis");
  MatrixQ a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    VectorQ col;
    switch (comp.kind()) {
      case AlgebraKind::Polynomial:
        col = comp.coords_of(derivation_apply(delta, PolyElement::monomial(comp.poly_monomials()[j])));
        break;
      case AlgebraKind::LeftNilpotent:
        col = comp.coords_of(derivation_apply(delta, LElement::monomial(comp.l_monomials()[j])));
        break;
      case AlgebraKind::Metabelian:
        col = comp.coords_of(derivation_apply(delta, MetabElement::monomial(comp.metab_monomials()[j])));
        break;
    }
    for (std::size_t i = 0; i < n; ++i) a.at(i, j) = col[i];
  }
  return a;
}

}  // namespace relfree
