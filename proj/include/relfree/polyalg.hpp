#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "relfree/rational.hpp"

namespace relfree {

/// Exponent vector of a commutative monomial in d variables.
using Exponents = std::vector<int>;

inline int exponents_degree(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

/// Canonical monomial order within a fixed degree: x1^a ... with the earliest
/// variable as large as possible first, i.e. exponent vectors in reverse
/// lexicographic (descending) order. Reads as the weakly increasing index
/// word order: {1,1} < {1,2} < {2,2}.
struct ExponentsDescLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = exponents_degree(a), db = exponents_degree(b);
    if (da != db) return da < db;
    return a > b;  // higher exponent on earlier variables comes first
  }
};

/// All exponent vectors in d variables of total degree n, in the canonical
/// order above.
inline std::vector<Exponents> exponent_vectors(std::size_t d, int n) {
  std::vector<Exponents> out;
  Exponents cur(d, 0);
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == d) {
      cur[var] = remaining;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  if (d == 0) throw std::invalid_argument("exponent_vectors: d must be >= 1");
  if (n >= 0) rec(rec, 0, n);
  return out;
}

/// Sparse polynomial in d commuting variables over Q. Zero coefficients are
/// never stored. Used both for K[X_d] and, with the constant term absent, for
/// the augmentation ideal of polynomials without constant term.
class PolyElement {
public:
  PolyElement() = default;

  static PolyElement monomial(Exponents e, Rational c = Rational(1)) {
    PolyElement p;
    if (!c.is_zero()) p.terms_[std::move(e)] = std::move(c);
    return p;
  }

  static PolyElement variable(std::size_t d, std::size_t index_1based) {
    if (index_1based < 1 || index_1based > d)
      throw std::invalid_argument("PolyElement::variable: index out of range");
    Exponents e(d, 0);
    e[index_1based - 1] = 1;
    return monomial(std::move(e));
  }

  static PolyElement one(std::size_t d) { return monomial(Exponents(d, 0)); }

  const std::map<Exponents, Rational, ExponentsDescLex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyElement& operator+=(const PolyElement& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyElement& operator-=(const PolyElement& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }

  friend PolyElement operator*(const PolyElement& a, const PolyElement& b) {
    PolyElement r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size() && i < eb.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  PolyElement& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
  }
  friend PolyElement operator*(PolyElement a, const Rational& c) { return a *= c; }

  friend bool operator==(const PolyElement& a, const PolyElement& b) {
    return a.terms_ == b.terms_;
  }

  /// "c * x[e1,...,ed]" joined by " + ", in canonical monomial order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + " * x[";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
      }
      s += "]";
    }
    return s;
  }

private:
  std::map<Exponents, Rational, ExponentsDescLex> terms_;
};

/// Monomial basis of the degree-n component of K[X_d], canonical order.
inline std::vector<Exponents> poly_basis(std::size_t d, int n) {
  if (n < 0) throw std::invalid_argument("poly_basis: negative degree");
  return exponent_vectors(d, n);
}

}  // namespace relfree
