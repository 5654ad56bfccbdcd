#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "relfree/polyalg.hpp"
#include "relfree/rational.hpp"

namespace relfree {

/// Basis monomial x_{i1} x_{i2} ... x_{in} of the relatively free algebra
/// with left-nilpotency of class 3 imposed on right-symmetric algebras:
/// a head generator followed by a commutative tail, stored as an exponent
/// vector. Degree = 1 + sum of tail exponents.
struct LMonomial {
  int head = 1;           // 1-based generator index
  Exponents tail;         // length d, commutative part

  int degree() const { return 1 + exponents_degree(tail); }

  friend bool operator==(const LMonomial& a, const LMonomial& b) {
    return a.head == b.head && a.tail == b.tail;
  }

  friend bool operator<(const LMonomial& a, const LMonomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.head != b.head) return a.head < b.head;
    return a.tail > b.tail;  // descending exponent vectors, as in poly order
  }
};

/// Sparse element of F_d over Q in the monomial basis above.
class LElement {
public:
  LElement() = default;

  static LElement monomial(LMonomial m, Rational c = Rational(1)) {
    LElement r;
    if (!c.is_zero()) r.terms_[std::move(m)] = std::move(c);
    return r;
  }

  static LElement generator(std::size_t d, std::size_t index_1based) {
    if (index_1based < 1 || index_1based > d)
      throw std::invalid_argument("LElement::generator: index out of range");
    return monomial(LMonomial{static_cast<int>(index_1based), Exponents(d, 0)});
  }

  const std::map<LMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const LMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LElement& operator+=(const LElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LElement& operator-=(const LElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend LElement operator+(LElement a, const LElement& b) { return a += b; }
  friend LElement operator-(LElement a, const LElement& b) { return a -= b; }

  LElement& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
  }
  friend LElement operator*(LElement a, const Rational& c) { return a *= c; }

  friend bool operator==(const LElement& a, const LElement& b) {
    return a.terms_ == b.terms_;
  }

  /// "c * x{h}[e1,...,ed]" joined by " + ".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + " * x{" + std::to_string(m.head) + "}[";
      for (std::size_t i = 0; i < m.tail.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m.tail[i]);
      }
      s += "]";
    }
    return s;
  }

private:
  std::map<LMonomial, Rational> terms_;
};

/// Product in F_d. In the normal form, (head, tail) * x_j appends j to the
/// tail; any product whose right factor has degree >= 2 vanishes, because the
/// left annihilator relation kills it.
inline LElement l_mul(const LElement& a, const LElement& b) {
  LElement r;
  for (const auto& [mb, cb] : b.terms()) {
    if (mb.degree() != 1) continue;  // right factor not a generator: zero
    const int j = mb.head;
    for (const auto& [ma, ca] : a.terms()) {
      LMonomial m = ma;
      m.tail[static_cast<std::size_t>(j - 1)] += 1;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

/// Right module action of a (no constant term needed) polynomial f on v:
/// multiply tails. Monomial-by-monomial: exponent vectors add.
inline LElement l_module_action(const LElement& v, const PolyElement& f) {
  LElement r;
  for (const auto& [e, cf] : f.terms()) {
    for (const auto& [m, cv] : v.terms()) {
      LMonomial mm = m;
      if (mm.tail.size() != e.size())
        throw std::invalid_argument("l_module_action: variable count mismatch");
      for (std::size_t i = 0; i < e.size(); ++i) mm.tail[i] += e[i];
      r.add_term(mm, cv * cf);
    }
  }
  return r;
}

/// Monomial basis of the degree-n homogeneous component, in the canonical
/// order (head ascending, then tails as in exponent_vectors).
inline std::vector<LMonomial> l_basis(std::size_t d, int n) {
  if (n < 1) throw std::invalid_argument("l_basis: degree must be >= 1");
  std::vector<LMonomial> out;
  const auto tails = exponent_vectors(d, n - 1);
  for (int h = 1; h <= static_cast<int>(d); ++h)
    for (const auto& t : tails) out.push_back(LMonomial{h, t});
  return out;
}

}  // namespace relfree
