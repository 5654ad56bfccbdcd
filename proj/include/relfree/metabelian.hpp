#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "relfree/rational.hpp"

namespace relfree {

/// Basis element of the free metabelian Lie algebra: a generator x_h when
/// rest is empty, otherwise the left-normed commutator
/// [x_h, x_{r1}, ..., x_{rk}] in normal form, i.e. r1 <= r2 <= ... <= rk and
/// h > r1. Degree = 1 + rest.size().
struct MetabMonomial {
  int head = 1;
  std::vector<int> rest;  // weakly increasing; empty means a plain generator

  int degree() const { return 1 + static_cast<int>(rest.size()); }
  bool is_generator() const { return rest.empty(); }

  friend bool operator==(const MetabMonomial& a, const MetabMonomial& b) {
    return a.head == b.head && a.rest == b.rest;
  }
  friend bool operator<(const MetabMonomial& a, const MetabMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.head != b.head) return a.head < b.head;
    return a.rest < b.rest;
  }
};

/// Sparse element of the free metabelian Lie algebra over Q.
class MetabElement {
public:
  MetabElement() = default;

  static MetabElement monomial(MetabMonomial m, Rational c = Rational(1)) {
    MetabElement r;
    if (!c.is_zero()) r.terms_[std::move(m)] = std::move(c);
    return r;
  }

  static MetabElement generator(std::size_t d, std::size_t index_1based) {
    if (index_1based < 1 || index_1based > d)
      throw std::invalid_argument("MetabElement::generator: index out of range");
    return monomial(MetabMonomial{static_cast<int>(index_1based), {}});
  }

  const std::map<MetabMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MetabMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MetabElement& operator+=(const MetabElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MetabElement& operator-=(const MetabElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MetabElement operator+(MetabElement a, const MetabElement& b) { return a += b; }
  friend MetabElement operator-(MetabElement a, const MetabElement& b) { return a -= b; }

  MetabElement& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
  }
  friend MetabElement operator*(MetabElement a, const Rational& c) { return a *= c; }

  friend bool operator==(const MetabElement& a, const MetabElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Generators print as "c * x{h}", commutators as "c * [h|r1,...,rk]".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (m.is_generator()) {
        s += c.str() + " * x{" + std::to_string(m.head) + "}";
      } else {
        s += c.str() + " * [" + std::to_string(m.head) + "|";
        for (std::size_t i = 0; i < m.rest.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(m.rest[i]);
        }
        s += "]";
      }
    }
    return s;
  }

private:
  std::map<MetabMonomial, Rational> terms_;
};

namespace detail {

/// [m, x_j] for a normal-form monomial m, reduced back to normal form.
/// Generators combine directly; a commutator picks up x_j either by sorted
/// insertion (j not below the current minimum) or through one Jacobi step:
/// [[x_a,x_b],x_j] = [[x_a,x_j],x_b] - [[x_b,x_j],x_a] for j < b.
inline MetabElement metab_bracket_with_generator(const MetabMonomial& m, int j) {
  MetabElement r;
  if (m.is_generator()) {
    const int i = m.head;
    if (i == j) return r;
    if (i > j)
      r.add_term(MetabMonomial{i, {j}}, Rational(1));
    else
      r.add_term(MetabMonomial{j, {i}}, Rational(-1));
    return r;
  }
  const int b = m.rest.front();
  if (j >= b) {
    MetabMonomial mm = m;
    mm.rest.insert(std::upper_bound(mm.rest.begin(), mm.rest.end(), j), j);
    r.add_term(mm, Rational(1));
    return r;
  }
  // j < b <= everything else, so j becomes the new second entry.
  MetabMonomial first{m.head, {j}};
  first.rest.insert(first.rest.end(), m.rest.begin(), m.rest.end());
  r.add_term(first, Rational(1));

  MetabMonomial second{b, {j}};
  std::vector<int> tail(m.rest.begin() + 1, m.rest.end());
  tail.insert(std::upper_bound(tail.begin(), tail.end(), m.head), m.head);
  second.rest.insert(second.rest.end(), tail.begin(), tail.end());
  r.add_term(second, Rational(-1));
  return r;
}

}  // namespace detail

/// Lie bracket on the free metabelian algebra. Brackets of two commutators
/// vanish; everything else reduces through the one-generator case.
inline MetabElement metab_bracket(const MetabElement& a, const MetabElement& b) {
  MetabElement r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Rational c = ca * cb;
      if (!ma.is_generator() && !mb.is_generator()) continue;
      if (mb.is_generator()) {
        r += detail::metab_bracket_with_generator(ma, mb.head) * c;
      } else {
        // [x_i, m] = -[m, x_i]
        r += detail::metab_bracket_with_generator(mb, ma.head) * (-c);
      }
    }
  }
  return r;
}

/// Normal-form basis of the degree-n component: generators at n = 1, and for
/// n >= 2 all (head, rest) with rest weakly increasing and head > rest[0],
/// listed head-ascending then rest in lexicographic order.
inline std::vector<MetabMonomial> metab_basis(std::size_t d, int n) {
  if (n < 1) throw std::invalid_argument("metab_basis: degree must be >= 1");
  std::vector<MetabMonomial> out;
  if (n == 1) {
    for (int h = 1; h <= static_cast<int>(d); ++h) out.push_back(MetabMonomial{h, {}});
    return out;
  }
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  for (int h = 2; h <= static_cast<int>(d); ++h) {
    auto rec = [&](auto&& self, std::size_t pos, int lo) -> void {
      const int hi = static_cast<int>(d);
      if (pos == rest.size()) {
        out.push_back(MetabMonomial{h, rest});
        return;
      }
      const int top = (pos == 0) ? h - 1 : hi;  // first entry must stay below head
      for (int v = lo; v <= top; ++v) {
        rest[pos] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace relfree
