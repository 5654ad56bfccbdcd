#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relfree {

/// Exact rational number over arbitrary-precision integers.
///
/// Invariants: always reduced to lowest terms, denominator > 0, zero is 0/1.
/// Every constructor and parser canonicalizes, so equality is plain value
/// equality. Wraps mpq_class rather than exposing it: the raw GMP type does
/// not canonicalize string or num/den input.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const mpz_class& n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) { canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canonicalize(); }
  explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

  /// Parses "p/q" or "p" (decimal, optional leading '-').
  static Rational parse(std::string_view text) {
    const std::string s(text);
    if (s.empty() || !looks_like_rational(s))
      throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    if (q.get_den() == 0)
      throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    return Rational(q);
  }

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Value as mpz; requires denominator 1.
  const mpz_class& as_integer() const {
    if (!is_integer())
      throw std::invalid_argument("Rational::as_integer: " + str() + " is not an integer");
    return v_.get_num();
  }

  Rational operator-() const { return from_canonical(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static Rational from_canonical(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  static bool looks_like_rational(const std::string& s) {
    // digits with optional sign, optionally "/" and more digits
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    return digits > 0 && i == s.size();
  }

  void canonicalize() {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace relfree
