#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace spinrev {

/// Arbitrary-precision reduced fraction. Always kept in lowest terms with
/// a positive denominator; 0 is represented as 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long n, long d);
  Rational(mpz_class n, mpz_class d);

  /// Parses "a/b" or "a" with optional sign. Rejects anything else
  /// (in particular decimal notation: exactness must be explicit).
  static Rational parse(const std::string& text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  Rational abs() const;
  Rational reciprocal() const;

  double to_double() const;
  std::string str() const;  // "a/b", or "a" when integer

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

 private:
  void reduce();

  mpz_class num_;
  mpz_class den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace spinrev
