#include "spinrev/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace spinrev {

Rational::Rational(long n, long d) : num_(n), den_(d) { reduce(); }

Rational::Rational(mpz_class n, mpz_class d)
    : num_(std::move(n)), den_(std::move(d)) {
  reduce();
}

void Rational::reduce() {
  if (den_ == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(const std::string& text) {
  const auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const auto to_mpz = [](const std::string& t) {
    // mpz_class rejects a leading '+'.
    return mpz_class(t[0] == '+' ? t.substr(1) : t);
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) {
      throw std::invalid_argument("expected exact rational 'a' or 'a/b', got '" +
                                  text + "'");
    }
    return Rational(to_mpz(text), 1);
  }
  const std::string a = text.substr(0, slash);
  const std::string b = text.substr(slash + 1);
  if (!is_int(a) || !is_int(b)) {
    throw std::invalid_argument("expected exact rational 'a/b', got '" + text +
                                "'");
  }
  return Rational(to_mpz(a), to_mpz(b));
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.num_ < 0) r.num_ = -r.num_;
  return r;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) {
    throw std::domain_error("reciprocal of zero");
  }
  return Rational(den_, num_);
}

double Rational::to_double() const {
  return mpq_class(num_, den_).get_d();
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) {
    throw std::domain_error("division by zero rational");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

bool Rational::operator<(const Rational& o) const {
  return num_ * o.den_ < o.num_ * den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace spinrev
