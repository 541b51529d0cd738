#include "spinrev/revival.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace spinrev {

RatioClass RatioClass::classify(const Rational& n) {
  if (n.is_integer()) {
    return RatioClass(Kind::Integer, n);
  }
  return RatioClass(Kind::NonIntegerRational, n);
}

RatioClass RatioClass::irrational() {
  return RatioClass(Kind::DeclaredIrrational, std::nullopt);
}

const Rational& RatioClass::value() const {
  if (!value_) {
    throw std::logic_error("declared-irrational ratio has no exact value");
  }
  return *value_;
}

FrequencySet evrt_frequencies(HalfIntegerSpin s, const Rational& n) {
  const int twice_s = s.twice_s();
  FrequencySet set;
  for (int i = 1; i <= twice_s; ++i) {
    // -N - (2s - (2i - 1)), in units of K/hbar
    const Rational value = -n - Rational(twice_s - (2 * i - 1));
    if (!value.is_zero()) {
      set.values.push_back(value);
    }
  }
  if (set.values.empty()) {
    throw DegenerateSpectrumError(
        "all expectation-value frequencies vanish (s = 1/2 with N = 0): "
        "the spectrum is static and no finite revival period exists");
  }
  return set;
}

FrequencySet qrt_frequencies(HalfIntegerSpin s, const Rational& n) {
  const int twice_s = s.twice_s();
  FrequencySet set;
  for (int j = 0; j <= twice_s; ++j) {
    const Rational m(twice_s - 2 * j, 2);
    // E_m/(K/hbar) = -m*N - m^2
    const Rational value = -m * n - m * m;
    if (!value.is_zero()) {
      set.values.push_back(value);
    }
  }
  if (set.values.empty()) {
    // m = +-s contributes -s^2 - s*N and -s^2 + s*N; both vanish only if
    // s = 0, which HalfIntegerSpin excludes.
    throw DegenerateSpectrumError("eigenphase frequency set is empty");
  }
  return set;
}

Rational rational_gcd(const FrequencySet& set) {
  if (set.values.empty()) {
    throw std::invalid_argument("gcd of an empty frequency set");
  }
  // Common denominator L, then gcd of the cleared integer numerators.
  mpz_class common_den = 1;
  for (const Rational& v : set.values) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), common_den.get_mpz_t(), v.den().get_mpz_t());
    common_den = l;
  }
  mpz_class g = 0;
  for (const Rational& v : set.values) {
    const mpz_class cleared = v.num() * (common_den / v.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cleared.get_mpz_t());
  }
  return Rational(g, common_den);
}

double period(const FrequencySet& set, double k) {
  if (k == 0.0) {
    throw std::invalid_argument(
        "period is parameterized in units of hbar/K and needs k != 0");
  }
  return 2.0 * std::numbers::pi * hbar /
         (rational_gcd(set).to_double() * std::abs(k));
}

RevivalTime RevivalTime::finite(Rational coefficient) {
  if (!(coefficient > Rational(0))) {
    throw std::invalid_argument("revival-time coefficient must be positive");
  }
  RevivalTime t;
  t.coefficient_ = std::move(coefficient);
  return t;
}

RevivalTime RevivalTime::infinite() { return RevivalTime{}; }

const Rational& RevivalTime::pi_hbar_over_k_multiple() const {
  if (!coefficient_) {
    throw std::logic_error("infinite revival time has no finite coefficient");
  }
  return *coefficient_;
}

double RevivalTime::time(double k) const {
  if (!coefficient_) {
    return std::numeric_limits<double>::infinity();
  }
  return coefficient_->to_double() * std::numbers::pi * hbar / std::abs(k);
}

namespace {

RevivalTime revival_time_for(const FrequencySet& set) {
  // T = 2*pi*hbar/(g*K) = (2/g) * pi*hbar/K
  return RevivalTime::finite(Rational(2) / rational_gcd(set));
}

}  // namespace

RevivalTime evrt(HalfIntegerSpin s, const RatioClass& ratio, double k) {
  if (!(k > 0.0)) {
    throw std::invalid_argument("evrt requires k > 0");
  }
  if (ratio.is_irrational()) {
    return RevivalTime::infinite();
  }
  return revival_time_for(evrt_frequencies(s, ratio.value()));
}

RevivalTime qrt(HalfIntegerSpin s, const RatioClass& ratio, double k) {
  if (!(k > 0.0)) {
    throw std::invalid_argument("qrt requires k > 0");
  }
  if (ratio.is_irrational()) {
    return RevivalTime::infinite();
  }
  return revival_time_for(qrt_frequencies(s, ratio.value()));
}

Rational revival_ratio(HalfIntegerSpin s, const RatioClass& ratio, double k) {
  const RevivalTime e = evrt(s, ratio, k);
  const RevivalTime q = qrt(s, ratio, k);
  if (!e.is_finite() || !q.is_finite()) {
    throw std::invalid_argument("revival ratio needs finite revival times");
  }
  return q.pi_hbar_over_k_multiple() / e.pi_hbar_over_k_multiple();
}

std::optional<double> brute_force_period(const FourierSpectrum& spectrum,
                                         double t_max, double tol) {
  if (!(t_max > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("t_max and tol must be positive");
  }
  std::vector<double> omegas;
  for (const FourierTerm& term : spectrum.terms) {
    if (term.alpha == 0.0 && term.beta == 0.0) continue;  // unpopulated
    if (term.omega != 0.0) omegas.push_back(std::abs(term.omega));
  }
  if (omegas.empty()) {
    return std::nullopt;
  }
  const double omega_ref = *std::max_element(omegas.begin(), omegas.end());
  const double two_pi = 2.0 * std::numbers::pi;
  // Any common period satisfies omega_ref*T = 2*pi*k, so enumerating the
  // harmonic multiples of the fastest component visits every candidate in
  // increasing order; the first one that works is the minimal period.
  const auto k_max = static_cast<long long>(t_max * omega_ref / two_pi + tol);
  for (long long k = 1; k <= k_max; ++k) {
    const double t = two_pi * k / omega_ref;
    if (t > t_max * (1.0 + 1e-12)) break;
    bool all_integer = true;
    for (const double w : omegas) {
      const double cycles = w * t / two_pi;
      if (std::abs(cycles - std::round(cycles)) > tol) {
        all_integer = false;
        break;
      }
    }
    if (all_integer) {
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace spinrev
