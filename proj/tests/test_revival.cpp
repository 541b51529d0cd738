#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "spinrev/revival.hpp"

using namespace spinrev;

namespace {

constexpr double kPi = std::numbers::pi;

bool contains(const FrequencySet& set, const Rational& v) {
  for (const Rational& x : set.values) {
    if (x == v) return true;
  }
  return false;
}

Rational evrt_coeff(int twice_s, const Rational& n) {
  return evrt(HalfIntegerSpin(twice_s), RatioClass::classify(n), 1.0)
      .pi_hbar_over_k_multiple();
}

Rational qrt_coeff(int twice_s, const Rational& n) {
  return qrt(HalfIntegerSpin(twice_s), RatioClass::classify(n), 1.0)
      .pi_hbar_over_k_multiple();
}

SpinState random_full_support_state(HalfIntegerSpin s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.2, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  Eigen::VectorXcd v(s.dimension());
  for (int j = 0; j < v.size(); ++j) {
    v(j) = std::polar(mag(rng), phase(rng));
  }
  return normalize(v, s);
}

}  // namespace

TEST_CASE("ratio classification") {
  CHECK(RatioClass::classify(Rational(10)).kind() == RatioClass::Kind::Integer);
  const RatioClass r = RatioClass::classify(Rational(3, 5));
  CHECK(r.kind() == RatioClass::Kind::NonIntegerRational);
  CHECK(r.value() == Rational(3, 5));
  const RatioClass irr = RatioClass::irrational();
  CHECK(irr.is_irrational());
  CHECK_THROWS_AS(irr.value(), std::logic_error);
}

TEST_CASE("expectation-value frequency sets") {
  const FrequencySet a = evrt_frequencies(HalfIntegerSpin(3), Rational(10));
  REQUIRE(a.values.size() == 3);
  CHECK(contains(a, Rational(-12)));
  CHECK(contains(a, Rational(-10)));
  CHECK(contains(a, Rational(-8)));

  const FrequencySet b = evrt_frequencies(HalfIntegerSpin(2), Rational(3, 5));
  REQUIRE(b.values.size() == 2);
  CHECK(contains(b, Rational(-8, 5)));
  CHECK(contains(b, Rational(2, 5)));

  const FrequencySet c = evrt_frequencies(HalfIntegerSpin(1), Rational(7, 3));
  REQUIRE(c.values.size() == 1);
  CHECK(c.values[0] == Rational(-7, 3));

  CHECK_THROWS_AS(evrt_frequencies(HalfIntegerSpin(1), Rational(0)),
                  DegenerateSpectrumError);
}

TEST_CASE("eigenphase frequency sets") {
  const FrequencySet a = qrt_frequencies(HalfIntegerSpin(2), Rational(2));
  REQUIRE(a.values.size() == 2);  // m = 0 level drops out
  CHECK(contains(a, Rational(-3)));
  CHECK(contains(a, Rational(1)));

  const FrequencySet b = qrt_frequencies(HalfIntegerSpin(3), Rational(10));
  REQUIRE(b.values.size() == 4);
  CHECK(contains(b, Rational(-69, 4)));
  CHECK(contains(b, Rational(-21, 4)));
  CHECK(contains(b, Rational(19, 4)));
  CHECK(contains(b, Rational(51, 4)));

  const FrequencySet c = qrt_frequencies(HalfIntegerSpin(1), Rational(1));
  REQUIRE(c.values.size() == 2);
  CHECK(contains(c, Rational(-3, 4)));
  CHECK(contains(c, Rational(1, 4)));
}

TEST_CASE("period from the fundamental frequency") {
  const FrequencySet a{{Rational(-12), Rational(-10), Rational(-8)}};
  CHECK(period(a, 0.05) == doctest::Approx(2.0 * kPi / 0.1).epsilon(1e-12));

  const FrequencySet b{
      {Rational(-69, 4), Rational(-21, 4), Rational(19, 4), Rational(51, 4)}};
  CHECK(period(b, 0.05) ==
        doctest::Approx(2.0 * kPi / (0.05 / 4.0)).epsilon(1e-12));

  const FrequencySet c{{Rational(-1)}};
  CHECK(period(c, 1.0) == doctest::Approx(2.0 * kPi).epsilon(1e-12));

  CHECK_THROWS_AS(period(c, 0.0), std::invalid_argument);
}

TEST_CASE("expectation-value revival times") {
  // Half-integer s, even N: pi*hbar/K.
  const RevivalTime a =
      evrt(HalfIntegerSpin(3), RatioClass::classify(Rational(10)), 0.05);
  CHECK(a.is_finite());
  CHECK(a.pi_hbar_over_k_multiple() == Rational(1));
  CHECK(a.time(0.05) == doctest::Approx(62.8318530718).epsilon(1e-9));

  // Integer s, odd N: pi*hbar/K.
  const RevivalTime b =
      evrt(HalfIntegerSpin(2), RatioClass::classify(Rational(3)), 0.1);
  CHECK(b.pi_hbar_over_k_multiple() == Rational(1));
  CHECK(b.time(0.1) == doctest::Approx(31.4159265359).epsilon(1e-9));

  // Non-integer rational: 5*pi*hbar/K.
  const RevivalTime c =
      evrt(HalfIntegerSpin(2), RatioClass::classify(Rational(3, 5)), 0.05);
  CHECK(c.pi_hbar_over_k_multiple() == Rational(5));

  const RevivalTime d = evrt(HalfIntegerSpin(2), RatioClass::irrational(), 1.0);
  CHECK(!d.is_finite());
  CHECK(std::isinf(d.time(1.0)));
  CHECK_THROWS_AS(d.pi_hbar_over_k_multiple(), std::logic_error);

  CHECK_THROWS_AS(
      evrt(HalfIntegerSpin(2), RatioClass::classify(Rational(1)), 0.0),
      std::invalid_argument);
}

TEST_CASE("wave-function revival times") {
  const RevivalTime a =
      qrt(HalfIntegerSpin(3), RatioClass::classify(Rational(10)), 0.05);
  CHECK(a.pi_hbar_over_k_multiple() == Rational(8));
  CHECK(a.time(0.05) == doctest::Approx(502.654824574).epsilon(1e-9));

  const RevivalTime b =
      qrt(HalfIntegerSpin(2), RatioClass::classify(Rational(2)), 0.1);
  CHECK(b.pi_hbar_over_k_multiple() == Rational(2));
  CHECK(b.time(0.1) == doctest::Approx(62.8318530718).epsilon(1e-9));

  // Half-odd-integer N: the m = -1/2 eigenphase drops out and the single
  // remaining frequency gives 4*pi*hbar/K.
  const RevivalTime c =
      qrt(HalfIntegerSpin(1), RatioClass::classify(Rational(1, 2)), 1.0);
  CHECK(c.pi_hbar_over_k_multiple() == Rational(4));

  CHECK(!qrt(HalfIntegerSpin(1), RatioClass::irrational(), 1.0).is_finite());
}

TEST_CASE("revival ratio") {
  CHECK(revival_ratio(HalfIntegerSpin(4), RatioClass::classify(Rational(5)),
                      1.0) == Rational(1));
  CHECK(revival_ratio(HalfIntegerSpin(3), RatioClass::classify(Rational(10)),
                      1.0) == Rational(8));
  CHECK(revival_ratio(HalfIntegerSpin(1), RatioClass::classify(Rational(1)),
                      1.0) == Rational(4));
  CHECK_THROWS_AS(
      revival_ratio(HalfIntegerSpin(2), RatioClass::irrational(), 1.0),
      std::invalid_argument);
}

TEST_CASE("brute-force period on a synthetic spectrum") {
  FourierSpectrum spec;
  spec.terms.push_back({1.0, 1.0, 0.0});
  spec.terms.push_back({2.0, 0.5, 0.0});
  const auto t = brute_force_period(spec, 100.0, 1e-9);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(2.0 * kPi).epsilon(1e-12));
}

TEST_CASE("brute-force period reproduces the spin-3/2 revival") {
  std::mt19937_64 rng(31);
  const HalfIntegerSpin s(3);
  const DiagonalModel model{s, 0.5, 0.05};
  const FourierSpectrum spec =
      fourier_spectrum(random_full_support_state(s, rng), model);
  const auto t = brute_force_period(spec, 100.0, 1e-6);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(62.8318530718).epsilon(1e-9));
}

TEST_CASE("brute-force period reports no revival for incommensurate input") {
  FourierSpectrum spec;
  spec.terms.push_back({1.0, 1.0, 0.0});
  spec.terms.push_back({std::sqrt(2.0), 0.5, 0.0});
  CHECK(!brute_force_period(spec, 1e4, 1e-6).has_value());
}

TEST_CASE("revival-time tables for integer ratios") {
  // Two possible values, selected by spin statistics and N parity. The
  // single-frequency spin (s = 1/2) follows the general gcd rule instead:
  // its lone harmonic at N*K/hbar revives after 2*pi*hbar/(N*K).
  for (int twice_s = 1; twice_s <= 7; ++twice_s) {
    const bool integer_spin = twice_s % 2 == 0;
    for (long n = -12; n <= 12; ++n) {
      if (twice_s == 1 && n == 0) {
        CHECK_THROWS_AS(evrt_coeff(1, Rational(0)), DegenerateSpectrumError);
        continue;
      }
      const Rational e = evrt_coeff(twice_s, Rational(n));
      const bool even = n % 2 == 0;
      if (twice_s == 1) {
        CHECK(e == Rational(2) / Rational(std::labs(n)));
      } else if ((integer_spin && even) || (!integer_spin && !even)) {
        CHECK(e == Rational(2));
      } else {
        CHECK(e == Rational(1));
      }

      const Rational q = qrt_coeff(twice_s, Rational(n));
      if (integer_spin) {
        CHECK(q == e);  // identical revivals for integer spins
      } else {
        CHECK(q == Rational(8));
      }
    }
  }
}

TEST_CASE("revival-time tables for non-integer rational ratios") {
  for (int twice_s = 1; twice_s <= 7; ++twice_s) {
    const bool integer_spin = twice_s % 2 == 0;
    for (long b = 2; b <= 7; ++b) {
      for (long a = -12; a <= 12; ++a) {
        if (a == 0 || std::gcd(std::labs(a), b) != 1) continue;
        const Rational n(a, b);
        const Rational e = evrt_coeff(twice_s, n);
        const Rational q = qrt_coeff(twice_s, n);

        if (twice_s == 1) {
          // Lone harmonic: exact period 2*pi*hbar*b/(|a|*K).
          CHECK(e == Rational(2 * b, std::labs(a)));
        } else {
          CHECK((e == Rational(b) || e == Rational(2 * b)));
        }

        if (integer_spin) {
          CHECK((q == Rational(b) || q == Rational(2 * b)));
          CHECK(q == e);
        } else if (b == 2) {
          CHECK(q == Rational(4));
        } else if (b % 4 == 2) {
          // The eigenphase numerators -2pa - p^2*b are divisible by 4
          // when b = 2 mod 4 (p, a odd), so the factor-4 clearing
          // collapses and the period is 2*pi*hbar*b/K exactly.
          CHECK(q == Rational(2 * b));
        } else {
          CHECK((q == Rational(4 * b) || q == Rational(8 * b)));
        }

        if (twice_s >= 3 && !integer_spin) {
          const Rational alpha = q / e;
          CHECK((alpha == Rational(1) || alpha == Rational(2) ||
                 alpha == Rational(4) || alpha == Rational(8)));
        }
      }
    }
  }
}

TEST_CASE("integer ratios revive faster than non-integer rationals") {
  for (int twice_s = 2; twice_s <= 7; ++twice_s) {
    Rational slowest_integer(0);
    for (long n = -20; n <= 20; ++n) {
      const Rational e = evrt_coeff(twice_s, Rational(n));
      if (e > slowest_integer) slowest_integer = e;
    }
    for (long b = 2; b <= 9; ++b) {
      for (long a = -20; a <= 20; ++a) {
        if (a == 0 || std::gcd(std::labs(a), b) != 1) continue;
        CHECK(evrt_coeff(twice_s, Rational(a, b)) > slowest_integer);
      }
    }
  }
}

TEST_CASE("integer-ratio revival times are independent of the spin value") {
  for (long n = -10; n <= 10; ++n) {
    if (n == 0) continue;
    const Rational int_ref = evrt_coeff(2, Rational(n));
    for (int twice_s : {4, 6, 8}) {
      CHECK(evrt_coeff(twice_s, Rational(n)) == int_ref);
    }
    const Rational half_ref = evrt_coeff(3, Rational(n));
    for (int twice_s : {5, 7}) {
      CHECK(evrt_coeff(twice_s, Rational(n)) == half_ref);
    }
    // The lone-harmonic spin joins the half-integer family only while its
    // gcd lands on the tabulated values.
    if (std::labs(n) <= 2) {
      CHECK(evrt_coeff(1, Rational(n)) == half_ref);
    }
  }
  // N = 0 behaves as an even N within each statistics family.
  for (int twice_s : {4, 6}) {
    CHECK(evrt_coeff(twice_s, Rational(0)) == evrt_coeff(2, Rational(0)));
  }
  for (int twice_s : {5, 7}) {
    CHECK(evrt_coeff(twice_s, Rational(0)) == evrt_coeff(3, Rational(0)));
  }
}

TEST_CASE("gcd prediction agrees with the brute-force oracle") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> spin_dist(1, 7);
  std::uniform_int_distribution<long> a_dist(-9, 9);
  std::uniform_int_distribution<long> b_dist(1, 5);
  const double ks[] = {0.05, 0.1, 0.25, 1.0};
  int tested = 0;
  while (tested < 30) {
    const int twice_s = spin_dist(rng);
    const long a = a_dist(rng);
    const long b = b_dist(rng);
    if (a == 0) continue;
    const Rational n(a, b);
    const double k = ks[rng() % 4];
    const HalfIntegerSpin s(twice_s);

    const RevivalTime predicted = evrt(s, RatioClass::classify(n), k);
    const double t_pred = predicted.time(k);

    const DiagonalModel model{s, n.to_double() * k, k};
    const FourierSpectrum spec =
        fourier_spectrum(random_full_support_state(s, rng), model);
    const auto t_bf = brute_force_period(spec, t_pred * 1.001, 1e-7);
    REQUIRE(t_bf.has_value());
    CHECK(*t_bf == doctest::Approx(t_pred).epsilon(1e-6));

    // The expectation values really do return at the found period.
    for (double t0 : {0.0, 0.37 * t_pred}) {
      const ExpectationTriple before = eval_series(spec, t0);
      const ExpectationTriple after = eval_series(spec, t0 + *t_bf);
      CHECK(std::abs(before.sx - after.sx) < 1e-9);
      CHECK(std::abs(before.sy - after.sy) < 1e-9);
    }
    ++tested;
  }
}
