#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinrev/rational.hpp"
#include "spinrev/revival.hpp"

using namespace spinrev;

TEST_CASE("construction reduces to lowest terms") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(Rational(-3, 5).abs() == Rational(3, 5));
  CHECK(Rational(3, 5).reciprocal() == Rational(5, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("ordering and conversion") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(1, 2) <= Rational(1, 2));
  CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75));
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK(Rational(-7).str() == "-7");
}

TEST_CASE("parsing accepts a/b and integers only") {
  CHECK(Rational::parse("3/5") == Rational(3, 5));
  CHECK(Rational::parse("-3/5") == Rational(-3, 5));
  CHECK(Rational::parse("10") == Rational(10));
  CHECK(Rational::parse("+4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("large values stay exact") {
  const Rational big = Rational::parse("123456789012345678901234567890/7");
  CHECK(big * Rational(7) ==
        Rational::parse("123456789012345678901234567890"));
}

TEST_CASE("rational gcd examples") {
  CHECK(rational_gcd({{Rational(-12), Rational(-10), Rational(-8)}}) ==
        Rational(2));
  CHECK(rational_gcd({{Rational(-8, 5), Rational(2, 5)}}) == Rational(2, 5));
  CHECK(rational_gcd({{Rational(-7, 3)}}) == Rational(7, 3));
  CHECK(rational_gcd({{Rational(1, 2), Rational(1, 3)}}) == Rational(1, 6));
  CHECK_THROWS_AS(rational_gcd(FrequencySet{}), std::invalid_argument);
}

TEST_CASE("gcd divides every element and is bounded by the infimum") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num_dist(-40, 40);
  std::uniform_int_distribution<long> den_dist(1, 12);
  std::uniform_int_distribution<int> size_dist(1, 6);
  for (int rep = 0; rep < 200; ++rep) {
    FrequencySet set;
    while (set.values.size() < static_cast<std::size_t>(size_dist(rng))) {
      const long n = num_dist(rng);
      if (n == 0) continue;
      set.values.emplace_back(n, den_dist(rng));
    }
    const Rational g = rational_gcd(set);
    CHECK(g > Rational(0));

    Rational smallest = set.values[0].abs();
    for (const Rational& v : set.values) {
      if (v.abs() < smallest) smallest = v.abs();
      CHECK((v / g).is_integer());
    }
    CHECK(g <= smallest);

    // Maximality: no prime multiple of g still divides everything.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L,
                   41L, 43L, 47L}) {
      const Rational scaled = g * Rational(p);
      bool divides_all = true;
      for (const Rational& v : set.values) {
        if (!(v / scaled).is_integer()) {
          divides_all = false;
          break;
        }
      }
      CHECK(!divides_all);
    }
  }
}
