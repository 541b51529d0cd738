#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "spinrev/exact_evolution.hpp"
#include "spinrev/rational.hpp"
#include "spinrev/spin_algebra.hpp"

namespace spinrev {

/// Raised when the frequency set is empty after zero removal (only
/// possible for s = 1/2 with N = 0): every expectation value is constant
/// and no finite revival period exists.
struct DegenerateSpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Number-theoretic class of the field-to-anisotropy ratio N = bz/k.
/// Irrationality cannot be detected from finite input, so it is an
/// explicit declaration by the caller rather than an inferred property.
class RatioClass {
 public:
  enum class Kind { Integer, NonIntegerRational, DeclaredIrrational };

  static RatioClass classify(const Rational& n);
  static RatioClass irrational();

  Kind kind() const { return kind_; }
  bool is_irrational() const { return kind_ == Kind::DeclaredIrrational; }
  /// The exact ratio; throws for DeclaredIrrational.
  const Rational& value() const;

 private:
  RatioClass(Kind kind, std::optional<Rational> value)
      : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  std::optional<Rational> value_;
};

/// Nonempty list of nonzero frequencies in units of K/hbar.
struct FrequencySet {
  std::vector<Rational> values;
};

/// Revival time as an exact multiple of pi*hbar/K, or infinite.
class RevivalTime {
 public:
  static RevivalTime finite(Rational coefficient);
  static RevivalTime infinite();

  bool is_finite() const { return coefficient_.has_value(); }
  /// T = coefficient * pi*hbar/K; throws when infinite.
  const Rational& pi_hbar_over_k_multiple() const;
  /// The period in time units for a concrete anisotropy k (inf if infinite).
  double time(double k) const;

 private:
  RevivalTime() = default;
  std::optional<Rational> coefficient_;
};

/// Expectation-value frequencies -N - (2s - (2i-1)) for i = 1..2s, zeros
/// removed. Throws DegenerateSpectrumError when nothing remains.
FrequencySet evrt_frequencies(HalfIntegerSpin s, const Rational& n);

/// Wave-function eigenphase frequencies E_m/(K/hbar) = -m*N - m^2 for all
/// levels m = s..-s, zeros removed. Half-integer m yields denominators 2
/// and 4, which the rational gcd clears.
FrequencySet qrt_frequencies(HalfIntegerSpin s, const Rational& n);

/// Largest positive rational g such that every value/g is an integer.
/// Clears the set to a common denominator and takes the integer gcd there;
/// exact for arbitrary rational input.
Rational rational_gcd(const FrequencySet& set);

/// T = 2*pi*hbar / (rational_gcd(set) * k). Requires k != 0.
double period(const FrequencySet& set, double k);

/// Expectation-value revival time. Computed from the full frequency set of
/// the 2s-term series regardless of which amplitudes the initial state
/// populates. DeclaredIrrational -> infinite.
RevivalTime evrt(HalfIntegerSpin s, const RatioClass& ratio, double k);

/// Wave-function revival time (global phase included), same pipeline over
/// the eigenphase frequencies.
RevivalTime qrt(HalfIntegerSpin s, const RatioClass& ratio, double k);

/// alpha = QRT/EVRT as an exact rational. Throws when either is infinite
/// or the spectrum is degenerate.
Rational revival_ratio(HalfIntegerSpin s, const RatioClass& ratio, double k);

/// Independent period oracle working on floating-point frequencies only.
/// Returns the smallest T in (0, t_max] such that every omega_i*T/(2*pi)
/// is within tol of an integer, or nullopt when no such T exists in range.
/// Candidates are the harmonic multiples 2*pi*k/|omega_max|, which is an
/// exhaustive enumeration of possible common periods. Terms with exactly
/// zero coefficients (unpopulated by the initial state) are skipped.
std::optional<double> brute_force_period(const FourierSpectrum& spectrum,
                                         double t_max, double tol);

}  // namespace spinrev
