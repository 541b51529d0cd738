#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "spinrev/constants.hpp"

namespace spinrev {

using Complex = std::complex<double>;

/// Spin quantum number stored exactly as 2s, so both integer and
/// half-integer spins are represented without floating point.
class HalfIntegerSpin {
 public:
  explicit HalfIntegerSpin(int twice_s);

  /// Parses "1/2"-style text: "3/2", "1", "2". Denominator must be 1 or 2.
  static HalfIntegerSpin parse(const std::string& text);

  int twice_s() const { return twice_s_; }
  int dimension() const { return twice_s_ + 1; }
  double value() const { return 0.5 * twice_s_; }
  bool is_integer_spin() const { return twice_s_ % 2 == 0; }

  /// Magnetic quantum number of amplitude index j (index 0 <-> m = +s).
  double level_m(int j) const { return 0.5 * (twice_s_ - 2 * j); }
  int level_twice_m(int j) const { return twice_s_ - 2 * j; }

  /// Text label for level j: "+1", "0", "-1" or "+3/2", "-1/2", ...
  std::string level_label(int j) const;

  bool operator==(const HalfIntegerSpin& o) const = default;

 private:
  int twice_s_;
};

/// Normalized complex amplitude vector over m = s ... -s (descending m).
class SpinState {
 public:
  SpinState(HalfIntegerSpin s, Eigen::VectorXcd amplitudes);

  const HalfIntegerSpin& spin() const { return s_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  int dimension() const { return s_.dimension(); }
  Complex amplitude(int j) const { return amps_(j); }

  /// Basis state |m = s - j>.
  static SpinState basis(HalfIntegerSpin s, int j);

 private:
  HalfIntegerSpin s_;
  Eigen::VectorXcd amps_;
};

enum class SpinAxis { X, Y, Z };

/// Dense Hermitian spin operator matrix for a fixed s, in units of hbar.
struct SpinOperatorMatrix {
  HalfIntegerSpin s;
  SpinAxis axis;
  Eigen::MatrixXcd entries;
};

struct SpinMatrices {
  SpinOperatorMatrix sx, sy, sz;
};

/// The generalized spin matrices. Sx and Sy are tridiagonal with zero
/// diagonal, Sz is diagonal with entries hbar*(s - (a-1)). The Sy sign
/// convention (+i below / -i above the diagonal) is fixed by requiring
/// [Sx, Sy] = i*hbar*Sz.
SpinMatrices spin_matrices(HalfIntegerSpin s);

/// Off-diagonal element (Sx)_{i,i+1}, 1-based i in 1..2s.
double sx_offdiagonal(HalfIntegerSpin s, int i);

/// <psi|M|psi>. The sesquilinear form must be real to 1e-12; the residual
/// imaginary part is discarded.
double expectation(const SpinOperatorMatrix& M, const SpinState& psi);

/// Scales v to unit norm. Rejects zero and non-finite input.
SpinState normalize(const Eigen::VectorXcd& v, HalfIntegerSpin s);

/// AB - BA.
Eigen::MatrixXcd commutator(const SpinOperatorMatrix& A,
                            const SpinOperatorMatrix& B);

}  // namespace spinrev
