#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinrev/spin_algebra.hpp"
#include "spinrev/trajectory.hpp"

namespace spinrev {

/// Diagonal model H = -Sz*bz - k*Sz^2. Level m has energy -m*bz - k*m^2,
/// so the Hamiltonian is diagonal in the Sz basis and the evolution is a
/// pure phase per level.
struct DiagonalModel {
  HalfIntegerSpin s;
  double bz = 0.0;  // reduced field, energy units
  double k = 0.0;   // uniaxial anisotropy, energy units

  /// Level energies, entry j = -(s-j)*bz - k*(s-j)^2 for j = 0..2s.
  Eigen::VectorXd energies() const;
};

/// One harmonic of the expectation-value series.
struct FourierTerm {
  double omega;  // rad/time
  double alpha;  // hbar units
  double beta;   // hbar units
};

/// The 2s-term series for <Sx>_t and <Sy>_t plus the constant <Sz>.
///   <Sx>(t) = sum_i alpha_i cos(omega_i t) + beta_i sin(omega_i t)
///   <Sy>(t) = sum_i alpha_i sin(omega_i t) - beta_i cos(omega_i t)
/// with omega_i = (-bz - (2s - (2i-1))*k)/hbar.
struct FourierSpectrum {
  std::vector<FourierTerm> terms;
  double constant_sz = 0.0;
};

struct ExpectationTriple {
  double sx, sy, sz;
};

/// Exact propagation: amplitude_j(t) = amplitude_j(0)*exp(-i*E_j*t/hbar).
/// Phases are computed from t directly, so there is no accumulation drift.
SpinState evolve_exact(const SpinState& psi0, const DiagonalModel& model,
                       double t);

/// Series coefficients from the initial amplitudes. Adjacent-level products
/// carry the cos/sin weights; the real/imag decomposition handles complex
/// initial amplitudes.
FourierSpectrum fourier_spectrum(const SpinState& psi0,
                                 const DiagonalModel& model);

ExpectationTriple eval_series(const FourierSpectrum& spectrum, double t);

/// Closed-form spin-1 expectation values, written out in scalar arithmetic
/// with no spin matrices or series machinery. Serves as an independent
/// oracle for fourier_spectrum/eval_series at s = 1.
ExpectationTriple spin1_reference(const SpinState& psi0,
                                  const DiagonalModel& model, double t);

/// Uniform grid of n_samples points on [0, t_end], each row from
/// evolve_exact plus direct matrix-element expectations.
Trajectory sample_exact(const SpinState& psi0, const DiagonalModel& model,
                        double t_end, int n_samples);

}  // namespace spinrev
