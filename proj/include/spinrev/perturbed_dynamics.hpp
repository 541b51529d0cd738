#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinrev/exact_evolution.hpp"
#include "spinrev/spin_algebra.hpp"
#include "spinrev/trajectory.hpp"

namespace spinrev {

/// H = -Sz*bz - k*Sz^2 - Sx*bx. The transverse term bx couples adjacent
/// levels and enables magnetization tunneling; the interesting regime is
/// |bx| << |bz|.
struct FullModel {
  HalfIntegerSpin s;
  double bz = 0.0;
  double k = 0.0;
  double bx = 0.0;

  Eigen::MatrixXcd hamiltonian() const;
  DiagonalModel diagonal() const { return DiagonalModel{s, bz, k}; }
};

struct IntegratorConfig {
  double dt = 1e-2;
  double t_end = 0.0;
  int record_every = 1;  // store every n-th step
};

/// Tunneling observables from one integrated trajectory.
struct TunnelingReport {
  double t_mqt_measured = 0.0;
  double t_mqt_predicted = 0.0;
  double t_q_evrt = 0.0;
  double minima_gap = 0.0;  // <Sz> at first minimum - at second, hbar units
  double validity_t = 0.0;  // first-order perturbation-theory bound
  double ratio_q_evrt_over_mqt = 0.0;
};

/// First-order perturbation coefficients for every level, with per-term
/// flags marking couplings that hit the degenerate (t-linear) limit form.
struct FirstOrderSigma {
  Eigen::VectorXcd sigma;
  std::vector<bool> resonant_upper;  // term coupling level j to j-1
  std::vector<bool> resonant_lower;  // term coupling level j to j+1
};

/// Fixed-step classical RK4 on d(psi)/dt = -(i/hbar) H psi. The step is
/// adjusted to divide t_end evenly (closest choice to the requested dt).
/// The norm is monitored every step and never silently restored; drift
/// beyond 1e-6 aborts with an error advising a smaller dt.
Trajectory integrate(const SpinState& psi0, const FullModel& model,
                     const IntegratorConfig& cfg);

/// Time from t = 0 to the first <Sz> extremum of character opposite to the
/// starting well (e.g. the first maximum when starting near a minimum),
/// refined by 3-point quadratic interpolation.
double detect_mqt_time(const Trajectory& traj);

/// Time between the first two interior minima of <Sz>.
double detect_q_evrt(const Trajectory& traj);

/// <Sz> at the first interior minimum minus <Sz> at the second (signed,
/// interpolated values).
double minima_gap(const Trajectory& traj);

/// Transition probability |sigma_s^(1)(t)|^2 between the top two levels
/// for population starting in level s-1:
///   |bx*(Sx)_{1,2}|^2 * |sin(dE*t/(2*hbar)) / (dE/2)|^2,
/// dE = E_{s-1} - E_s, with the t-linear sinc limit at resonance.
double golden_rule_probability(const FullModel& model, double t);

FirstOrderSigma first_order_sigma(const FullModel& model,
                                  const SpinState& psi0, double t);

/// Validity horizon of first-order theory: hbar / |bx*(Sx)_{1,2}|.
double validity_bound(const FullModel& model);

/// Tunneling-time estimate pi*hbar / (2*|bx*(Sx)_{1,2}|). Meaningful at an
/// avoided crossing, i.e. bz/k = N integer with N <= 2s; callers should
/// warn (not fail) outside that regime, see tunneling_resonance_condition.
double predicted_tmqt(const FullModel& model);

/// True when bz/k is an integer N with N <= 2s (within 1e-9).
bool tunneling_resonance_condition(const FullModel& model);

/// Measures T_MQT, q-EVRT and the minima gap on the trajectory and pairs
/// them with the perturbation-theory predictions.
TunnelingReport analyze_tunneling(const Trajectory& traj,
                                  const FullModel& model);

}  // namespace spinrev
