#include "spinrev/exact_evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace spinrev {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Eigen::VectorXd DiagonalModel::energies() const {
  const int d = s.dimension();
  Eigen::VectorXd e(d);
  for (int j = 0; j < d; ++j) {
    const double m = s.level_m(j);
    e(j) = -m * bz - k * m * m;
  }
  return e;
}

SpinState evolve_exact(const SpinState& psi0, const DiagonalModel& model,
                       double t) {
  if (!(psi0.spin() == model.s)) {
    throw std::invalid_argument("state and model have different spin");
  }
  const Eigen::VectorXd e = model.energies();
  Eigen::VectorXcd amps = psi0.amplitudes();
  for (int j = 0; j < amps.size(); ++j) {
    amps(j) *= std::exp(-kI * (e(j) * t / hbar));
  }
  return SpinState(model.s, std::move(amps));
}

FourierSpectrum fourier_spectrum(const SpinState& psi0,
                                 const DiagonalModel& model) {
  if (!(psi0.spin() == model.s)) {
    throw std::invalid_argument("state and model have different spin");
  }
  const int twice_s = model.s.twice_s();
  FourierSpectrum spec;
  spec.terms.reserve(twice_s);
  for (int i = 1; i <= twice_s; ++i) {
    const double x = sx_offdiagonal(model.s, i);
    const Complex upper = psi0.amplitude(i - 1);  // level m = s-(i-1)
    const Complex lower = psi0.amplitude(i);      // level m = s-i
    FourierTerm term;
    term.omega = (-model.bz - (twice_s - (2 * i - 1)) * model.k) / hbar;
    term.alpha = 2.0 * x *
                 (upper.real() * lower.real() + upper.imag() * lower.imag());
    term.beta = 2.0 * x *
                (-upper.real() * lower.imag() + upper.imag() * lower.real());
    spec.terms.push_back(term);
  }
  double sz = 0.0;
  for (int j = 0; j < model.s.dimension(); ++j) {
    sz += hbar * model.s.level_m(j) * std::norm(psi0.amplitude(j));
  }
  spec.constant_sz = sz;
  return spec;
}

ExpectationTriple eval_series(const FourierSpectrum& spectrum, double t) {
  double sx = 0.0;
  double sy = 0.0;
  for (const FourierTerm& term : spectrum.terms) {
    const double c = std::cos(term.omega * t);
    const double s = std::sin(term.omega * t);
    sx += term.alpha * c + term.beta * s;
    sy += term.alpha * s - term.beta * c;
  }
  return {sx, sy, spectrum.constant_sz};
}

ExpectationTriple spin1_reference(const SpinState& psi0,
                                  const DiagonalModel& model, double t) {
  if (psi0.spin().twice_s() != 2 || model.s.twice_s() != 2) {
    throw std::invalid_argument("spin1_reference requires s = 1");
  }
  // Explicit closed form for s = 1, written in plain scalars: amplitudes
  // phi_{+1}, phi_0, phi_{-1} and the two frequencies (-bz -+ k)/hbar.
  const double a1 = psi0.amplitude(0).real(), b1 = psi0.amplitude(0).imag();
  const double a0 = psi0.amplitude(1).real(), b0 = psi0.amplitude(1).imag();
  const double am = psi0.amplitude(2).real(), bm = psi0.amplitude(2).imag();
  const double w1 = (-model.bz - model.k) / hbar;
  const double w2 = (-model.bz + model.k) / hbar;
  const double g = 2.0 * hbar / std::sqrt(2.0);

  // conj(phi_{+1})*phi_0 and conj(phi_0)*phi_{-1}, split into re/im.
  const double p1r = a1 * a0 + b1 * b0;
  const double p1i = a1 * b0 - b1 * a0;
  const double p2r = a0 * am + b0 * bm;
  const double p2i = a0 * bm - b0 * am;

  const double sx = g * (p1r * std::cos(w1 * t) - p1i * std::sin(w1 * t) +
                         p2r * std::cos(w2 * t) - p2i * std::sin(w2 * t));
  const double sy = g * (p1r * std::sin(w1 * t) + p1i * std::cos(w1 * t) +
                         p2r * std::sin(w2 * t) + p2i * std::cos(w2 * t));
  const double sz =
      hbar * ((a1 * a1 + b1 * b1) - (am * am + bm * bm));
  return {sx, sy, sz};
}

Trajectory sample_exact(const SpinState& psi0, const DiagonalModel& model,
                        double t_end, int n_samples) {
  if (n_samples < 2) {
    throw std::invalid_argument("need at least 2 samples");
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("t_end must be positive and finite");
  }
  const SpinMatrices mats = spin_matrices(model.s);
  Trajectory traj;
  traj.times.reserve(n_samples);
  traj.states.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double t = t_end * i / (n_samples - 1);
    SpinState state = evolve_exact(psi0, model, t);
    traj.times.push_back(t);
    traj.sx.push_back(expectation(mats.sx, state));
    traj.sy.push_back(expectation(mats.sy, state));
    traj.sz.push_back(expectation(mats.sz, state));
    traj.norm.push_back(state.amplitudes().norm());
    traj.states.push_back(std::move(state));
  }
  return traj;
}

}  // namespace spinrev
