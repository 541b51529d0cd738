#include "spinrev/perturbed_dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spinrev {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Eigen::MatrixXcd FullModel::hamiltonian() const {
  const SpinMatrices mats = spin_matrices(s);
  Eigen::MatrixXcd h = -bz * mats.sz.entries - k * mats.sz.entries *
                       mats.sz.entries;
  h -= bx * mats.sx.entries;
  return h;
}

Trajectory integrate(const SpinState& psi0, const FullModel& model,
                     const IntegratorConfig& cfg) {
  if (!(psi0.spin() == model.s)) {
    throw std::invalid_argument("state and model have different spin");
  }
  if (!(cfg.dt > 0.0) || cfg.t_end < 0.0 || cfg.record_every < 1) {
    throw std::invalid_argument("invalid integrator configuration");
  }
  const SpinMatrices mats = spin_matrices(model.s);
  const auto record = [&](Trajectory& traj, double t,
                          const Eigen::VectorXcd& y) {
    const double n = y.norm();
    SpinState state(model.s, y / n);
    traj.times.push_back(t);
    traj.sx.push_back(expectation(mats.sx, state) * n * n);
    traj.sy.push_back(expectation(mats.sy, state) * n * n);
    traj.sz.push_back(expectation(mats.sz, state) * n * n);
    traj.norm.push_back(n);
    traj.states.push_back(std::move(state));
  };

  Trajectory traj;
  if (cfg.t_end == 0.0) {
    record(traj, 0.0, psi0.amplitudes());
    return traj;
  }
  if (cfg.dt > cfg.t_end) {
    throw std::invalid_argument("dt must not exceed t_end");
  }

  const auto n_steps =
      std::max<long long>(1, std::llround(cfg.t_end / cfg.dt));
  const double dt = cfg.t_end / static_cast<double>(n_steps);
  const Eigen::MatrixXcd a = (-kI / hbar) * model.hamiltonian();

  Eigen::VectorXcd y = psi0.amplitudes();
  record(traj, 0.0, y);
  Eigen::VectorXcd k1, k2, k3, k4;
  for (long long step = 1; step <= n_steps; ++step) {
    k1 = a * y;
    k2 = a * (y + (0.5 * dt) * k1);
    k3 = a * (y + (0.5 * dt) * k2);
    k4 = a * (y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double drift = std::abs(y.norm() - 1.0);
    if (drift > 1e-6) {
      throw std::runtime_error(
          "norm drift " + std::to_string(drift) + " at t = " +
          std::to_string(step * dt) + " exceeds 1e-6; reduce dt");
    }
    if (step % cfg.record_every == 0 || step == n_steps) {
      record(traj, step * dt, y);
    }
  }
  return traj;
}

namespace {

struct Extremum {
  double t;
  double value;
  bool is_max;
};

// Interior local extrema with 3-point quadratic refinement. A plateau
// counts once, at its earliest sample.
std::vector<Extremum> local_extrema(const std::vector<double>& ts,
                                    const std::vector<double>& ys) {
  std::vector<Extremum> out;
  for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
    const double yl = ys[i - 1], y = ys[i], yr = ys[i + 1];
    const bool is_max = y > yl && y >= yr;
    const bool is_min = y < yl && y <= yr;
    if (!is_max && !is_min) continue;
    const double denom = yl - 2.0 * y + yr;
    double t_star = ts[i];
    double y_star = y;
    if (std::abs(denom) > 1e-300) {
      const double h = ts[i + 1] - ts[i];
      const double shift = 0.5 * (yl - yr) / denom;
      t_star = ts[i] + shift * h;
      y_star = y - 0.125 * (yl - yr) * (yl - yr) / denom;
    }
    out.push_back({t_star, y_star, is_max});
  }
  return out;
}

double starting_direction(const std::vector<double>& ys) {
  for (std::size_t j = 1; j < ys.size(); ++j) {
    const double d = ys[j] - ys[0];
    if (std::abs(d) > 1e-12) return d;
  }
  throw std::runtime_error("<Sz> is constant; no tunneling signal detected");
}

std::vector<Extremum> sz_minima(const Trajectory& traj) {
  std::vector<Extremum> minima;
  // A run that starts in the lower well begins at a minimum; counting the
  // boundary point makes "successive minima" span one full oscillation.
  if (starting_direction(traj.sz) > 0.0) {
    minima.push_back({traj.times.front(), traj.sz.front(), false});
  }
  for (const Extremum& e : local_extrema(traj.times, traj.sz)) {
    if (!e.is_max) minima.push_back(e);
  }
  return minima;
}

}  // namespace

double detect_mqt_time(const Trajectory& traj) {
  if (traj.size() < 3) {
    throw std::invalid_argument("trajectory too short for extremum detection");
  }
  // Starting in a well means the signal first moves away from an extremum;
  // the transfer completes at the first extremum of the opposite character.
  const bool rising = starting_direction(traj.sz) > 0.0;
  for (const Extremum& e : local_extrema(traj.times, traj.sz)) {
    if (e.is_max == rising) {
      return e.t;
    }
  }
  throw std::runtime_error(
      "no opposite extremum of <Sz> in trajectory; increase t_end");
}

double detect_q_evrt(const Trajectory& traj) {
  const std::vector<Extremum> minima = sz_minima(traj);
  if (minima.size() < 2) {
    throw std::runtime_error(
        "fewer than two <Sz> minima in trajectory; increase t_end");
  }
  return minima[1].t - minima[0].t;
}

double minima_gap(const Trajectory& traj) {
  const std::vector<Extremum> minima = sz_minima(traj);
  if (minima.size() < 2) {
    throw std::runtime_error(
        "fewer than two <Sz> minima in trajectory; increase t_end");
  }
  return minima[0].value - minima[1].value;
}

namespace {

double top_pair_gap(const FullModel& model) {
  const double s = model.s.value();
  const double e_top = -s * model.bz - model.k * s * s;
  const double e_next = -(s - 1.0) * model.bz - model.k * (s - 1.0) * (s - 1.0);
  return e_next - e_top;  // E_{s-1} - E_s
}

double top_coupling(const FullModel& model) {
  return model.bx * sx_offdiagonal(model.s, 1);
}

}  // namespace

double golden_rule_probability(const FullModel& model, double t) {
  const double de = top_pair_gap(model);
  const double v = top_coupling(model);
  if (std::abs(de * t / hbar) < 1e-8) {
    const double amp = v * t / hbar;
    return amp * amp;
  }
  const double env = std::sin(de * t / (2.0 * hbar)) / (de / 2.0);
  return v * v * env * env;
}

FirstOrderSigma first_order_sigma(const FullModel& model,
                                  const SpinState& psi0, double t) {
  if (!(psi0.spin() == model.s)) {
    throw std::invalid_argument("state and model have different spin");
  }
  const int d = model.s.dimension();
  const Eigen::VectorXd e = model.diagonal().energies();
  FirstOrderSigma result;
  result.sigma = Eigen::VectorXcd::Zero(d);
  result.resonant_upper.assign(d, false);
  result.resonant_lower.assign(d, false);

  // Each level couples to its two neighbors through Sx. A term with a
  // degenerate denominator is replaced by its t-linear limit.
  const auto term = [&](int n, int j, bool& flag) -> Complex {
    const double x = sx_offdiagonal(model.s, std::min(n, j) + 1);
    const double de = e(n) - e(j);
    const Complex amp0 = psi0.amplitude(j);
    if (std::abs(de * t / hbar) < 1e-8) {
      flag = true;
      return model.bx * x * amp0 * kI * (t / hbar);
    }
    return model.bx * x * amp0 * (std::exp(kI * (de * t / hbar)) - 1.0) / de;
  };

  for (int n = 0; n < d; ++n) {
    Complex sigma1 = 0.0;
    if (n > 0) {
      bool flag = false;
      sigma1 += term(n, n - 1, flag);
      result.resonant_upper[n] = flag;
    }
    if (n + 1 < d) {
      bool flag = false;
      sigma1 += term(n, n + 1, flag);
      result.resonant_lower[n] = flag;
    }
    result.sigma(n) = sigma1;
  }
  return result;
}

double validity_bound(const FullModel& model) {
  const double v = top_coupling(model);
  if (v == 0.0) {
    throw std::invalid_argument("validity bound is infinite for bx = 0");
  }
  return hbar / std::abs(v);
}

double predicted_tmqt(const FullModel& model) {
  const double v = top_coupling(model);
  if (v == 0.0) {
    throw std::invalid_argument("tunneling-time prediction needs bx != 0");
  }
  return std::numbers::pi * hbar / (2.0 * std::abs(v));
}

bool tunneling_resonance_condition(const FullModel& model) {
  if (model.k == 0.0) return false;
  const double n = model.bz / model.k;
  const double rounded = std::round(n);
  return std::abs(n - rounded) < 1e-9 && rounded <= model.s.twice_s();
}

TunnelingReport analyze_tunneling(const Trajectory& traj,
                                  const FullModel& model) {
  TunnelingReport report;
  report.t_mqt_measured = detect_mqt_time(traj);
  report.t_mqt_predicted = predicted_tmqt(model);
  report.t_q_evrt = detect_q_evrt(traj);
  report.minima_gap = minima_gap(traj);
  report.validity_t = validity_bound(model);
  report.ratio_q_evrt_over_mqt = report.t_q_evrt / report.t_mqt_measured;
  return report;
}

}  // namespace spinrev
