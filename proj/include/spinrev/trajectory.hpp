#pragma once

#include <vector>

#include "spinrev/spin_algebra.hpp"

namespace spinrev {

/// Sampled time series of a spin state and its expectation values.
/// All columns have equal length; `states` may be empty for synthetic
/// trajectories that only carry expectation values.
struct Trajectory {
  std::vector<double> times;
  std::vector<SpinState> states;
  std::vector<double> sx, sy, sz;
  std::vector<double> norm;

  std::size_t size() const { return times.size(); }
};

}  // namespace spinrev
