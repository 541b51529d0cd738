#include "spinrev/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spinrev {

namespace {
constexpr Complex kI{0.0, 1.0};
}

HalfIntegerSpin::HalfIntegerSpin(int twice_s) : twice_s_(twice_s) {
  if (twice_s < 1) {
    throw std::invalid_argument("spin quantum number must be >= 1/2");
  }
}

HalfIntegerSpin HalfIntegerSpin::parse(const std::string& text) {
  std::size_t pos = 0;
  long a = 0, b = 1;
  try {
    a = std::stol(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse spin '" + text + "'");
  }
  if (pos < text.size()) {
    if (text[pos] != '/') {
      throw std::invalid_argument("cannot parse spin '" + text + "'");
    }
    std::size_t pos2 = 0;
    const std::string denom = text.substr(pos + 1);
    try {
      b = std::stol(denom, &pos2);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse spin '" + text + "'");
    }
    if (pos2 != denom.size()) {
      throw std::invalid_argument("cannot parse spin '" + text + "'");
    }
  }
  if (b != 1 && b != 2) {
    throw std::invalid_argument("spin denominator must be 1 or 2: '" + text +
                                "'");
  }
  const long twice = (b == 2) ? a : 2 * a;
  if (twice < 1 || twice > 1000) {
    throw std::invalid_argument("spin out of range: '" + text + "'");
  }
  return HalfIntegerSpin(static_cast<int>(twice));
}

std::string HalfIntegerSpin::level_label(int j) const {
  const int twice_m = level_twice_m(j);
  std::string sign = twice_m > 0 ? "+" : (twice_m < 0 ? "-" : "");
  const int mag = std::abs(twice_m);
  if (mag % 2 == 0) {
    return sign + std::to_string(mag / 2);
  }
  return sign + std::to_string(mag) + "/2";
}

SpinState::SpinState(HalfIntegerSpin s, Eigen::VectorXcd amplitudes)
    : s_(s), amps_(std::move(amplitudes)) {
  if (amps_.size() != s_.dimension()) {
    throw std::invalid_argument("amplitude vector has wrong dimension");
  }
  if (std::abs(amps_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("state is not normalized");
  }
}

SpinState SpinState::basis(HalfIntegerSpin s, int j) {
  if (j < 0 || j >= s.dimension()) {
    throw std::invalid_argument("basis index out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s.dimension());
  v(j) = 1.0;
  return SpinState(s, std::move(v));
}

SpinMatrices spin_matrices(HalfIntegerSpin spin) {
  const int d = spin.dimension();
  const double s = spin.value();
  Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd sy = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 1; a <= d; ++a) {
    sz(a - 1, a - 1) = hbar * (s - (a - 1));
    if (a < d) {
      const int b = a + 1;
      const double x = 0.5 * hbar * std::sqrt((s + 1) * (a + b - 1) -
                                              static_cast<double>(a) * b);
      sx(a - 1, b - 1) = x;
      sx(b - 1, a - 1) = x;
      sy(a - 1, b - 1) = -kI * x;  // upper
      sy(b - 1, a - 1) = kI * x;   // lower
    }
  }
  return SpinMatrices{{spin, SpinAxis::X, std::move(sx)},
                      {spin, SpinAxis::Y, std::move(sy)},
                      {spin, SpinAxis::Z, std::move(sz)}};
}

double sx_offdiagonal(HalfIntegerSpin spin, int i) {
  if (i < 1 || i > spin.twice_s()) {
    throw std::invalid_argument("off-diagonal index out of range");
  }
  const double s = spin.value();
  return 0.5 * hbar *
         std::sqrt((s + 1) * 2.0 * i - (static_cast<double>(i) * i + i));
}

double expectation(const SpinOperatorMatrix& M, const SpinState& psi) {
  if (!(M.s == psi.spin())) {
    throw std::invalid_argument("operator and state have different spin");
  }
  const Complex raw = psi.amplitudes().dot(M.entries * psi.amplitudes());
  if (std::abs(raw.imag()) >= 1e-12) {
    throw std::runtime_error("expectation value has non-real part");
  }
  return raw.real();
}

SpinState normalize(const Eigen::VectorXcd& v, HalfIntegerSpin s) {
  if (v.size() != s.dimension()) {
    throw std::invalid_argument("amplitude vector has wrong dimension");
  }
  if (!v.allFinite()) {
    throw std::invalid_argument("amplitude vector has non-finite entries");
  }
  const double n = v.norm();
  if (n <= 0.0) {
    throw std::invalid_argument("cannot normalize a zero vector");
  }
  return SpinState(s, v / n);
}

Eigen::MatrixXcd commutator(const SpinOperatorMatrix& A,
                            const SpinOperatorMatrix& B) {
  if (!(A.s == B.s)) {
    throw std::invalid_argument("operators have different spin");
  }
  return A.entries * B.entries - B.entries * A.entries;
}

}  // namespace spinrev
