// spinrev — exact spin dynamics, quantum-revival times and magnetization
// tunneling from the command line. Emits CSV time series and JSON reports;
// plotting is left to downstream tools.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinrev/exact_evolution.hpp"
#include "spinrev/perturbed_dynamics.hpp"
#include "spinrev/rational.hpp"
#include "spinrev/revival.hpp"
#include "spinrev/spin_algebra.hpp"

using namespace spinrev;

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Value that is exact when written as 'a/b' or 'a', float-only otherwise.
struct ExactOrFloat {
  double value = 0.0;
  std::optional<Rational> exact;
};

ExactOrFloat parse_exact_or_float(const std::string& text,
                                  const std::string& name) {
  ExactOrFloat out;
  try {
    out.exact = Rational::parse(text);
    out.value = out.exact->to_double();
    return out;
  } catch (const std::invalid_argument&) {
  }
  try {
    std::size_t pos = 0;
    out.value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + name + " '" + text + "'");
  }
  return out;
}

Rational parse_exact(const std::string& text, const std::string& name) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        name + " must be an exact rational 'a/b' or integer, got '" + text +
        "' (revival classification is meaningless on floats)");
  }
}

Complex parse_complex_component(std::string tok) {
  if (tok.empty()) throw std::invalid_argument("empty amplitude component");
  if (tok.back() != 'i') {
    return Complex(std::stod(tok), 0.0);
  }
  tok.pop_back();  // drop the trailing 'i'
  // Split "a+b" / "a-b" at the last sign that is not an exponent sign.
  for (std::size_t p = tok.size(); p-- > 1;) {
    if ((tok[p] == '+' || tok[p] == '-') &&
        tok[p - 1] != 'e' && tok[p - 1] != 'E') {
      const double re = std::stod(tok.substr(0, p));
      const std::string im_text = tok.substr(p);
      const double im = (im_text == "+" || im_text == "-")
                            ? std::stod(im_text + "1")
                            : std::stod(im_text);
      return Complex(re, im);
    }
  }
  if (tok.empty() || tok == "+" || tok == "-") tok += "1";
  return Complex(0.0, std::stod(tok));
}

SpinState make_state(const std::string& text, HalfIntegerSpin s,
                     std::uint64_t seed) {
  const int d = s.dimension();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  if (text == "top") {
    v(0) = 1.0;
  } else if (text == "bottom") {
    v(d - 1) = 1.0;
  } else if (text == "uniform") {
    v.setOnes();
  } else if (text == "pair") {
    v(0) = 1.0;
    if (d > 1) v(1) = 1.0;
  } else if (text == "random") {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int j = 0; j < d; ++j) v(j) = Complex(dist(rng), dist(rng));
  } else {
    std::vector<Complex> comps;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = text.find(',', start);
      const std::string tok = text.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      try {
        comps.push_back(parse_complex_component(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument(
            "malformed state '" + text +
            "': expected a preset (top|bottom|uniform|pair|random) or a "
            "comma-separated amplitude list like '1,0,0.5-0.5i'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(comps.size()) != d) {
      throw std::invalid_argument(
          "state has " + std::to_string(comps.size()) + " amplitudes but s = " +
          std::to_string(s.value()) + " needs " + std::to_string(d));
    }
    for (int j = 0; j < d; ++j) v(j) = comps[j];
  }
  return normalize(v, s);
}

// Output destination: '-' means stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open '" + path + "'");
      to_file_ = true;
    }
  }
  std::ostream& stream() { return to_file_ ? file_ : std::cout; }
  bool to_file() const { return to_file_; }

 private:
  std::ofstream file_;
  bool to_file_ = false;
};

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          HalfIntegerSpin s) {
  os << "t,sx,sy,sz,norm";
  for (int j = 0; j < s.dimension(); ++j) {
    const std::string label = s.level_label(j);
    os << ",re_m" << label << ",im_m" << label;
  }
  os << "\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    os << fmt(traj.times[i]) << ',' << fmt(traj.sx[i]) << ','
       << fmt(traj.sy[i]) << ',' << fmt(traj.sz[i]) << ','
       << fmt(traj.norm[i]);
    for (int j = 0; j < s.dimension(); ++j) {
      const Complex amp = traj.states[i].amplitude(j);
      os << ',' << fmt(amp.real()) << ',' << fmt(amp.imag());
    }
    os << "\n";
  }
}

std::string describe_class(const RatioClass& ratio) {
  switch (ratio.kind()) {
    case RatioClass::Kind::Integer:
      return "integer";
    case RatioClass::Kind::NonIntegerRational:
      return "rational";
    case RatioClass::Kind::DeclaredIrrational:
      return "irrational";
  }
  return "?";
}

void print_revival_summary(std::ostream& os, HalfIntegerSpin s,
                           const RatioClass& ratio, double k) {
  os << "class = " << describe_class(ratio);
  if (!ratio.is_irrational()) {
    os << " (N = " << ratio.value().str() << ")";
  }
  os << "\n";
  const RevivalTime e = evrt(s, ratio, k);
  const RevivalTime q = qrt(s, ratio, k);
  if (e.is_finite()) {
    os << "EVRT = " << e.pi_hbar_over_k_multiple().str()
       << " * pi*hbar/K = " << fmt(e.time(k)) << "\n";
  } else {
    os << "EVRT = inf\n";
  }
  if (q.is_finite()) {
    os << "QRT = " << q.pi_hbar_over_k_multiple().str()
       << " * pi*hbar/K = " << fmt(q.time(k)) << "\n";
  } else {
    os << "QRT = inf\n";
  }
  if (e.is_finite() && q.is_finite()) {
    os << "alpha = QRT/EVRT = "
       << (q.pi_hbar_over_k_multiple() / e.pi_hbar_over_k_multiple()).str()
       << "\n";
  } else {
    os << "alpha = undefined\n";
  }
}

struct EvolveOpts {
  std::string spin, bz, k, state = "uniform", out = "-";
  double t_end = 0.0;
  int samples = 1000;
  std::uint64_t seed = 0;
};

int run_evolve(const EvolveOpts& opt) {
  const HalfIntegerSpin s = HalfIntegerSpin::parse(opt.spin);
  const ExactOrFloat bz = parse_exact_or_float(opt.bz, "--bz");
  const ExactOrFloat k = parse_exact_or_float(opt.k, "--k");
  const SpinState psi0 = make_state(opt.state, s, opt.seed);
  const DiagonalModel model{s, bz.value, k.value};
  const Trajectory traj = sample_exact(psi0, model, opt.t_end, opt.samples);

  Sink sink(opt.out);
  write_trajectory_csv(sink.stream(), traj, s);

  // Revival prediction is only meaningful with exact inputs.
  if (bz.exact && k.exact && !k.exact->is_zero() && k.value > 0.0) {
    std::ostream& info = sink.to_file() ? std::cout : std::cerr;
    try {
      print_revival_summary(info, s,
                            RatioClass::classify(*bz.exact / *k.exact),
                            k.value);
    } catch (const DegenerateSpectrumError&) {
      info << "expectation values are static for this spin and N = 0; "
              "no finite revival period\n";
    }
  }
  return 0;
}

struct SpectrumOpts {
  std::string spin, bz, k, state = "uniform";
  std::uint64_t seed = 0;
};

int run_spectrum(const SpectrumOpts& opt) {
  const HalfIntegerSpin s = HalfIntegerSpin::parse(opt.spin);
  const ExactOrFloat bz = parse_exact_or_float(opt.bz, "--bz");
  const ExactOrFloat k = parse_exact_or_float(opt.k, "--k");
  const SpinState psi0 = make_state(opt.state, s, opt.seed);
  const FourierSpectrum spec = fourier_spectrum(psi0, {s, bz.value, k.value});
  std::cout << "i,omega,alpha,beta\n";
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    const FourierTerm& term = spec.terms[i];
    std::cout << (i + 1) << ',' << fmt(term.omega) << ',' << fmt(term.alpha)
              << ',' << fmt(term.beta) << "\n";
  }
  std::cout << "constant_sz = " << fmt(spec.constant_sz) << "\n";
  return 0;
}

struct RevivalOpts {
  std::string spin, n, bz, k;
  bool irrational = false;
};

int run_revival(const RevivalOpts& opt) {
  const HalfIntegerSpin s = HalfIntegerSpin::parse(opt.spin);
  const Rational k = parse_exact(opt.k, "--k");
  if (k <= Rational(0)) {
    throw std::invalid_argument("--k must be positive");
  }
  RatioClass ratio = RatioClass::irrational();
  if (opt.irrational) {
    if (!opt.n.empty() || !opt.bz.empty()) {
      throw std::invalid_argument("--irrational excludes --n and --bz");
    }
  } else if (!opt.n.empty()) {
    if (!opt.bz.empty()) {
      throw std::invalid_argument("give either --n or --bz, not both");
    }
    ratio = RatioClass::classify(parse_exact(opt.n, "--n"));
  } else if (!opt.bz.empty()) {
    ratio = RatioClass::classify(parse_exact(opt.bz, "--bz") / k);
  } else {
    throw std::invalid_argument("need --n, --bz or --irrational");
  }
  std::cout << "spin = " << opt.spin << "\n";
  print_revival_summary(std::cout, s, ratio, k.to_double());
  return 0;
}

struct SweepOpts {
  std::string spin, k, out = "-";
  std::vector<std::string> bz;
};

int run_sweep(const SweepOpts& opt) {
  const HalfIntegerSpin s = HalfIntegerSpin::parse(opt.spin);
  const Rational k = parse_exact(opt.k, "--k");
  if (k <= Rational(0)) {
    throw std::invalid_argument("--k must be positive");
  }
  const double k_value = k.to_double();
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  os << "bz,n,class,evrt,qrt,alpha\n";
  for (const std::string& bz_text : opt.bz) {
    const Rational bz = parse_exact(bz_text, "--bz");
    const RatioClass ratio = RatioClass::classify(bz / k);
    const RevivalTime e = evrt(s, ratio, k_value);
    const RevivalTime q = qrt(s, ratio, k_value);
    os << bz.str() << ',' << ratio.value().str() << ','
       << describe_class(ratio) << ',' << fmt(e.time(k_value)) << ','
       << fmt(q.time(k_value)) << ','
       << (q.pi_hbar_over_k_multiple() / e.pi_hbar_over_k_multiple()).str()
       << "\n";
  }
  return 0;
}

struct TunnelOpts {
  std::string spin, bz, k, state = "bottom", out = "-", report;
  double bx = 0.0, t_end = 0.0, dt = 1e-2;
  int record_every = 10;
  std::uint64_t seed = 0;
};

int run_tunnel(const TunnelOpts& opt) {
  const HalfIntegerSpin s = HalfIntegerSpin::parse(opt.spin);
  if (opt.bx == 0.0) {
    throw std::invalid_argument("tunnel requires a transverse field, bx != 0");
  }
  const FullModel model{s, parse_exact_or_float(opt.bz, "--bz").value,
                        parse_exact_or_float(opt.k, "--k").value, opt.bx};
  if (!tunneling_resonance_condition(model)) {
    std::cerr << "warning: bz/k is not an integer N <= 2s; the tunneling-time "
                 "prediction assumes an avoided level crossing\n";
  }
  const SpinState psi0 = make_state(opt.state, s, opt.seed);
  const Trajectory traj =
      integrate(psi0, model, {opt.dt, opt.t_end, opt.record_every});
  const TunnelingReport report = analyze_tunneling(traj, model);

  Sink csv(opt.out);
  write_trajectory_csv(csv.stream(), traj, s);

  nlohmann::json j;
  j["t_mqt_measured"] = report.t_mqt_measured;
  j["t_mqt_predicted"] = report.t_mqt_predicted;
  j["t_q_evrt"] = report.t_q_evrt;
  j["minima_gap"] = report.minima_gap;
  j["validity_t"] = report.validity_t;
  j["ratio_q_evrt_over_mqt"] = report.ratio_q_evrt_over_mqt;
  if (!opt.report.empty() && opt.report != "-") {
    std::ofstream rf(opt.report);
    if (!rf) throw std::runtime_error("cannot open '" + opt.report + "'");
    rf << j.dump(2) << "\n";
  } else {
    // Keep the report off the CSV stream when both go to stdout.
    std::ostream& os = csv.to_file() ? std::cout : std::cerr;
    os << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum dynamics of a single effective spin under uniaxial "
      "anisotropy: exact evolution, revival times via exact rational gcd, "
      "and resonant magnetization tunneling"};
  app.require_subcommand(1);

  EvolveOpts evolve_opts;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Sample the exact evolution into a CSV time series");
  evolve->add_option("--spin", evolve_opts.spin, "spin s, e.g. 3/2")
      ->required();
  evolve->add_option("--bz", evolve_opts.bz, "reduced field (a/b or decimal)")
      ->required();
  evolve->add_option("--k", evolve_opts.k, "anisotropy (a/b or decimal)")
      ->required();
  evolve->add_option("--state", evolve_opts.state,
                     "preset top|bottom|uniform|pair|random or amplitudes");
  evolve->add_option("--t-end", evolve_opts.t_end, "end time")->required();
  evolve->add_option("--samples", evolve_opts.samples, "number of rows");
  evolve->add_option("--out", evolve_opts.out, "CSV path, '-' for stdout");
  evolve->add_option("--seed", evolve_opts.seed, "seed for --state random");

  SpectrumOpts spectrum_opts;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Print the characteristic frequencies and coefficients");
  spectrum->add_option("--spin", spectrum_opts.spin, "spin s")->required();
  spectrum->add_option("--bz", spectrum_opts.bz, "reduced field")->required();
  spectrum->add_option("--k", spectrum_opts.k, "anisotropy")->required();
  spectrum->add_option("--state", spectrum_opts.state, "initial state");
  spectrum->add_option("--seed", spectrum_opts.seed,
                       "seed for --state random");

  RevivalOpts revival_opts;
  CLI::App* revival = app.add_subcommand(
      "revival", "Exact revival times for a field-to-anisotropy ratio");
  revival->add_option("--spin", revival_opts.spin, "spin s")->required();
  revival->add_option("--n", revival_opts.n, "ratio N = bz/k, exact a/b");
  revival->add_option("--bz", revival_opts.bz, "reduced field, exact a/b");
  revival->add_option("--k", revival_opts.k, "anisotropy, exact a/b")
      ->required();
  revival->add_flag("--irrational", revival_opts.irrational,
                    "declare the ratio irrational");

  SweepOpts sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Revival-time table over a list of exact field values");
  sweep->add_option("--spin", sweep_opts.spin, "spin s")->required();
  sweep->add_option("--k", sweep_opts.k, "anisotropy, exact a/b")->required();
  sweep->add_option("--bz", sweep_opts.bz, "field values, exact a/b")
      ->required()
      ->expected(-1);
  sweep->add_option("--out", sweep_opts.out, "CSV path, '-' for stdout");

  TunnelOpts tunnel_opts;
  CLI::App* tunnel = app.add_subcommand(
      "tunnel", "Integrate with a transverse field and report tunneling times");
  tunnel->add_option("--spin", tunnel_opts.spin, "spin s")->required();
  tunnel->add_option("--bz", tunnel_opts.bz, "reduced field")->required();
  tunnel->add_option("--k", tunnel_opts.k, "anisotropy")->required();
  tunnel->add_option("--bx", tunnel_opts.bx, "transverse field")->required();
  tunnel->add_option("--t-end", tunnel_opts.t_end, "end time")->required();
  tunnel->add_option("--dt", tunnel_opts.dt, "integrator step");
  tunnel->add_option("--record-every", tunnel_opts.record_every,
                     "store every n-th step");
  tunnel->add_option("--state", tunnel_opts.state, "initial state");
  tunnel->add_option("--out", tunnel_opts.out, "CSV path, '-' for stdout");
  tunnel->add_option("--report", tunnel_opts.report,
                     "JSON report path (default: stdout when the CSV goes "
                     "to a file, stderr otherwise)");
  tunnel->add_option("--seed", tunnel_opts.seed, "seed for --state random");

  CLI11_PARSE(app, argc, argv);

  try {
    if (evolve->parsed()) return run_evolve(evolve_opts);
    if (spectrum->parsed()) return run_spectrum(spectrum_opts);
    if (revival->parsed()) return run_revival(revival_opts);
    if (sweep->parsed()) return run_sweep(sweep_opts);
    if (tunnel->parsed()) return run_tunnel(tunnel_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
