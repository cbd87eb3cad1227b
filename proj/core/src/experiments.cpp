// Copyright 2026 The lmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lmg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lmg/bath.hpp"
#include "lmg/errors.hpp"
#include "lmg/lindblad.hpp"
#include "lmg/semiclassical.hpp"
#include "lmg/slowflow.hpp"
#include "lmg/spin_algebra.hpp"
#include "lmg/thermal.hpp"

#ifndef LMG_VERSION_STRING
#define LMG_VERSION_STRING "unknown"
#endif

namespace lmg {
namespace {

const std::map<std::string, Experiment>& name_table() {
  static const std::map<std::string, Experiment> table = {
      {"figure1", Experiment::kFigure1},     {"figure2", Experiment::kFigure2},
      {"gap-scan", Experiment::kGapScan},    {"slowflow", Experiment::kSlowflow},
      {"classical", Experiment::kClassical}, {"kernels", Experiment::kKernels},
      {"stationarity", Experiment::kStationarity},
  };
  return table;
}

const std::vector<ConfigKey> kBathKeys = {
    {"gamma", "0.05", "system-bath coupling gamma"},
    {"omega_c", "auto", "bath cutoff; auto = 10 max(1, lambda)"},
    {"nu1", "auto", "override for nu1; auto computes it from T~ and omega_c"},
    {"form", "five-term", "Lindbladian form: five-term or jump-operator"},
};

std::vector<ConfigKey> with_bath(std::vector<ConfigKey> keys) {
  keys.insert(keys.end(), kBathKeys.begin(), kBathKeys.end());
  return keys;
}

std::vector<double> uniform_grid(double lo, double hi, long points) {
  std::vector<double> g(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  g.back() = hi;
  return g;
}

std::vector<double> stepped_grid(double t_max, double step) {
  const long n = std::lround(t_max / step);
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) g.push_back(std::min(t_max, step * static_cast<double>(i)));
  return g;
}

std::vector<std::string> header_for(Experiment e, const Config& config) {
  std::vector<std::string> h = {"lmg " + std::string(LMG_VERSION_STRING), "experiment = " + experiment_name(e)};
  for (const auto& [k, v] : config.values()) h.push_back(k + " = " + v);
  return h;
}

// Turns parameter errors raised while reading the configuration into ConfigError.
template <class F>
auto parse_phase(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

long positive_int(const Config& c, const std::string& key, long minimum) {
  const long v = c.get_int(key);
  require(v >= minimum, "key '" + key + "' must be >= " + std::to_string(minimum));
  return v;
}

double positive(const Config& c, const std::string& key) {
  const double v = c.get_double(key);
  require(std::isfinite(v) && v > 0.0, "key '" + key + "' must be positive");
  return v;
}

struct BathSettings {
  double gamma;
  std::optional<double> omega_c;
  std::optional<double> nu1;
  LindbladOptions options;
};

BathSettings read_bath(const Config& c) {
  BathSettings b{};
  b.gamma = c.get_double("gamma");
  require(std::isfinite(b.gamma) && b.gamma >= 0.0, "gamma must be >= 0");
  if (!c.is_auto("omega_c")) b.omega_c = positive(c, "omega_c");
  if (!c.is_auto("nu1")) b.nu1 = c.get_double("nu1");
  const std::string& form = c.get("form");
  if (form == "five-term") {
    b.options.form = LindbladForm::kFiveTerm;
  } else if (form == "jump-operator") {
    b.options.form = LindbladForm::kJumpOperator;
  } else {
    throw ConfigError("form must be five-term or jump-operator, got '" + form + "'");
  }
  return b;
}

ModelParams extensive_params(const BathSettings& b, double lambda, SpinQuantumNumber s, double ttilde) {
  ModelParams p;
  p.lambda = lambda;
  p.gamma = b.gamma;
  p.s = s;
  p.temperature_mode = TemperatureMode::kExtensive;
  p.temperature = ttilde;
  p.omega_c = b.omega_c.value_or(10.0 * std::max(1.0, lambda));
  p.nu1_override = b.nu1;
  p.validate();
  return p;
}

std::vector<double> default_energies(double lambda) {
  if (lambda > 1.0) return {0.5, -0.5, -1.1};
  return {0.5, 0.0, -0.5};
}

}  // namespace

CsvTable run_figure1(const Config& c) {
  const auto [lambdas, points] = parse_phase([&] {
    const auto l = c.get_double_list("lambdas");
    for (double x : l) require(std::isfinite(x) && x >= 0.0, "lambdas must be finite and >= 0");
    return std::make_pair(l, positive_int(c, "points", 2));
  });

  CsvTable t{header_for(Experiment::kFigure1, c), {"lambda", "epsilon", "A"}, {}};
  for (double lambda : lambdas) {
    const double eps_g = ground_energy(lambda);
    for (double eps : uniform_grid(eps_g, 1.0, points)) t.rows.push_back({lambda, eps, dissipation_A(eps, lambda)});
  }
  return t;
}

CsvTable run_figure2(const Config& c) {
  struct Plan {
    std::vector<double> lambdas;
    std::vector<double> ttildes;
    SpinQuantumNumber s = SpinQuantumNumber::from_twice(0);
    BathSettings bath;
    std::vector<double> energies;
    bool auto_energies;
    std::vector<double> grid;
    std::string method;
    EvolutionOptions evolution;
    double tol;
  };
  const Plan plan = parse_phase([&] {
    Plan p;
    p.lambdas = c.get_double_list("lambdas");
    p.ttildes = c.get_double_list("ttildes");
    for (double x : p.ttildes) require(std::isfinite(x) && x > 0.0, "ttildes must be positive and finite");
    p.s = SpinQuantumNumber(c.get_double("s"));
    require(p.s.twice() > 0, "s must be positive");
    p.bath = read_bath(c);
    require(p.bath.gamma > 0.0, "figure2 needs gamma > 0");
    p.auto_energies = c.is_auto("initial_energies");
    if (!p.auto_energies) p.energies = c.get_double_list("initial_energies");
    const double gt_max = positive(c, "gamma_t_max");
    const double gt_step = positive(c, "gamma_t_step");
    p.grid = stepped_grid(gt_max, gt_step);
    p.method = c.get("method");
    require(p.method == "auto" || p.method == "rk" || p.method == "eigen", "method must be auto, rk or eigen");
    p.evolution.rtol = positive(c, "rtol");
    p.evolution.atol = positive(c, "atol");
    p.tol = positive(c, "convergence_tol");
    for (double lambda : p.lambdas) {
      for (double tt : p.ttildes) extensive_params(p.bath, lambda, p.s, tt);
      for (double e : p.auto_energies ? default_energies(lambda) : p.energies) {
        coherent_theta_for_energy(p.s, lambda, e);
      }
    }
    if (p.method == "eigen") {
      require(p.s.dim() * p.s.dim() <= kEigenPropagatorCap, "method eigen needs (2s+1)^2 <= 4096");
    }
    return p;
  });

  const SpinOperators ops = build_spin_operators(plan.s);
  const bool use_eigen =
      plan.method == "eigen" || (plan.method == "auto" && ops.dim() * ops.dim() <= kEigenPropagatorCap);
  CsvTable t{header_for(Experiment::kFigure2, c), {"lambda", "Ttilde", "label", "gamma_t", "h"}, {}};
  std::vector<std::string> unconverged;

  for (double lambda : plan.lambdas) {
    const Matrix h = rescaled_hamiltonian(ops, lambda);
    for (double ttilde : plan.ttildes) {
      const ModelParams params = extensive_params(plan.bath, lambda, plan.s, ttilde);
      const Superoperator generator = build_lindbladian(ops, params, plan.bath.options);
      std::vector<double> times;
      for (double gt : plan.grid) times.push_back(gt / params.gamma);
      std::optional<EigenPropagator> propagator;
      if (use_eigen) propagator.emplace(generator);
      const double gibbs = gibbs_energy_density(ops, lambda, 1.0 / ttilde);

      for (double e0 : plan.auto_energies ? default_energies(lambda) : plan.energies) {
        const Matrix rho0 = coherent_state(ops, coherent_theta_for_energy(plan.s, lambda, e0), 0.0);
        const std::vector<Matrix> states =
            use_eigen ? propagator->propagate(rho0, times) : evolve_state(generator, rho0, times, plan.evolution);
        const std::vector<double> series = expectation_series(states, h);
        std::string label = "h0=" + format_double(e0);
        if (!(std::abs(series.back() - gibbs) < plan.tol)) {
          unconverged.push_back("lambda=" + format_double(lambda) + " Ttilde=" + format_double(ttilde) + " " + label);
          label += ":unconverged";
        }
        for (std::size_t i = 0; i < series.size(); ++i) t.rows.push_back({lambda, ttilde, label, plan.grid[i], series[i]});
      }
      t.rows.push_back({lambda, ttilde, std::string("gibbs"), plan.grid.back(), gibbs});
    }
  }
  t.header.push_back("propagation = " + std::string(use_eigen ? "eigen" : "rk"));
  t.header.push_back(unconverged.empty() ? "unconverged series: none" : "unconverged series: " + std::to_string(unconverged.size()));
  for (const auto& u : unconverged) t.header.push_back("unconverged: " + u);
  return t;
}

CsvTable run_gap_scan(const Config& c) {
  struct Plan {
    double lambda;
    double ttilde;
    std::vector<SpinQuantumNumber> spins;
    BathSettings bath;
  };
  const Plan plan = parse_phase([&] {
    Plan p;
    p.lambda = c.get_double("lambda");
    p.ttilde = positive(c, "ttilde");
    for (double s : c.get_double_list("s_values")) {
      p.spins.emplace_back(s);
      require(p.spins.back().twice() > 0, "s_values must be positive");
    }
    p.bath = read_bath(c);
    for (auto s : p.spins) extensive_params(p.bath, p.lambda, s, p.ttilde);
    return p;
  });

  CsvTable t{header_for(Experiment::kGapScan, c), {"S", "gap", "lambda1_real", "lambda1_imag"}, {}};
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (SpinQuantumNumber s : plan.spins) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
      const SpinOperators ops = build_spin_operators(s);
      const ModelParams params = extensive_params(plan.bath, plan.lambda, s, plan.ttilde);
      const SpectralGap g = spectral_gap(build_lindbladian(ops, params, plan.bath.options));
      t.rows.push_back({s.value(), g.gap, g.lambda1.real(), g.lambda1.imag()});
      lo = std::min(lo, g.gap);
      hi = std::max(hi, g.gap);
    } catch (const std::runtime_error& e) {
      t.header.push_back("S = " + format_double(s.value()) + " failed: " + e.what());
      t.rows.push_back({s.value(), nan, nan, nan});
    }
  }
  t.header.push_back("flatness max/min gap = " + format_double(lo > 0.0 && std::isfinite(lo) ? hi / lo : std::numeric_limits<double>::quiet_NaN()));
  return t;
}

CsvTable run_slowflow(const Config& c) {
  struct Plan {
    std::vector<double> lambdas;
    bool auto_eps;
    std::vector<double> eps;
    std::vector<double> grid;
  };
  const Plan plan = parse_phase([&] {
    Plan p;
    p.lambdas = c.get_double_list("lambdas");
    p.auto_eps = c.is_auto("eps0");
    if (!p.auto_eps) p.eps = c.get_double_list("eps0");
    p.grid = stepped_grid(positive(c, "s_max"), positive(c, "s_step"));
    for (double lambda : p.lambdas) {
      for (double e : p.auto_eps ? default_energies(lambda) : p.eps) elliptic_parameters(e, lambda);
    }
    return p;
  });

  CsvTable t{header_for(Experiment::kSlowflow, c), {"lambda", "eps0", "s", "epsilon"}, {}};
  for (double lambda : plan.lambdas) {
    t.header.push_back("lambda = " + format_double(lambda) + ": eps_g = " + format_double(ground_energy(lambda)) +
                       ", omega_h / gamma = " + format_double(dissipation_rate(lambda)));
    for (double e0 : plan.auto_eps ? default_energies(lambda) : plan.eps) {
      const std::vector<double> flow = eigenvalue_flow(e0, lambda, plan.grid);
      for (std::size_t i = 0; i < flow.size(); ++i) t.rows.push_back({lambda, e0, plan.grid[i], flow[i]});
    }
  }
  return t;
}

CsvTable run_classical(const Config& c) {
  struct Plan {
    double lambda;
    double gamma;
    ClassicalState start;
    std::vector<double> grid;
  };
  const Plan plan = parse_phase([&] {
    Plan p;
    p.lambda = c.get_double("lambda");
    p.gamma = c.get_double("gamma");
    require(std::isfinite(p.lambda), "lambda must be finite");
    require(std::isfinite(p.gamma) && p.gamma >= 0.0, "gamma must be >= 0");
    const double theta = c.get_double("theta");
    const double phi = c.get_double("phi");
    require(std::isfinite(theta) && std::isfinite(phi), "theta and phi must be finite");
    p.start = {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    p.grid = stepped_grid(positive(c, "t_max"), positive(c, "t_step"));
    return p;
  });

  const ClassicalTrajectory traj = integrate_classical(plan.start, plan.lambda, plan.gamma, plan.grid);
  CsvTable t{header_for(Experiment::kClassical, c), {"t", "x", "y", "z", "h"}, {}};
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const ClassicalState& s = traj.states[i];
    t.rows.push_back({traj.t[i], s.x, s.y, s.z, classical_energy(s, plan.lambda)});
  }
  t.header.push_back("sphere projections = " + std::to_string(traj.projections));
  return t;
}

CsvTable run_kernels(const Config& c) {
  struct Plan {
    double omega_c;
    double temperature;
    double x_max;
    long points;
  };
  const Plan plan = parse_phase([&] {
    return Plan{positive(c, "omega_c"), positive(c, "temperature"), positive(c, "x_max"), positive_int(c, "points", 2)};
  });

  CsvTable t{header_for(Experiment::kKernels, c), {"omega", "J", "tau", "eta"}, {}};
  ModelParams p;
  p.temperature_mode = TemperatureMode::kIntensive;
  p.temperature = plan.temperature;
  p.omega_c = plan.omega_c;
  t.header.push_back("nu1 = " + format_double(nu1(plan.temperature, plan.omega_c)));
  t.header.push_back("tau_B = " + format_double(bath_correlation_time(p)));
  for (double x : uniform_grid(0.0, plan.x_max, plan.points)) {
    const double omega = x * plan.omega_c;
    const double tau = x / plan.omega_c;
    t.rows.push_back({omega, spectral_density(omega, plan.omega_c), tau, noise_kernel(tau, plan.omega_c)});
  }
  return t;
}

CsvTable run_stationarity(const Config& c) {
  struct Plan {
    std::vector<double> lambdas;
    std::vector<double> beta_tildes;
    std::vector<SpinQuantumNumber> spins;
    BathSettings bath;
  };
  const Plan plan = parse_phase([&] {
    Plan p;
    p.lambdas = c.get_double_list("lambdas");
    p.beta_tildes = c.get_double_list("beta_tildes");
    for (double b : p.beta_tildes) require(std::isfinite(b) && b > 0.0, "beta_tildes must be positive and finite");
    for (double s : c.get_double_list("s_values")) {
      p.spins.emplace_back(s);
      require(p.spins.back().twice() > 0, "s_values must be positive");
    }
    p.bath = read_bath(c);
    for (double lambda : p.lambdas) {
      for (double b : p.beta_tildes) {
        for (auto s : p.spins) extensive_params(p.bath, lambda, s, 1.0 / b);
      }
    }
    return p;
  });

  CsvTable t{header_for(Experiment::kStationarity, c), {"lambda", "beta_tilde", "S", "residual", "ratio"}, {}};
  for (double lambda : plan.lambdas) {
    for (double b : plan.beta_tildes) {
      double previous = std::numeric_limits<double>::quiet_NaN();
      for (SpinQuantumNumber s : plan.spins) {
        const SpinOperators ops = build_spin_operators(s);
        const ModelParams params = extensive_params(plan.bath, lambda, s, 1.0 / b);
        const double r = stationarity_residual(ops, params, b, plan.bath.options);
        t.rows.push_back({lambda, b, s.value(), r, r / previous});
        previous = r;
      }
    }
  }
  return t;
}

Experiment parse_experiment(const std::string& name) {
  const auto it = name_table().find(name);
  if (it == name_table().end()) throw ConfigError("unknown experiment '" + name + "'");
  return it->second;
}

std::string experiment_name(Experiment experiment) {
  for (const auto& [name, e] : name_table()) {
    if (e == experiment) return name;
  }
  throw ContractViolation("experiment without a name");
}

std::vector<std::string> experiment_names() {
  std::vector<std::string> out;
  for (const auto& entry : name_table()) out.push_back(entry.first);
  return out;
}

const std::vector<ConfigKey>& experiment_keys(Experiment experiment) {
  static const std::map<Experiment, std::vector<ConfigKey>> keys = {
      {Experiment::kFigure1,
       {{"lambdas", "0.5,2", "coupling values"}, {"points", "1801", "energy grid points on [eps_g, 1]"}}},
      {Experiment::kFigure2,
       with_bath({{"lambdas", "0.5,2", "coupling values"},
                  {"ttildes", "0.5,2", "rescaled temperatures T~"},
                  {"s", "20", "spin quantum number"},
                  {"initial_energies", "auto", "coherent-state energies; auto picks three per phase"},
                  {"gamma_t_max", "60", "final rescaled time"},
                  {"gamma_t_step", "0.5", "output spacing in rescaled time"},
                  {"method", "auto", "auto, rk or eigen"},
                  {"rtol", "1e-8", "relative tolerance (rk)"},
                  {"atol", "1e-10", "absolute tolerance (rk)"},
                  {"convergence_tol", "5e-3", "allowed final distance from the Gibbs value"}})},
      {Experiment::kGapScan,
       with_bath({{"lambda", "0.5", "coupling"},
                  {"ttilde", "1", "rescaled temperature T~"},
                  {"s_values", "5,10,20,30", "spin quantum numbers"}})},
      {Experiment::kSlowflow,
       {{"lambdas", "0.5,2", "coupling values"},
        {"eps0", "auto", "initial energies; auto picks three per phase"},
        {"s_max", "40", "final slow time"},
        {"s_step", "0.1", "output spacing in slow time"}}},
      {Experiment::kClassical,
       {{"lambda", "0.5", "coupling"},
        {"gamma", "0.05", "damping"},
        {"theta", "2", "initial polar angle"},
        {"phi", "0", "initial azimuth"},
        {"t_max", "800", "final time"},
        {"t_step", "1", "output spacing"}}},
      {Experiment::kKernels,
       {{"omega_c", "10", "bath cutoff"},
        {"temperature", "1", "bath temperature T"},
        {"x_max", "5", "grid extent in units of omega_c (frequency) and 1/omega_c (time)"},
        {"points", "201", "grid points"}}},
      {Experiment::kStationarity,
       with_bath({{"lambdas", "0.5,2", "coupling values"},
                  {"beta_tildes", "1,3", "rescaled inverse temperatures"},
                  {"s_values", "10,20,40", "spin quantum numbers"}})},
  };
  return keys.at(experiment);
}

CsvTable run_experiment(Experiment experiment, const Config& config) {
  switch (experiment) {
    case Experiment::kFigure1: return run_figure1(config);
    case Experiment::kFigure2: return run_figure2(config);
    case Experiment::kGapScan: return run_gap_scan(config);
    case Experiment::kSlowflow: return run_slowflow(config);
    case Experiment::kClassical: return run_classical(config);
    case Experiment::kKernels: return run_kernels(config);
    case Experiment::kStationarity: return run_stationarity(config);
  }
  throw ContractViolation("unhandled experiment");
}

}  // namespace lmg
