#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssqw/coin.hpp"
#include "ssqw/evolution.hpp"
#include "ssqw/scattering.hpp"

namespace ssqw {

/// Initial state as a list of (site, spinor) amplitudes. Must be normalized
/// within 1e-9 at load; it is then renormalized exactly.
struct InitialStateSpec {
  std::vector<long> sites;
  std::vector<Vec2> spinors;

  long support_lo() const;
  long support_hi() const;
  WalkerState build(Window w) const;
};

/// Parsed and validated run configuration (see configs/ for the schema).
struct RunConfig {
  // [shift]
  ShiftParams shift;

  // [coin]
  CoinModel coin_model = CoinModel::homogeneous;
  double a = 1.0, b = 0.0;
  Mat2 defect = Mat2::Identity();           // one_defect
  double a_minus = 1.0, b_minus = 0.0;      // two_phase
  double theta0 = 0.0;                      // short_range
  double theta_plus = 0.0, theta_minus = 0.0;  // anisotropic
  double eps = 1.0;

  // [initial]
  InitialStateSpec initial;

  // [run]
  std::vector<long> t_list{500, 1000, 2000, 4000};
  int k_grid = 8192;
  int v_grid = 512;
  std::vector<long> schedule{25, 50, 100, 200, 400, 800};
  double wave_tol = 1e-4;
  bool wave_strict = true;
  int bound_window = 256;
  unsigned long seed = 1;
  std::string out_dir = "out";
  int threads = 0;
  bool dump_states = false;

  CoinField build_coin_field() const;
  WaveOperatorOptions wave_options() const;
};

/// Parses the sectioned key = value format. Unknown keys, type errors and
/// violated numeric constraints throw ConfigError with file:line anchors.
RunConfig parse_run_config(const std::string& path);
RunConfig parse_run_config_text(const std::string& text, const std::string& name = "<string>");

}  // namespace ssqw
