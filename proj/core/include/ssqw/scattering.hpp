#pragma once

#include <vector>

#include "ssqw/evolution.hpp"
#include "ssqw/spectral.hpp"

namespace ssqw {

/// (F psi)(k) = sum_x e^{-ikx} psi(x) on the grid nodes.
std::vector<Vec2> fourier(const WalkerState& state, const KGrid& grid, int threads = 0);

struct BoundState {
  Complex eigenvalue;
  WalkerState vector;  // normalized, window of the diagonalization
};

struct DetectOptions {
  double gap_tol = 1e-3;           // arc distance from the bands
  double localization_tol = 1e-6;  // mass allowed outside the inner half window
  double stability_tol = 1e-3;     // max w0 drift allowed when the window doubles
  bool check_doubling = true;
};

struct BoundStateResult {
  double w0 = 0.0;  // sum of |<phi_b, psi0>|^2 over detected states
  std::vector<BoundState> states;
  int window_sites = 0;
  double w0_smaller_window = 0.0;  // w0 at half the window when doubling ran
};

/// Dense-diagonalizes the truncation of U to n_sites sites centered at the
/// origin (couplings leaving the window are dropped, so unitarity is lost at
/// the two edge rows; edge modes fail the localization filter). An eigenpair
/// counts as a bound state when its eigenvalue sits in a spectral gap of U0
/// and nearly all of its mass lies in the inner half of the window. With
/// check_doubling the detection is repeated at 2 n_sites and a w0 drift above
/// stability_tol throws WindowSensitivityError; the doubled-window result is
/// returned.
BoundStateResult detect_bound_states(const ShiftParams& shift, const CoinField& coins,
                                     int n_sites, const WalkerState& psi0,
                                     const DetectOptions& opts = {});

struct WaveOperatorOptions {
  std::vector<long> schedule{25, 50, 100, 200, 400, 800};
  double tol = 1e-4;
  bool strict = false;              // throw ConvergenceError when not converged
  bool subtract_bound_states = true;
  int bound_window = 256;           // n_sites for detect_bound_states
  DetectOptions detect;
};

struct WaveOperatorResult {
  WalkerState scattered;  // Phi_T ~ U0^{-T} U^T (psi0 - point-spectrum part)
  double w0 = 0.0;
  std::vector<BoundState> bound_states;
  std::vector<long> horizons;       // schedule prefix actually run
  std::vector<double> residuals;    // ||Phi_{T_i} - Phi_{T_{i-1}}||
  long horizon_used = 0;
  bool converged = false;
  bool residuals_monotone = true;
};

/// Approximates the scattered component by iterating U0^{-T} U^T over the
/// schedule until two consecutive horizons differ by at most tol. The
/// point-spectrum component is removed first, since the iteration does not
/// converge on it. Homogeneous fields short-circuit to Phi = psi0 exactly.
WaveOperatorResult approximate_wave_operator(const WalkerState& psi0, const ShiftParams& shift,
                                             const CoinField& coins,
                                             const WaveOperatorOptions& opts = {});

/// w_j(k) = |<u_j(k), (F Phi)(k)>|^2. The squared modulus makes the weights a
/// density; totals are checked against ||Phi||^2 downstream.
WeightTable momentum_weights(const WalkerState& phi, const DispersionData& dispersion,
                             int threads = 0);

struct ScatteringResult {
  WalkerState scattered;
  WeightTable weights;
  double w0 = 0.0;
  std::vector<Complex> gap_eigenvalues;
  std::vector<long> horizons;
  std::vector<double> residuals;
  long horizon_used = 0;
  bool converged = false;
  bool residuals_monotone = true;
  double mass_check = 0.0;  // w0 + (1/2pi) Int (w1 + w2) dk, should be 1
};

/// Full pipeline: wave operator, then momentum weights on the dispersion grid.
ScatteringResult scatter(const WalkerState& psi0, const ShiftParams& shift,
                         const CoinField& coins, const DispersionData& dispersion,
                         const WaveOperatorOptions& opts = {}, int threads = 0);

}  // namespace ssqw
