#pragma once

#include <stdexcept>
#include <string>

namespace ssqw {

/// Bad or inconsistent run configuration (also used for invalid constructor inputs
/// detected at load time).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parameter or state outside the domain a routine is defined on.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Wavefront would reach the lattice window edge. Never truncated silently.
struct BoundaryTouchError : std::runtime_error {
  explicit BoundaryTouchError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Iterative limit did not reach its tolerance within the configured schedule.
struct ConvergenceError : std::runtime_error {
  double residual;
  ConvergenceError(const std::string& msg, double res)
      : std::runtime_error(msg), residual(res) {}
};

/// Truncated-diagonalization result changed materially when the window doubled.
struct WindowSensitivityError : std::runtime_error {
  double w0_small, w0_large;
  WindowSensitivityError(const std::string& msg, double small, double large)
      : std::runtime_error(msg), w0_small(small), w0_large(large) {}
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int config = 2;
inline constexpr int boundary = 3;
inline constexpr int no_convergence = 4;
}  // namespace exit_code

}  // namespace ssqw
