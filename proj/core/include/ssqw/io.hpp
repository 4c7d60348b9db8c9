#pragma once

#include <string>
#include <vector>

#include "ssqw/evolution.hpp"
#include "ssqw/limit_law.hpp"
#include "ssqw/scattering.hpp"
#include "ssqw/stats.hpp"

namespace ssqw {

/// Shortest 17-significant-digit decimal form, '.' decimal point, no locale.
std::string fmt_double(double x);

struct DistributionSnapshot {
  long t;
  ProbTable dist;
};

struct StateSnapshot {
  long t;
  WalkerState state;
};

// CSV emitters. Column order is part of the file contract; every file starts
// with a header row.
void write_distribution_csv(const std::string& path, const std::vector<DistributionSnapshot>& rows);
void write_states_csv(const std::string& path, const std::vector<StateSnapshot>& rows);
void write_dispersion_csv(const std::string& path, const DispersionData& d);
void write_weights_csv(const std::string& path, const WeightTable& w);
void write_density_csv(const std::string& path, const LimitDensity& mu, int v_grid);
void write_convergence_csv(const std::string& path, const ConvergenceReport& report);

void write_scattering_json(const std::string& path, const ScatteringResult& r);
void write_density_summary_json(const std::string& path, const DensitySummary& s);
void write_convergence_summary_json(const std::string& path, const ConvergenceReport& report,
                                    const DensitySummary& s);

}  // namespace ssqw
