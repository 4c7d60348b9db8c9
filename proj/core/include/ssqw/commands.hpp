#pragma once

#include <iosfwd>
#include <string>

#include "ssqw/config.hpp"

namespace ssqw {

/// Resolves the output directory: SSQW_OUT_DIR environment variable wins,
/// then the --out flag, then the config value.
std::string resolve_out_dir(const RunConfig& cfg, const std::string& flag_out);

// Subcommand bodies. Each validates, runs the pipeline and writes its files
// under out_dir, logging one line per artifact. Errors propagate as the
// exception types in errors.hpp.
void cmd_simulate(const RunConfig& cfg, const std::string& out_dir, std::ostream& log);
void cmd_density(const RunConfig& cfg, const std::string& out_dir, std::ostream& log);
void cmd_compare(const RunConfig& cfg, const std::string& out_dir, std::ostream& log);
void cmd_spectrum(const RunConfig& cfg, const std::string& out_dir, std::ostream& log);

/// Maps the error taxonomy onto process exit codes (0 ok, 2 config,
/// 3 boundary touch, 4 non-convergence, 1 anything else).
int run_command(const std::string& name, const std::string& config_path,
                const std::string& flag_out, int flag_threads, std::ostream& log,
                std::ostream& err);

}  // namespace ssqw
