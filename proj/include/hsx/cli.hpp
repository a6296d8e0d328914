// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hsx/initial_data.hpp"

namespace hsx::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kInvariantFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kIoError = 3;

struct GeomGrid {
  double t_min = 0.0;
  double t_max = 0.0;
  int count = 0;
};

struct RunConfig {
  std::string command;  // validate | slice | rates | pointwise | verify
  std::string input_path;
  std::string example;  // builtin spec, e.g. "dirac:1,4,0"
  EquationForm form = EquationForm::A;
  std::vector<double> t_values;
  std::optional<GeomGrid> t_geom;
  std::vector<double> x_values;  // also the alpha labels in --characteristics mode
  std::string region = "all";
  std::optional<double> theta;
  std::string out_path;  // empty: stdout
  int quad = 32;
  std::uint64_t seed = 1;
  bool characteristics = false;
  int verify_count = 200;
  int threads = 0;  // 0: resolve from HSX_THREADS, default 1
};

/// Builtin datasets: "dirac:k,ell,x0", "compact", "sine:a,R,n", "kink:m".
/// Throws std::invalid_argument on unknown names or bad parameters.
InitialData parse_example(const std::string& spec);

/// Resolves the configured input source (file or builtin).
InitialData load_input(const RunConfig& cfg);

/// Expands --t/--t-geom into the time grid. Geometric grids require
/// t_min > 0 and count >= 3.
std::vector<double> time_grid(const RunConfig& cfg);

/// FNV-1a hash of the canonical config string, for CSV provenance lines.
std::string config_hash(const RunConfig& cfg);

/// Dispatch. Writes results to `out`, diagnostics to `err`; returns an exit
/// code. I/O targets come from cfg.out_path when set.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_slice(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_rates(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_pointwise(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace hsx::cli

namespace hsx {
struct SolutionSlice;
}

namespace hsx::verify {

/// Individual checks reused by cmd_verify and by mutation tests (which feed
/// deliberately tampered slices). Each returns nullopt on success or a
/// description of the violated invariant.
std::optional<std::string> check_conservation(const InitialData& d,
                                              const SolutionSlice& s);
std::optional<std::string> check_compatibility(const SolutionSlice& s);

}  // namespace hsx::verify
