// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hsx/cli.hpp"

namespace {

void add_common(CLI::App* cmd, hsx::cli::RunConfig& cfg, std::string& form,
                std::string& t_geom) {
  auto* in = cmd->add_option("--input", cfg.input_path, "JSON initial-data file");
  auto* ex = cmd->add_option("--example", cfg.example,
                             "builtin data: compact | dirac:k,ell,x0 | kink:m | sine:a,R,n");
  in->excludes(ex);
  ex->excludes(in);
  cmd->add_option("--form", form, "equation form (A or B)")->check(CLI::IsMember({"A", "B"}));
  cmd->add_option("--t", cfg.t_values, "time values")->delimiter(',');
  cmd->add_option("--t-geom", t_geom, "geometric time grid MIN:MAX:N");
  cmd->add_option("--x", cfg.x_values, "positions (labels in --characteristics mode)")
      ->delimiter(',');
  cmd->add_option("--region", cfg.region, "error region: left|middle|right|all")
      ->check(CLI::IsMember({"left", "middle", "right", "all"}));
  cmd->add_option("--theta", cfg.theta,
                  "declared left-tail exponent of the un-truncated measure, in [0,1)");
  cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
  cmd->add_option("--quad", cfg.quad, "quadrature nodes per panel");
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact conservative solutions of the Hunter-Saxton equation"};
  app.set_version_flag("--version", hsx::cli::kVersion);
  app.require_subcommand(1);

  hsx::cli::RunConfig cfg;
  std::string form = "A";
  std::string t_geom;

  auto* validate = app.add_subcommand("validate", "check an initial-data document");
  auto* slice = app.add_subcommand("slice", "emit u and the energy measure at given times");
  auto* rates = app.add_subcommand("rates", "error norms against the leading-order wave");
  auto* pointwise = app.add_subcommand("pointwise", "long-time pointwise prediction vs data");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  for (CLI::App* cmd : {validate, slice, rates, pointwise, verify})
    add_common(cmd, cfg, form, t_geom);
  slice->add_flag("--characteristics", cfg.characteristics,
                  "emit (alpha, t, y) label trajectories; --x holds the labels");
  verify->add_option("--count", cfg.verify_count, "number of randomized cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hsx::cli::kUsageError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.form = form == "B" ? hsx::EquationForm::B : hsx::EquationForm::A;
  if (!t_geom.empty()) {
    hsx::cli::GeomGrid g;
    if (std::sscanf(t_geom.c_str(), "%lf:%lf:%d", &g.t_min, &g.t_max, &g.count) != 3) {
      std::cerr << "usage error: --t-geom expects MIN:MAX:N\n";
      return hsx::cli::kUsageError;
    }
    cfg.t_geom = g;
  }
  return hsx::cli::run_command(cfg, std::cout, std::cerr);
}
