// Copyright 2026 The cgsep Authors
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


#include <iostream>

#include <CLI11.hpp>

#include "cgsep/cli.hpp"

int main(int argc, char** argv) {
  using namespace cgsep::cli;

  CLI::App app{"Correlation-tensor entanglement detection for complete-graph states"};
  app.require_subcommand(1);

  NormsArgs norms;
  auto* norms_cmd = app.add_subcommand("norms", "Full-tensor norms of state families");
  norms_cmd->add_option("--families", norms.families, "Comma-separated subset of cg,ghz,w,cluster");
  norms_cmd->add_option("--n-min", norms.n_min, "Smallest qubit count");
  norms_cmd->add_option("--n-max", norms.n_max, "Largest qubit count");
  norms_cmd->add_option("--format", norms.format, "csv or json");
  norms_cmd->add_flag("--dense", norms.dense, "Force the dense 3^n sweep");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "k-separability bounds for the complete-graph class");
  bounds_cmd->add_option("--n", bounds.n, "Qubit count")->required();
  bounds_cmd->add_option("--k-min", bounds.k_min, "Smallest k (default 2)");
  bounds_cmd->add_option("--k-max", bounds.k_max, "Largest k (default n)");
  bounds_cmd->add_option("--rule", bounds.rule, "canonical, at-most-one-two or unrestricted");
  bounds_cmd->add_option("--format", bounds.format, "csv or json");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "xi over the noise probability p");
  sweep_cmd->add_option("--family", sweep.family, "cg or ghz");
  sweep_cmd->add_option("--n", sweep.n, "Qubit count")->required();
  sweep_cmd->add_option("--k", sweep.k, "Separability level");
  sweep_cmd->add_option("--p-steps", sweep.p_steps, "Number of uniformly spaced p values in [0,1]");
  sweep_cmd->add_option("--out", sweep.out_path, "Output CSV (default stdout)");
  sweep_cmd->add_option("--rule", sweep.rule, "canonical, at-most-one-two or unrestricted");

  DetectArgs det;
  auto* detect_cmd = app.add_subcommand("detect", "Apply the criterion to a state file");
  detect_cmd->add_option("--state-file", det.state_file, "JSON state file")->required();
  detect_cmd->add_option("--k", det.k, "Separability level");
  detect_cmd->add_option("--zero-tol", det.zero_tol, "Correlation entries at or below this are dropped");
  detect_cmd->add_option("--format", det.format, "text or json");
  detect_cmd->add_option("--rule", det.rule, "canonical, at-most-one-two or unrestricted");

  SettingsArgs settings;
  auto* settings_cmd = app.add_subcommand("settings", "Local measurement settings for the criterion");
  settings_cmd->add_option("--family", settings.family, "cg");
  settings_cmd->add_option("--n", settings.n, "Qubit count")->required();
  settings_cmd->add_flag("--noise", settings.noise, "Include Z^n for the |1..1> admixture");

  AppendixArgs appendix;
  auto* appendix_cmd = app.add_subcommand("appendix", "Binomial count of nonzero complete-graph correlations");
  appendix_cmd->add_option("--n", appendix.n, "Qubit count")->required();

  GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "Complete graph K_n as DOT");
  graph_cmd->add_option("--n", graph.n, "Vertex count")->required();
  graph_cmd->add_option("--format", graph.format, "dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*norms_cmd) return cmd_norms(norms, out, err);
  if (*bounds_cmd) return cmd_bounds(bounds, out, err);
  if (*sweep_cmd) return cmd_sweep(sweep, out, err);
  if (*detect_cmd) return cmd_detect(det, out, err);
  if (*settings_cmd) return cmd_settings(settings, out, err);
  if (*appendix_cmd) return cmd_appendix(appendix, out, err);
  if (*graph_cmd) return cmd_graph(graph, out, err);
  return kUsage;
}
