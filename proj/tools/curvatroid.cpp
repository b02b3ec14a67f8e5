// Copyright 2026 The Authors.
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

#include <CLI11.hpp>

#include <iostream>

#include "curvatroid/cli.hpp"

int main(int argc, char** argv) {
  using curvatroid::cli::CliConfig;

  CLI::App app{"Exact Ollivier-Ricci curvature of matroid basis exchange walks"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input, "named:<key> or a matroid JSON file")->required();
    sub->add_option("--format,-f", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--s", cfg.s, "first basis, comma-separated labels");
    sub->add_option("--t", cfg.t, "second basis, comma-separated labels");
  };

  auto* validate = app.add_subcommand("validate", "check the basis exchange axiom");
  add_input(validate);
  auto* bases = app.add_subcommand("bases", "list all bases");
  add_input(bases);
  auto* pairs = app.add_subcommand("pairs", "list adjacent basis pairs");
  add_input(pairs);

  auto* curvature = app.add_subcommand("curvature", "global curvature report");
  add_input(curvature);
  curvature->add_flag("--exact", cfg.exact, "solve every adjacent pair's transport problem");
  curvature->add_flag("--bounds-only", cfg.bounds_only, "only the coupling and counting bounds");
  curvature->add_flag("--all-pairs", cfg.all_pairs, "audit: also minimise over all pairs of bases");
  curvature->add_flag("--list-pairs", cfg.list_pairs, "include every pair report");
  curvature->add_flag("--decimal", cfg.decimal, "append approximate decimal renderings");
  curvature->add_option("--threads", cfg.threads, "worker count (default: CURVATROID_THREADS or all cores)");

  auto* pair = app.add_subcommand("pair", "report for one adjacent pair");
  add_input(pair);
  add_pair(pair);
  pair->add_flag("--bounds-only", cfg.bounds_only, "skip the transport problem");
  pair->add_flag("--decimal", cfg.decimal, "append approximate decimal renderings");

  auto* coupling = app.add_subcommand("coupling", "down-step coupling table for one adjacent pair");
  add_input(coupling);
  add_pair(coupling);

  auto* catalog = app.add_subcommand("catalog", "list built-in matroids");
  catalog->add_option("--format,-f", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : curvatroid::cli::kExitParseError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return curvatroid::cli::run(cfg, std::cout, std::cerr);
}
