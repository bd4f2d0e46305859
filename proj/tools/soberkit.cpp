//  Copyright 2026 The soberkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


// soberkit: command-line front end.
//
//   soberkit classify FILE
//   soberkit families FILE
//   soberkit powerspace smyth|hoare FILE
//   soberkit reflect sober|wf FILE
//   soberkit verify FILE [--suite id,id,...]
//   soberkit search [--seed S] [--count N] [--max-n N]

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "soberkit/cli.hpp"

int main(int argc, char** argv) {
  using namespace soberkit;
  CLI::App app{"Finite T0 spaces: classification, power spaces, reflections and theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "human";
  std::vector<std::string> suite;
  app.add_option("--seed", cfg.seed, "Seed for search");
  app.add_option("--cap-carrier", cfg.caps.carrier, "Largest carrier for family enumeration")->check(CLI::PositiveNumber);
  app.add_option("--cap-powerspace", cfg.caps.powerspace, "Largest materialized power space")
      ->check(CLI::PositiveNumber);
  app.add_option("--suite", suite, "Theorem ids, or all")->delimiter(',');
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"human", "records"}));
  app.add_option("--count", cfg.count, "Number of random posets for search");
  app.add_option("--max-n", cfg.max_n, "Largest random poset for search")->check(CLI::PositiveNumber);

  Command cmd;
  std::string path;
  auto with_file = [&](CLI::App* sub) { sub->add_option("file", path, "Space file")->required()->check(CLI::ExistingFile); };
  with_file(app.add_subcommand("classify", "Class flags with witnesses"));
  with_file(app.add_subcommand("families", "Irr_c, S_c, D_c, RD, WD and K"));
  with_file(app.add_subcommand("verify", "Run the theorem suite"));
  auto* ps = app.add_subcommand("powerspace", "Smyth or Hoare power space");
  ps->add_option("kind", cmd.mode)->required()->check(CLI::IsMember({"smyth", "hoare"}));
  with_file(ps);
  auto* rf = app.add_subcommand("reflect", "Sobrification or well-filtered reflection");
  rf->add_option("kind", cmd.mode)->required()->check(CLI::IsMember({"sober", "wf"}));
  with_file(rf);
  app.add_subcommand("search", "Run the suite on seeded random posets");

  CLI11_PARSE(app, argc, argv);

  cmd.verb = app.get_subcommands().front()->get_name();
  cfg.format = format == "records" ? OutputFormat::Records : OutputFormat::Human;
  cfg.suite = suite;
  try {
    if (!path.empty()) {
      cmd.space = parse_space_file(path);
      cmd.instance = path;
    }
    return run_command(cmd, cfg, std::cout);
  } catch (const ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
