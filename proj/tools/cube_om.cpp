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

// cube_om: hyperplanes, rectangles, orientations and orientation-class
// checks for the n-cube matroid.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cube_om/cli.hpp"

int main(int argc, char** argv) {
  using namespace cube_om;
  cli::RunConfig config;
  std::string format = "table";
  std::string cache;
  std::string inference = "search";

  CLI::App app{"Oriented-matroid toolkit for the n-cube"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", config.n, "Dimension of the cube");
  app.add_option("--cache", cache, "Catalog cache directory (default $CUBE_OM_CACHE_DIR or ./.cube_om_cache)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", config.seed, "Seed for random reorientations");
  app.add_option("--jobs", config.jobs, "OpenMP threads (0: runtime default)");
  app.add_flag("--exhaustive", config.exhaustive, "Exhaustive uniqueness check in selftest");
  app.add_option("--rect-subset", config.rect_subset, "Rectangle family: all or faces")
      ->check(CLI::IsMember({"all", "faces"}));
  app.add_option("--inference", inference, "Sign inference: parity, propagation or search")
      ->check(CLI::IsMember({"parity", "propagation", "search"}));
  app.add_flag("--rebuild-cache", config.rebuild_cache, "Recompute and overwrite the catalog cache");
  app.add_flag("--timing", config.timing, "Include wall-clock times in JSON output");

  app.add_subcommand("enumerate", "Hyperplane catalog and rectangle counts");
  app.add_subcommand("rectangles", "List the signed rectangles");
  auto* triple = app.add_subcommand("classify-triple", "Fourth point of the rectangle through three vertices");
  triple->add_option("--v", config.v, "Pivot vertex, e.g. 1,-1,1")->required();
  triple->add_option("--v1", config.v1, "Second vertex")->required();
  triple->add_option("--v2", config.v2, "Third vertex")->required();
  auto* subcube = app.add_subcommand("subcube", "Generate a subcube or recognize one");
  subcube->add_option("--base", config.base, "Base vertex of a descriptor");
  subcube->add_option("--block", config.blocks, "Coordinate block, e.g. 1,3 (repeatable)");
  subcube->add_option("--points", config.points, "Vertices separated by ';'");
  auto* aff = app.add_subcommand("aff", "Write the realizable orientation, optionally reoriented");
  aff->add_option("--flip", config.flip, "Reorientation set as hex");
  aff->add_flag("--random-flip", config.random_flip, "Reorient on a seeded random set");
  aff->add_option("--output", config.output, "Orientation file to write (default stdout)");
  auto* normalize = app.add_subcommand("normalize", "Reorient an orientation so it contains every facet cocircuit");
  normalize->add_option("--input", config.input, "Orientation file")->required();
  normalize->add_option("--output", config.output, "Where to write the normalized orientation");
  auto* reconstruct = app.add_subcommand("reconstruct", "Recover cocircuit signatures from signed rectangles");
  reconstruct->add_option("--output", config.output, "Where to write the recovered orientation");
  app.add_subcommand("verify", "Check that the rectangles determine the realizable orientation");
  app.add_subcommand("selftest", "Run the built-in test suites for n up to --n (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInput;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = *cli::ParseFormat(format);
  config.inference = *ParseResolution(inference);
  if (!cache.empty()) config.cache_dir = cache;
  return cli::Run(config, std::cout, std::cerr);
}
