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

#ifndef CUBE_OM_CLI_HPP_
#define CUBE_OM_CLI_HPP_

// Subcommands of the cube_om tool. Each one reads a RunConfig, writes its
// report to `out` and diagnostics to `err`, and returns an exit status.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cube_om/matroid.hpp"
#include "cube_om/reconstruct.hpp"

namespace cube_om::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failure
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;  // cap or resource error

inline constexpr std::uint64_t kDefaultSeed = 20240501;

enum class OutputFormat { kJson, kCsv, kTable };
std::optional<OutputFormat> ParseFormat(std::string_view name);

struct RunConfig {
  std::string command;
  int n = 0;  // 0: not given
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat format = OutputFormat::kTable;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;  // 0: OpenMP default
  bool exhaustive = false;
  bool rebuild_cache = false;
  bool timing = false;  // add wall-clock times to JSON output
  std::string rect_subset = "all";  // all | faces
  Resolution inference = Resolution::kSearch;

  // classify-triple
  std::string v, v1, v2;
  // subcube
  std::string base;
  std::vector<std::string> blocks;
  std::string points;
  // normalize, reconstruct, aff
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> output;
  std::string flip;  // hex vertex set
  bool random_flip = false;
};

// Directory holding catalog caches: --cache, else $CUBE_OM_CACHE_DIR, else
// ./.cube_om_cache.
std::filesystem::path CacheDir(const RunConfig& config);
std::filesystem::path CatalogPath(const RunConfig& config);

// Loads the cached catalog for config.n, or builds and stores it when no cache
// file exists (or --rebuild-cache is set). A cache that fails validation is
// an error, never silently replaced.
HyperplaneCatalog ObtainCatalog(const RunConfig& config);

// Random subset of C^n drawn from the raw 64-bit output of mt19937_64, so the
// same seed gives the same set everywhere.
VertexSet RandomFlip(int n, std::mt19937_64& rng);

int CmdEnumerate(const RunConfig& config, std::ostream& out);
int CmdRectangles(const RunConfig& config, std::ostream& out);
int CmdClassifyTriple(const RunConfig& config, std::ostream& out);
int CmdSubcube(const RunConfig& config, std::ostream& out);
int CmdAff(const RunConfig& config, std::ostream& out);
int CmdNormalize(const RunConfig& config, std::ostream& out);
int CmdReconstruct(const RunConfig& config, std::ostream& out);
int CmdVerify(const RunConfig& config, std::ostream& out);
int CmdSelftest(const RunConfig& config, std::ostream& out);

// Dispatches on config.command, maps errors to exit statuses and prints them
// to `err`.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

int ExitCodeFor(ErrorCode code);

}  // namespace cube_om::cli

#endif  // CUBE_OM_CLI_HPP_
