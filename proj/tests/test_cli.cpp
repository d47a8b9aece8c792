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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cube_om/cli.hpp"
#include "cube_om/io.hpp"
#include "doctest.h"
#include "json.hpp"

namespace cube_om::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Outcome Exec(const RunConfig& config) {
  std::ostringstream out, err;
  const int code = Run(config, out, err);
  return {code, out.str(), err.str()};
}

// A fresh cache directory per test case.
struct Scratch {
  Scratch() : dir(fs::temp_directory_path() / ("cube_om_cli_" + std::to_string(counter++))) {
    fs::remove_all(dir);
  }
  ~Scratch() { fs::remove_all(dir); }

  RunConfig Config(const std::string& command, int n) const {
    RunConfig c;
    c.command = command;
    c.n = n;
    c.cache_dir = dir;
    c.format = OutputFormat::kJson;
    return c;
  }

  static inline int counter = 0;
  fs::path dir;
};

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST_CASE("enumerate") {
  Scratch s;
  const Outcome o = Exec(s.Config("enumerate", 3));
  REQUIRE(o.code == kExitOk);
  const json j = o.parsed();
  CHECK(j["hyperplanes"] == 20);
  CHECK(j["rectangles"] == EnumerateRectangles(3).size());
  CHECK(j["facets"] == 6);
  CHECK(j["skew_facets"] == 6);
  CHECK(fs::exists(CatalogPath(s.Config("enumerate", 3))));
  // A second run reads the cache and reports the same thing.
  CHECK(Exec(s.Config("enumerate", 3)).out == o.out);

  CHECK(Exec(s.Config("enumerate", 9)).code == kExitCap);
  CHECK(Exec(s.Config("enumerate", 1)).code == kExitInput);
  CHECK(Exec(s.Config("enumerate", 0)).code == kExitInput);
  CHECK(Exec(s.Config("no-such-command", 3)).code == kExitInput);
  RunConfig bad_jobs = s.Config("enumerate", 3);
  bad_jobs.jobs = -1;
  CHECK(Exec(bad_jobs).code == kExitInput);
}

TEST_CASE("output formats") {
  Scratch s;
  RunConfig c = s.Config("enumerate", 2);
  c.format = OutputFormat::kCsv;
  const Outcome csv = Exec(c);
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.find("hyperplanes") != std::string::npos);
  c.format = OutputFormat::kTable;
  CHECK(Exec(c).out.find("hyperplanes") != std::string::npos);
  CHECK(ParseFormat("json") == OutputFormat::kJson);
  CHECK(!ParseFormat("xml").has_value());
}

TEST_CASE("cache location") {
  Scratch s;
  RunConfig c = s.Config("enumerate", 2);
  CHECK(CacheDir(c) == s.dir);
  c.cache_dir.reset();
  ::setenv("CUBE_OM_CACHE_DIR", s.dir.c_str(), 1);
  CHECK(CacheDir(c) == s.dir);
  CHECK(Exec(c).code == kExitOk);
  CHECK(fs::exists(s.dir / "catalog_n2.jsonl"));
  ::unsetenv("CUBE_OM_CACHE_DIR");
  CHECK(CacheDir(c) == fs::path(".cube_om_cache"));
}

TEST_CASE("a bad cache is reported, and --rebuild-cache replaces it") {
  Scratch s;
  RunConfig c = s.Config("enumerate", 3);
  fs::create_directories(s.dir);
  SaveCatalog(CatalogPath(c), EnumerateHyperplanes(2));
  const Outcome mismatch = Exec(c);
  CHECK(mismatch.code == kExitInput);
  CHECK(mismatch.err.find("--rebuild-cache") != std::string::npos);

  std::ofstream(CatalogPath(c)) << "{\"version\":1,\"n\":3,\"count\":1}\n{broken\n";
  CHECK(Exec(c).code == kExitInput);

  c.rebuild_cache = true;
  CHECK(Exec(c).code == kExitOk);
  c.rebuild_cache = false;
  CHECK(Exec(c).parsed()["hyperplanes"] == 20);
}

TEST_CASE("verify") {
  Scratch s;
  const Outcome o = Exec(s.Config("verify", 4));
  CHECK(o.code == kExitOk);
  CHECK(o.parsed()["verdict"] == "Verified");
  CHECK(o.parsed()["determined"] == 140);

  RunConfig faces = s.Config("verify", 4);
  faces.rect_subset = "faces";
  const Outcome f = Exec(faces);
  CHECK(f.code == kExitFailed);
  CHECK(f.parsed()["verdict"] == "NotDecided");

  RunConfig parity = s.Config("verify", 3);
  parity.inference = Resolution::kParity;
  CHECK(Exec(parity).code == kExitFailed);

  RunConfig bad_subset = s.Config("verify", 3);
  bad_subset.rect_subset = "edges";
  CHECK(Exec(bad_subset).code == kExitInput);
}

TEST_CASE("JSON output is deterministic") {
  Scratch s;
  for (const char* command : {"verify", "selftest"}) {
    const RunConfig c = s.Config(command, 3);
    const Outcome a = Exec(c);
    const Outcome b = Exec(c);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("wall_time_ms") == std::string::npos);
  }
  RunConfig timed = s.Config("verify", 3);
  timed.timing = true;
  CHECK(Exec(timed).out.find("wall_time_ms") != std::string::npos);
}

TEST_CASE("aff and normalize") {
  Scratch s;
  fs::create_directories(s.dir);
  const fs::path flipped = s.dir / "flipped.jsonl";
  const fs::path fixed = s.dir / "fixed.jsonl";
  const fs::path plain = s.dir / "aff.jsonl";

  RunConfig aff = s.Config("aff", 3);
  aff.output = plain;
  REQUIRE(Exec(aff).code == kExitOk);
  aff.output = flipped;
  aff.random_flip = true;
  REQUIRE(Exec(aff).code == kExitOk);
  CHECK(ReadFile(flipped) != ReadFile(plain));

  RunConfig norm = s.Config("normalize", 3);
  norm.input = flipped;
  norm.output = fixed;
  const Outcome o = Exec(norm);
  CHECK(o.code == kExitOk);
  CHECK(o.parsed()["verified"] == true);
  CHECK(o.parsed()["equals_aff"] == true);
  CHECK(ReadFile(fixed) == ReadFile(plain));

  // Reorienting on one vertex: normalization recovers exactly that flip.
  RunConfig one = s.Config("aff", 3);
  one.flip = "01";
  one.output = flipped;
  REQUIRE(Exec(one).code == kExitOk);
  CHECK(Exec(norm).parsed()["flip"] == "01");

  std::ofstream(s.dir / "junk.jsonl") << "{\"version\":1,\"n\":3,\"catalog_count\":20}\n[1,2]\n";
  norm.input = s.dir / "junk.jsonl";
  CHECK(Exec(norm).code == kExitInput);
  norm.input = s.dir / "missing.jsonl";
  CHECK(Exec(norm).code == kExitCap);
  norm.input = plain;
  norm.n = 4;
  CHECK(Exec(norm).code == kExitInput);

  RunConfig both = s.Config("aff", 3);
  both.flip = "01";
  both.random_flip = true;
  CHECK(Exec(both).code == kExitInput);
}

TEST_CASE("reconstruct writes the recovered orientation") {
  Scratch s;
  fs::create_directories(s.dir);
  RunConfig c = s.Config("reconstruct", 3);
  c.output = s.dir / "rec.jsonl";
  const Outcome o = Exec(c);
  CHECK(o.code == kExitOk);
  CHECK(o.parsed()["recovered_equals_aff"] == true);
  CHECK(o.parsed()["supports"].size() == 20);
  RunConfig aff = s.Config("aff", 3);
  aff.output = s.dir / "aff.jsonl";
  REQUIRE(Exec(aff).code == kExitOk);
  CHECK(ReadFile(s.dir / "rec.jsonl") == ReadFile(s.dir / "aff.jsonl"));
}

TEST_CASE("classify-triple and subcube") {
  Scratch s;
  RunConfig t = s.Config("classify-triple", 0);
  t.v = "1,1,1";
  t.v1 = "-1,1,1";
  t.v2 = "1,-1,1";
  const Outcome o = Exec(t);
  CHECK(o.code == kExitOk);
  CHECK(o.parsed()["fourth"] == json::array({-1, -1, 1}));
  t.v2 = "1,1";
  CHECK(Exec(t).code == kExitInput);
  t.v2 = "1,2,1";
  CHECK(Exec(t).code == kExitInput);

  RunConfig gen = s.Config("subcube", 3);
  gen.base = "1,1,1";
  gen.blocks = {"1", "2,3"};
  const Outcome g = Exec(gen);
  CHECK(g.code == kExitOk);
  CHECK(g.parsed()["points"].size() == 4);

  RunConfig rec = s.Config("subcube", 3);
  rec.points = "1,1,1;-1,1,1;1,-1,-1;-1,-1,-1";
  const Outcome r = Exec(rec);
  CHECK(r.code == kExitOk);
  CHECK(r.parsed()["dimension"] == 2);
  rec.points = "1,1,1;-1,1,1;1,-1,1";
  CHECK(Exec(rec).code == kExitFailed);

  RunConfig overlap = s.Config("subcube", 3);
  overlap.base = "1,1,1";
  overlap.blocks = {"1,2", "2"};
  CHECK(Exec(overlap).code == kExitInput);
}

TEST_CASE("selftest") {
  Scratch s;
  const Outcome o = Exec(s.Config("selftest", 3));
  CHECK(o.code == kExitOk);
  CHECK(o.parsed()["passed"] == true);
  CHECK(Exec(s.Config("selftest", 6)).code != kExitOk);
}

}  // namespace
}  // namespace cube_om::cli
