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

#include "cube_om/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "cube_om/geometry.hpp"
#include "cube_om/io.hpp"
#include "cube_om/normalize.hpp"
#include "cube_om/orientation.hpp"
#include "json.hpp"

namespace cube_om::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json json = Json::object();
  std::vector<Table> tables;
};

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void EmitTable(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << '\n';
  };
  if (!t.title.empty()) out << t.title << '\n';
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

void Emit(const Report& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kJson:
      out << report.json.dump(2) << '\n';
      return;
    case OutputFormat::kCsv:
      for (std::size_t k = 0; k < report.tables.size(); ++k) {
        if (k > 0) out << '\n';
        const Table& t = report.tables[k];
        auto line = [&](const std::vector<std::string>& cells) {
          for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << CsvField(cells[c]);
          out << '\n';
        };
        line(t.header);
        for (const auto& row : t.rows) line(row);
      }
      return;
    case OutputFormat::kTable:
      for (std::size_t k = 0; k < report.tables.size(); ++k) {
        if (k > 0) out << '\n';
        EmitTable(report.tables[k], out);
      }
      return;
  }
}

// Two-column key/value table.
Table Summary(std::vector<std::pair<std::string, std::string>> kv) {
  Table t{"", {"key", "value"}, {}};
  for (auto& [k, v] : kv) t.rows.push_back({std::move(k), std::move(v)});
  return t;
}

std::string Str(bool b) { return b ? "true" : "false"; }
template <typename T>
std::string Str(const T& v) {
  return std::to_string(v);
}

std::string FormatMs(double ms) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << ms;
  return s.str();
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

[[noreturn]] void BadInput(const std::string& why) { throw Error(ErrorCode::kInvalidArgument, why); }

// Dimension bounds: below `lo` is an input error, above `hi` a cap error.
int RequireDim(const RunConfig& config, int lo, int hi = kMaxDim) {
  if (config.n == 0) BadInput("--n is required for " + config.command);
  if (config.n < lo) BadInput(config.command + " needs n >= " + std::to_string(lo));
  if (config.n > hi) {
    throw Error(ErrorCode::kCapExceeded,
                "n=" + std::to_string(config.n) + " exceeds the cap n <= " + std::to_string(hi));
  }
  return config.n;
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int ParseInt(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) BadInput("not an integer: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    BadInput("not an integer: '" + s + "'");
  }
}

// "1,-1,1" -> vertex; the length fixes n when n == 0.
Vertex ParseVertex(const std::string& text, int& n) {
  std::vector<int> coords;
  for (const std::string& part : Split(text, ',')) coords.push_back(ParseInt(part));
  if (n == 0) n = static_cast<int>(coords.size());
  if (static_cast<int>(coords.size()) != n) {
    BadInput("vertex '" + text + "' does not have " + std::to_string(n) + " coordinates");
  }
  for (int c : coords) {
    if (c != 1 && c != -1) BadInput("vertex '" + text + "' has a coordinate other than 1 or -1");
  }
  return Vertex::FromCoords(coords);
}

// "1,3" -> {0, 2}.
CoordSet ParseCoords(const std::string& text, int n) {
  CoordSet out;
  for (const std::string& part : Split(text, ',')) {
    const int i = ParseInt(part);
    if (i < 1 || i > n) BadInput("coordinate " + part + " is outside 1.." + std::to_string(n));
    out = out | CoordSet(1u << (i - 1));
  }
  return out;
}

Json CoordsJson(Vertex v, int n) { return v.Coords(n); }

Json BlockJson(CoordSet s) {
  Json a = Json::array();
  for (int i = 0; i < kMaxDim; ++i) {
    if (s.contains(i)) a.push_back(i + 1);
  }
  return a;
}

Json DescriptorJson(const SubcubeDescriptor& d, int n) {
  Json j;
  j["base"] = CoordsJson(d.base, n);
  Json blocks = Json::array();
  for (CoordSet b : d.blocks) blocks.push_back(BlockJson(b));
  j["blocks"] = blocks;
  return j;
}

Json VerticesJson(const VertexSet& s, int n) {
  Json a = Json::array();
  s.ForEach([&](Vertex v) { a.push_back(CoordsJson(v, n)); });
  return a;
}

std::vector<SignedRectangle> SelectFamily(const RunConfig& config, int n) {
  std::vector<SignedRectangle> family = FamilyR(n);
  if (config.rect_subset == "all") return family;
  if (config.rect_subset == "faces") return FaceRectangles(family);
  BadInput("unknown rectangle subset '" + config.rect_subset + "' (expected all or faces)");
}

void AddTiming(Report& r, const RunConfig& config, double ms) {
  if (config.timing) r.json["wall_time_ms"] = ms;
}

// Restricted-growth labelling of coordinates: 0 = unused, 1..k = block.
void ForEachDescriptor(int n, const std::function<void(const SubcubeDescriptor&)>& f) {
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<CoordSet> bs(blocks);
      for (int c = 0; c < n; ++c) {
        if (label[c] > 0) bs[label[c] - 1] = bs[label[c] - 1] | CoordSet(1u << c);
      }
      for (std::uint32_t base = 0; base < (1u << n); ++base) f(SubcubeDescriptor{Vertex(base), bs});
      return;
    }
    for (int l = 0; l <= blocks + 1; ++l) {
      label[i] = l;
      rec(i + 1, std::max(blocks, l));
    }
  };
  rec(0, 0);
}

struct Suite {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  void Check(bool ok) {
    ++checks;
    failures += !ok;
  }
};

}  // namespace

std::optional<OutputFormat> ParseFormat(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "table") return OutputFormat::kTable;
  return std::nullopt;
}

std::filesystem::path CacheDir(const RunConfig& config) {
  if (config.cache_dir) return *config.cache_dir;
  if (const char* env = std::getenv("CUBE_OM_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".cube_om_cache";
}

std::filesystem::path CatalogPath(const RunConfig& config) {
  return CacheDir(config) / ("catalog_n" + std::to_string(config.n) + ".jsonl");
}

HyperplaneCatalog ObtainCatalog(const RunConfig& config) {
  const std::filesystem::path path = CatalogPath(config);
  if (!config.rebuild_cache && std::filesystem::exists(path)) {
    try {
      return LoadCatalog(path, config.n);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kIo) throw;
      throw Error(e.code(), std::string(e.what()) + " (cache " + path.string() +
                                "; remove it or pass --rebuild-cache)");
    }
  }
  HyperplaneCatalog catalog = EnumerateHyperplanes(config.n);
  SaveCatalog(path, catalog);
  return catalog;
}

VertexSet RandomFlip(int n, std::mt19937_64& rng) {
  const int vertices = 1 << n;
  VertexSet out;
  for (int w = 0; w * 64 < vertices; ++w) {
    std::uint64_t bits = rng();
    if (vertices < 64) bits &= (std::uint64_t{1} << vertices) - 1;
    out.words()[w] = bits;
  }
  return out;
}

int CmdEnumerate(const RunConfig& config, std::ostream& out) {
  const int n = RequireDim(config, 2);
  const Stopwatch watch;
  const HyperplaneCatalog catalog = ObtainCatalog(config);
  std::map<int, int> by_size;
  int facets = 0;
  int skews = 0;
  for (const Hyperplane& h : catalog.entries) {
    ++by_size[h.points.size()];
    const HyperplaneKind kind = ClassifyHyperplane(n, h);
    facets += kind.tag == HyperplaneKind::Tag::kFacet;
    skews += kind.tag == HyperplaneKind::Tag::kSkewFacet;
  }
  const std::size_t rectangles = EnumerateRectangles(n).size();
  const double ms = watch.ms();

  Report r;
  r.json["n"] = n;
  r.json["hyperplanes"] = catalog.size();
  r.json["rectangles"] = rectangles;
  r.json["facets"] = facets;
  r.json["skew_facets"] = skews;
  r.json["other"] = static_cast<int>(catalog.size()) - facets - skews;
  Json sizes = Json::array();
  Table size_table{"hyperplanes by size", {"size", "count"}, {}};
  for (auto [size, count] : by_size) {
    sizes.push_back({{"size", size}, {"count", count}});
    size_table.rows.push_back({Str(size), Str(count)});
  }
  r.json["by_size"] = sizes;
  AddTiming(r, config, ms);
  r.tables.push_back(Summary({{"n", Str(n)},
                              {"hyperplanes", Str(catalog.size())},
                              {"rectangles", Str(rectangles)},
                              {"facets", Str(facets)},
                              {"skew_facets", Str(skews)},
                              {"other", Str(static_cast<int>(catalog.size()) - facets - skews)},
                              {"cache", CatalogPath(config).string()},
                              {"wall_time_ms", FormatMs(ms)}}));
  r.tables.push_back(size_table);
  Emit(r, config.format, out);
  return kExitOk;
}

int CmdRectangles(const RunConfig& config, std::ostream& out) {
  const int n = RequireDim(config, 2);
  const std::vector<SignedRectangle> family = SelectFamily(config, n);
  Report r;
  r.json["n"] = n;
  r.json["subset"] = config.rect_subset;
  r.json["count"] = family.size();
  Json list = Json::array();
  Table t{"", {"index", "base", "I", "J", "positive", "negative"}, {}};
  for (std::size_t k = 0; k < family.size(); ++k) {
    const SignedRectangle& x = family[k];
    Json j;
    j["base"] = CoordsJson(x.rect.base, n);
    j["I"] = BlockJson(x.rect.first);
    j["J"] = BlockJson(x.rect.second);
    j["positive"] = x.signs.positive.ToHex(n);
    j["negative"] = x.signs.negative.ToHex(n);
    list.push_back(std::move(j));
    t.rows.push_back({Str(k), x.rect.base.ToString(n), x.rect.first.ToString(), x.rect.second.ToString(),
                      x.signs.positive.ToString(n), x.signs.negative.ToString(n)});
  }
  r.json["rectangles"] = list;
  r.tables.push_back(std::move(t));
  Emit(r, config.format, out);
  return kExitOk;
}

int CmdClassifyTriple(const RunConfig& config, std::ostream& out) {
  if (config.v.empty() || config.v1.empty() || config.v2.empty()) BadInput("classify-triple needs --v, --v1 and --v2");
  int n = config.n;
  const Vertex v = ParseVertex(config.v, n);
  const Vertex v1 = ParseVertex(config.v1, n);
  const Vertex v2 = ParseVertex(config.v2, n);
  RunConfig checked = config;
  checked.n = n;
  RequireDim(checked, 2);
  const TripleClass c = ClassifyTriple(v, v1, v2);

  Report r;
  r.json["n"] = n;
  r.json["v"] = CoordsJson(v, n);
  r.json["v1"] = CoordsJson(v1, n);
  r.json["v2"] = CoordsJson(v2, n);
  r.json["tag"] = TripleTagName(c.tag);
  std::string fourth = "-";
  std::string rect = "-";
  if (c.fourth) {
    const Rectangle rr = Rectangle::FromPoints(VertexSet::Of({v, v1, v2, *c.fourth}));
    r.json["fourth"] = CoordsJson(*c.fourth, n);
    r.json["rectangle"] = DescriptorJson(rr.Descriptor(), n);
    fourth = c.fourth->ToString(n);
    rect = rr.ToString(n);
  } else {
    r.json["fourth"] = nullptr;
    r.json["rectangle"] = nullptr;
  }
  r.tables.push_back(Summary({{"tag", std::string(TripleTagName(c.tag))}, {"fourth", fourth}, {"rectangle", rect}}));
  Emit(r, config.format, out);
  return kExitOk;
}

int CmdSubcube(const RunConfig& config, std::ostream& out) {
  const int n = RequireDim(config, 1);
  const bool generate = !config.base.empty() || !config.blocks.empty();
  if (generate == !config.points.empty()) BadInput("subcube needs either --base/--block or --points");
  Report r;
  r.json["n"] = n;
  if (generate) {
    int dim = n;
    if (config.base.empty()) BadInput("subcube --block needs --base");
    SubcubeDescriptor d{ParseVertex(config.base, dim), {}};
    for (const std::string& b : config.blocks) d.blocks.push_back(ParseCoords(b, n));
    const VertexSet points = GenerateSubcube(n, d);
    const SubcubeDescriptor canonical = CanonicalDescriptor(n, d);
    r.json["mode"] = "generate";
    r.json["dimension"] = d.dimension();
    r.json["descriptor"] = DescriptorJson(canonical, n);
    r.json["points"] = VerticesJson(points, n);
    r.tables.push_back(Summary({{"dimension", Str(d.dimension())},
                                {"descriptor", canonical.ToString(n)},
                                {"points", points.ToString(n)}}));
    Emit(r, config.format, out);
    return kExitOk;
  }
  VertexSet s;
  int dim = n;
  for (const std::string& p : Split(config.points, ';')) s.insert(ParseVertex(p, dim));
  r.json["mode"] = "recognize";
  r.json["size"] = s.size();
  const std::optional<int> k = RecognizeSubcube(n, s);
  if (!k) {
    r.json["dimension"] = nullptr;
    r.json["descriptor"] = nullptr;
    r.tables.push_back(Summary({{"size", Str(s.size())}, {"subcube", "no"}}));
    Emit(r, config.format, out);
    return kExitFailed;
  }
  const SubcubeDescriptor d = RecoverDescriptor(n, s);
  r.json["dimension"] = *k;
  r.json["descriptor"] = DescriptorJson(d, n);
  r.tables.push_back(Summary({{"size", Str(s.size())}, {"dimension", Str(*k)}, {"descriptor", d.ToString(n)}}));
  Emit(r, config.format, out);
  return kExitOk;
}

int CmdAff(const RunConfig& config, std::ostream& out) {
  const int n = RequireDim(config, 2);
  if (!config.flip.empty() && config.random_flip) BadInput("--flip and --random-flip are exclusive");
  const HyperplaneCatalog catalog = ObtainCatalog(config);
  VertexSet flip;
  if (!config.flip.empty()) {
    try {
      flip = VertexSet::FromHex(config.flip, n);
    } catch (const Error& e) {
      BadInput(std::string("--flip: ") + e.what());
    }
  } else if (config.random_flip) {
    std::mt19937_64 rng(config.seed);
    flip = RandomFlip(n, rng);
  }
  const Orientation o = Reorient(AffOrientation(catalog), flip);
  if (!config.output) {
    WriteOrientation(out, o);
    return kExitOk;
  }
  SaveOrientation(*config.output, o);
  Report r;
  r.json["n"] = n;
  r.json["catalog_count"] = catalog.size();
  r.json["flip"] = flip.ToHex(n);
  r.tables.push_back(Summary({{"n", Str(n)},
                              {"catalog_count", Str(catalog.size())},
                              {"flip", flip.ToHex(n)},
                              {"output", config.output->string()}}));
  Emit(r, config.format, out);
  return kExitOk;
}

int CmdNormalize(const RunConfig& config, std::ostream& out) {
  const int n = RequireDim(config, 2);
  if (!config.input) BadInput("normalize needs --input");
  const HyperplaneCatalog catalog = ObtainCatalog(config);
  const Orientation o = LoadOrientation(*config.input, catalog);
  const NormalizationResult res = TryNormalize(catalog, o);
  const bool equals_aff = res.normalized == AffOrientation(catalog);
  if (config.output && res.verified) SaveOrientation(*config.output, res.normalized);

  Report r;
  r.json["n"] = n;
  r.json["flip"] = res.flip.ToHex(n);
  r.json["flip_size"] = res.flip.size();
  r.json["branch"] = BranchName(res.branch);
  r.json["verified"] = res.verified;
  r.json["equals_aff"] = equals_aff;
  r.tables.push_back(Summary({{"n", Str(n)},
                              {"flip", res.flip.ToHex(n)},
                              {"flip_size", Str(res.flip.size())},
                              {"branch", std::string(BranchName(res.branch))},
                              {"verified", Str(res.verified)},
                              {"equals_aff", Str(equals_aff)}}));
  Emit(r, config.format, out);
  return res.verified ? kExitOk : kExitFailed;
}

int CmdReconstruct(const RunConfig& config, std::ostream& out) {
  const int n = RequireDim(config, 2);
  const HyperplaneCatalog catalog = ObtainCatalog(config);
  const std::vector<SignedRectangle> family = SelectFamily(config, n);
  PropagateOptions options;
  options.inference = config.inference;
  const DeterminacyReport report = Propagate(catalog, family, options);
  const bool equals_aff = report.recovered && *report.recovered == AffOrientation(catalog);
  if (config.output && report.recovered) SaveOrientation(*config.output, *report.recovered);

  Report r;
  r.json["n"] = n;
  r.json["rect_subset"] = config.rect_subset;
  r.json["inference"] = ResolutionName(config.inference);
  r.json["supports_total"] = report.supports.size();
  r.json["determined"] = report.Count(SupportStatus::kDetermined);
  r.json["underdetermined"] = report.Count(SupportStatus::kUnderdetermined);
  r.json["inconsistent"] = report.Count(SupportStatus::kInconsistent);
  r.json["recovered_equals_aff"] = equals_aff;
  Json supports = Json::array();
  Table t{"", {"index", "hyperplane", "size", "status", "components", "resolution", "positive", "negative"}, {}};
  for (std::size_t k = 0; k < report.supports.size(); ++k) {
    const SupportResult& s = report.supports[k];
    Json j;
    j["index"] = k;
    j["status"] = SupportStatusName(s.status);
    j["components"] = s.components;
    std::vector<std::string> row = {Str(k), catalog.entries[k].ToString(n),
                                    Str((1 << n) - catalog.entries[k].points.size()),
                                    std::string(SupportStatusName(s.status)), Str(s.components), "-", "-", "-"};
    if (s.signature) {
      const SignedSet y = s.signature->Canonical();
      j["resolution"] = ResolutionName(s.resolution);
      j["positive"] = y.positive.ToHex(n);
      j["negative"] = y.negative.ToHex(n);
      row[5] = ResolutionName(s.resolution);
      row[6] = y.positive.ToHex(n);
      row[7] = y.negative.ToHex(n);
    }
    supports.push_back(std::move(j));
    t.rows.push_back(std::move(row));
  }
  r.json["supports"] = supports;
  AddTiming(r, config, report.wall_time_ms);
  r.tables.push_back(Summary({{"n", Str(n)},
                              {"determined", Str(report.Count(SupportStatus::kDetermined))},
                              {"underdetermined", Str(report.Count(SupportStatus::kUnderdetermined))},
                              {"inconsistent", Str(report.Count(SupportStatus::kInconsistent))},
                              {"recovered_equals_aff", Str(equals_aff)},
                              {"wall_time_ms", FormatMs(report.wall_time_ms)}}));
  r.tables.push_back(std::move(t));
  Emit(r, config.format, out);
  return kExitOk;
}

int CmdVerify(const RunConfig& config, std::ostream& out) {
  const int n = RequireDim(config, 2);
  const Stopwatch watch;
  const HyperplaneCatalog catalog = ObtainCatalog(config);
  const std::vector<SignedRectangle> family = SelectFamily(config, n);
  PropagateOptions options;
  options.inference = config.inference;
  const DeterminacyReport report = VerifyConjecture(catalog, family, options);
  const double ms = watch.ms();
  int by_stage[3] = {0, 0, 0};
  for (const SupportResult& s : report.supports) {
    if (s.status == SupportStatus::kDetermined) ++by_stage[static_cast<int>(s.resolution)];
  }

  Report r;
  r.json["n"] = n;
  r.json["rect_subset"] = config.rect_subset;
  r.json["inference"] = ResolutionName(config.inference);
  r.json["supports_total"] = report.supports.size();
  r.json["determined"] = report.Count(SupportStatus::kDetermined);
  r.json["underdetermined"] = report.Count(SupportStatus::kUnderdetermined);
  r.json["inconsistent"] = report.Count(SupportStatus::kInconsistent);
  r.json["determined_by"] = {{"parity", by_stage[0]}, {"propagation", by_stage[1]}, {"search", by_stage[2]}};
  r.json["verdict"] = VerdictName(report.verdict);
  AddTiming(r, config, ms);
  r.tables.push_back(Summary({{"n", Str(n)},
                              {"rect_subset", config.rect_subset},
                              {"inference", std::string(ResolutionName(config.inference))},
                              {"supports_total", Str(report.supports.size())},
                              {"determined", Str(report.Count(SupportStatus::kDetermined))},
                              {"underdetermined", Str(report.Count(SupportStatus::kUnderdetermined))},
                              {"inconsistent", Str(report.Count(SupportStatus::kInconsistent))},
                              {"determined_by_parity", Str(by_stage[0])},
                              {"determined_by_propagation", Str(by_stage[1])},
                              {"determined_by_search", Str(by_stage[2])},
                              {"verdict", std::string(VerdictName(report.verdict))},
                              {"wall_time_ms", FormatMs(ms)}}));
  Emit(r, config.format, out);
  return report.verdict == Verdict::kVerified ? kExitOk : kExitFailed;
}

int CmdSelftest(const RunConfig& config, std::ostream& out) {
  RunConfig bounded = config;
  if (bounded.n == 0) bounded.n = 4;
  const int max_n = RequireDim(bounded, 2, 5);
  const Stopwatch watch;
  std::mt19937_64 rng(config.seed);

  std::vector<HyperplaneCatalog> catalogs;
  std::vector<Orientation> affs;
  for (int n = 2; n <= max_n; ++n) {
    catalogs.push_back(EnumerateHyperplanes(n));
    affs.push_back(AffOrientation(catalogs.back()));
  }
  auto catalog_of = [&](int n) -> const HyperplaneCatalog& { return catalogs[n - 2]; };
  auto aff_of = [&](int n) -> const Orientation& { return affs[n - 2]; };

  std::vector<Suite> suites;

  Suite orth{"orthogonality"};
  for (int n = 2; n <= max_n; ++n) {
    for (const SignedRectangle& x : FamilyR(n)) {
      for (const SignedSet& y : aff_of(n).cocircuits) {
        orth.Check(Orthogonal(x.signs, y) && (x.signs.support() & y.support()).size() != 1);
      }
    }
    orth.Check(VerifyR(catalog_of(n), aff_of(n)) == VerifyRSerial(catalog_of(n), aff_of(n)));
  }
  suites.push_back(orth);

  Suite sub{"subcube-roundtrip"};
  for (int n = 2; n <= max_n; ++n) {
    ForEachDescriptor(n, [&](const SubcubeDescriptor& d) {
      const VertexSet s = GenerateSubcube(n, d);
      const std::optional<int> k = RecognizeSubcube(n, s);
      sub.Check(k == d.dimension() && RecoverDescriptor(n, s) == CanonicalDescriptor(n, d));
    });
  }
  suites.push_back(sub);

  Suite cls{"hyperplane-classification"};
  for (int n = 2; n <= max_n; ++n) {
    const int half = 1 << (n - 1);
    int facets = 0;
    int skews = 0;
    for (const Hyperplane& h : catalog_of(n).entries) {
      const HyperplaneKind kind = ClassifyHyperplane(n, h);
      facets += kind.tag == HyperplaneKind::Tag::kFacet;
      skews += kind.tag == HyperplaneKind::Tag::kSkewFacet;
      cls.Check(h.points.size() <= half && (h.points.size() == half) == (kind.tag != HyperplaneKind::Tag::kOther));
    }
    cls.Check(facets == 2 * n && skews == n * (n - 1));
  }
  suites.push_back(cls);

  Suite norm{"normalization-roundtrip"};
  for (int n = 2; n <= max_n; ++n) {
    const HyperplaneCatalog& catalog = catalog_of(n);
    const Orientation& aff = aff_of(n);
    const NormalizationResult self = Normalize(catalog, aff);
    norm.Check(self.flip.empty() && self.normalized == aff && UniquenessCheck(catalog, aff));
    std::vector<VertexSet> flips;
    if (n == 2) {
      for (std::uint64_t bits = 0; bits < 16; ++bits) {
        VertexSet a;
        a.words()[0] = bits;
        flips.push_back(a);
      }
    } else {
      for (int k = 0; k < 25; ++k) flips.push_back(RandomFlip(n, rng));
    }
    for (const VertexSet& a : flips) {
      const NormalizationResult res = TryNormalize(catalog, Reorient(aff, a));
      norm.Check(res.verified && res.normalized == aff);
    }
  }
  suites.push_back(norm);

  Suite rec{"reconstruction"};
  for (int n = 2; n <= max_n; ++n) {
    rec.Check(VerifyConjecture(catalog_of(n)).verdict == Verdict::kVerified);
  }
  suites.push_back(rec);

  if (config.exhaustive) {
    // Every subset A of C^n for n = 2, 3, 4 (2^16 subsets at n = 4), whatever
    // --n says.
    Suite uniq{"uniqueness-exhaustive"};
    for (int n = 2; n <= 4; ++n) {
      const HyperplaneCatalog catalog = n <= max_n ? catalog_of(n) : EnumerateHyperplanes(n);
      uniq.Check(UniquenessCheckExhaustive(catalog, AffOrientation(catalog)));
    }
    suites.push_back(uniq);
  }

  bool all = true;
  Report r;
  r.json["max_n"] = max_n;
  r.json["seed"] = config.seed;
  r.json["exhaustive"] = config.exhaustive;
  Json list = Json::array();
  Table t{"", {"suite", "checks", "failures", "result"}, {}};
  for (const Suite& s : suites) {
    all = all && s.failures == 0;
    list.push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"passed", s.failures == 0}});
    t.rows.push_back({s.name, Str(s.checks), Str(s.failures), s.failures == 0 ? "PASS" : "FAIL"});
  }
  r.json["suites"] = list;
  r.json["passed"] = all;
  AddTiming(r, config, watch.ms());
  r.tables.push_back(std::move(t));
  Emit(r, config.format, out);
  return all ? kExitOk : kExitFailed;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapExceeded:
    case ErrorCode::kOverflow:
    case ErrorCode::kIo:
      return kExitCap;
    case ErrorCode::kNotNormalizable:
      return kExitFailed;
    default:
      return kExitInput;
  }
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> kCommands = {
      {"enumerate", CmdEnumerate},   {"rectangles", CmdRectangles},   {"classify-triple", CmdClassifyTriple},
      {"subcube", CmdSubcube},       {"aff", CmdAff},                 {"normalize", CmdNormalize},
      {"reconstruct", CmdReconstruct}, {"verify", CmdVerify},         {"selftest", CmdSelftest},
  };
  const auto it = kCommands.find(config.command);
  if (it == kCommands.end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return kExitInput;
  }
  if (config.jobs < 0) {
    err << "error: --jobs must be positive\n";
    return kExitInput;
  }
  if (config.jobs > 0) omp_set_num_threads(config.jobs);
  try {
    return it->second(config, out);
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: io: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitCap;
  }
}

}  // namespace cube_om::cli
