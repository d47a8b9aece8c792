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

#include "cube_om/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"

namespace cube_om {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Malformed(const std::string& why) { throw Error(ErrorCode::kMalformedFile, why); }

Json ParseLine(const std::string& line, int lineno) {
  try {
    Json j = Json::parse(line);
    if (!j.is_object()) Malformed("line " + std::to_string(lineno) + ": expected a JSON object");
    return j;
  } catch (const nlohmann::json::exception& e) {
    Malformed("line " + std::to_string(lineno) + ": " + e.what());
  }
}

template <typename T>
T Field(const Json& j, const char* key, int lineno) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    Malformed("line " + std::to_string(lineno) + ": missing or invalid field '" + key + "'");
  }
}

bool NextLine(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty()) return true;
  }
  return false;
}

std::ifstream OpenIn(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

std::ofstream OpenOut(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

}  // namespace

void WriteCatalog(std::ostream& out, const HyperplaneCatalog& catalog) {
  Json header;
  header["version"] = 1;
  header["n"] = catalog.n;
  header["count"] = catalog.size();
  out << header.dump() << '\n';
  for (const Hyperplane& h : catalog.entries) {
    Json rec;
    rec["n"] = catalog.n;
    rec["h"] = h.normal;
    rec["b"] = h.offset;
    rec["points"] = h.points.ToHex(catalog.n);
    out << rec.dump() << '\n';
  }
}

HyperplaneCatalog ReadCatalog(std::istream& in, int expected_n) {
  std::string line;
  int lineno = 0;
  if (!NextLine(in, line, lineno)) Malformed("empty catalog file");
  const Json header = ParseLine(line, lineno);
  if (Field<int>(header, "version", lineno) != 1) Malformed("unsupported catalog version");
  const int n = Field<int>(header, "n", lineno);
  if (n != expected_n) {
    throw Error(ErrorCode::kCacheMismatch,
                "catalog is for n=" + std::to_string(n) + ", expected n=" + std::to_string(expected_n));
  }
  CheckDim(n, 2);
  const auto count = Field<std::size_t>(header, "count", lineno);
  HyperplaneCatalog catalog{n, {}};
  while (NextLine(in, line, lineno)) {
    const Json rec = ParseLine(line, lineno);
    if (Field<int>(rec, "n", lineno) != n) {
      throw Error(ErrorCode::kCacheMismatch, "line " + std::to_string(lineno) + ": record for another n");
    }
    Hyperplane h;
    h.normal = Field<std::vector<std::int64_t>>(rec, "h", lineno);
    h.offset = Field<std::int64_t>(rec, "b", lineno);
    h.points = VertexSet::FromHex(Field<std::string>(rec, "points", lineno), n);
    catalog.entries.push_back(std::move(h));
  }
  if (catalog.size() != count) Malformed("catalog header count does not match the number of records");
  ValidateCatalog(n, catalog);
  return catalog;
}

void SaveCatalog(const std::filesystem::path& path, const HyperplaneCatalog& catalog) {
  std::ofstream out = OpenOut(path);
  WriteCatalog(out, catalog);
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

HyperplaneCatalog LoadCatalog(const std::filesystem::path& path, int expected_n) {
  std::ifstream in = OpenIn(path);
  return ReadCatalog(in, expected_n);
}

void WriteOrientation(std::ostream& out, const Orientation& o) {
  Json header;
  header["version"] = 1;
  header["n"] = o.n;
  header["catalog_count"] = o.cocircuits.size();
  out << header.dump() << '\n';
  for (std::size_t k = 0; k < o.cocircuits.size(); ++k) {
    Json rec;
    rec["index"] = k;
    rec["positive"] = o.cocircuits[k].positive.ToHex(o.n);
    rec["negative"] = o.cocircuits[k].negative.ToHex(o.n);
    out << rec.dump() << '\n';
  }
}

Orientation ReadOrientation(std::istream& in, const HyperplaneCatalog& catalog) {
  std::string line;
  int lineno = 0;
  if (!NextLine(in, line, lineno)) Malformed("empty orientation file");
  const Json header = ParseLine(line, lineno);
  if (Field<int>(header, "version", lineno) != 1) Malformed("unsupported orientation version");
  const int n = Field<int>(header, "n", lineno);
  const auto count = Field<std::size_t>(header, "catalog_count", lineno);
  if (n != catalog.n || count != catalog.size()) {
    throw Error(ErrorCode::kCacheMismatch, "orientation refers to a catalog with n=" + std::to_string(n) +
                                               ", count=" + std::to_string(count));
  }
  Orientation o{n, std::vector<SignedSet>(count)};
  std::vector<bool> seen(count, false);
  while (NextLine(in, line, lineno)) {
    const Json rec = ParseLine(line, lineno);
    const auto index = Field<std::size_t>(rec, "index", lineno);
    if (index >= count || seen[index]) Malformed("line " + std::to_string(lineno) + ": bad or repeated index");
    SignedSet y{VertexSet::FromHex(Field<std::string>(rec, "positive", lineno), n),
                VertexSet::FromHex(Field<std::string>(rec, "negative", lineno), n)};
    if (!y.valid()) Malformed("line " + std::to_string(lineno) + ": positive and negative parts overlap");
    if (y.support() != catalog.entries[index].points.Complement(n)) {
      throw Error(ErrorCode::kCacheMismatch,
                  "line " + std::to_string(lineno) + ": support is not the complement of catalog hyperplane " +
                      std::to_string(index));
    }
    o.cocircuits[index] = y.Canonical();
    seen[index] = true;
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (!seen[k]) Malformed("orientation is missing cocircuit " + std::to_string(k));
  }
  return o;
}

void SaveOrientation(const std::filesystem::path& path, const Orientation& o) {
  std::ofstream out = OpenOut(path);
  WriteOrientation(out, o);
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

Orientation LoadOrientation(const std::filesystem::path& path, const HyperplaneCatalog& catalog) {
  std::ifstream in = OpenIn(path);
  return ReadOrientation(in, catalog);
}

}  // namespace cube_om
