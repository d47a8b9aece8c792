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

#include "cube_om/core.hpp"

#include <algorithm>

namespace cube_om {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kCapExceeded: return "cap-exceeded";
    case ErrorCode::kInvalidDescriptor: return "invalid-descriptor";
    case ErrorCode::kNotASubcube: return "not-a-subcube";
    case ErrorCode::kInvalidTriple: return "invalid-triple";
    case ErrorCode::kNotAModularPair: return "not-a-modular-pair";
    case ErrorCode::kNotACircuit: return "not-a-circuit";
    case ErrorCode::kCacheMismatch: return "cache-mismatch";
    case ErrorCode::kMalformedFile: return "malformed-file";
    case ErrorCode::kInconsistentCatalog: return "inconsistent-catalog";
    case ErrorCode::kNotAnOrientation: return "not-an-orientation";
    case ErrorCode::kNotNormalizable: return "not-normalizable";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

void CheckDim(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::kCapExceeded, "dimension n=" + std::to_string(n) +
                                             " outside supported range [" + std::to_string(lo) +
                                             ", " + std::to_string(hi) + "]");
  }
}

CoordSet CoordSet::Of(std::initializer_list<int> coords) {
  CoordSet s;
  for (int c : coords) {
    if (c < 0 || c >= kMaxDim) throw Error(ErrorCode::kInvalidArgument, "coordinate out of range");
    s.mask |= 1u << c;
  }
  return s;
}

std::string CoordSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!contains(i)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Vertex Vertex::FromCoords(std::span<const int> coords) {
  CheckDim(static_cast<int>(coords.size()));
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == -1) {
      w |= 1u << i;
    } else if (coords[i] != 1) {
      throw Error(ErrorCode::kInvalidArgument, "vertex coordinates must be +1 or -1");
    }
  }
  return Vertex(w);
}

std::vector<int> Vertex::Coords(int n) const {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = coord(i);
  return out;
}

std::string Vertex::ToString(int n) const {
  std::string out = "(";
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += coord(i) > 0 ? "1" : "-1";
  }
  return out + ")";
}

std::vector<int> Restrict(Vertex v, CoordSet coords, int n) {
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (coords.contains(i)) out[i] = v.coord(i);
  }
  return out;
}

VertexSet VertexSet::Of(std::initializer_list<Vertex> vertices) {
  VertexSet s;
  for (Vertex v : vertices) s.insert(v);
  return s;
}

VertexSet VertexSet::Of(std::span<const Vertex> vertices) {
  VertexSet s;
  for (Vertex v : vertices) s.insert(v);
  return s;
}

VertexSet VertexSet::Full(int n) {
  CheckDim(n, 0);
  VertexSet s;
  int count = 1 << n;
  for (int w = 0; w < kWords && count > 0; ++w, count -= 64) {
    s.words_[w] = count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
  }
  return s;
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

Vertex VertexSet::min() const {
  for (int w = 0; w < kWords; ++w) {
    if (words_[w]) return Vertex(static_cast<std::uint32_t>(64 * w + std::countr_zero(words_[w])));
  }
  return Vertex(0);
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (int w = 0; w < kWords; ++w) {
    if (words_[w] & ~o.words_[w]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (int w = 0; w < kWords; ++w) {
    if (words_[w] & o.words_[w]) return true;
  }
  return false;
}

VertexSet VertexSet::Complement(int n) const { return Full(n) - *this; }

std::vector<Vertex> VertexSet::Elements() const {
  std::vector<Vertex> out;
  out.reserve(size());
  ForEach([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
  return *this;
}
VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
  return *this;
}
VertexSet& VertexSet::operator^=(const VertexSet& o) {
  for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  for (int w = VertexSet::kWords - 1; w >= 0; --w) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

int HexBytes(int n) { return std::max(1, (1 << n) / 8); }

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::string VertexSet::ToHex(int n) const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  int bytes = HexBytes(n);
  out.reserve(2 * bytes);
  for (int k = 0; k < bytes; ++k) {
    auto byte = static_cast<unsigned>((words_[k / 8] >> (8 * (k % 8))) & 0xffu);
    out += kDigits[byte >> 4];
    out += kDigits[byte & 0xfu];
  }
  return out;
}

VertexSet VertexSet::FromHex(std::string_view hex, int n) {
  CheckDim(n, 0);
  int bytes = HexBytes(n);
  if (static_cast<int>(hex.size()) != 2 * bytes) {
    throw Error(ErrorCode::kMalformedFile, "hex bitset has wrong length for n=" + std::to_string(n));
  }
  VertexSet s;
  for (int k = 0; k < bytes; ++k) {
    int hi = HexDigit(hex[2 * k]);
    int lo = HexDigit(hex[2 * k + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::kMalformedFile, "bad hex digit in bitset");
    s.words_[k / 8] |= static_cast<std::uint64_t>(hi * 16 + lo) << (8 * (k % 8));
  }
  if (!s.subset_of(Full(n))) {
    throw Error(ErrorCode::kMalformedFile, "bitset has vertices beyond 2^n");
  }
  return s;
}

std::string VertexSet::ToString(int n) const {
  std::string out = "{";
  bool first = true;
  ForEach([&](Vertex v) {
    if (!first) out += ',';
    out += v.ToString(n);
    first = false;
  });
  return out + "}";
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

SignedSet SignedSet::Canonical() const {
  if (empty()) return *this;
  return positive.contains(support().min()) ? *this : Negated();
}

bool SignedSet::IsCanonical() const { return empty() || positive.contains(support().min()); }

int SignedSet::sign(Vertex v) const {
  if (positive.contains(v)) return 1;
  if (negative.contains(v)) return -1;
  return 0;
}

std::strong_ordering operator<=>(const SignedSet& a, const SignedSet& b) {
  if (auto c = a.positive <=> b.positive; c != 0) return c;
  return a.negative <=> b.negative;
}

std::string SignedSet::ToString(int n) const {
  return "(+" + positive.ToString(n) + ", -" + negative.ToString(n) + ")";
}

SignedSet Reorient(const SignedSet& s, const VertexSet& flip) {
  SignedSet out;
  out.positive = (s.positive - flip) | (s.negative & flip);
  out.negative = (s.negative - flip) | (s.positive & flip);
  return out;
}

bool Orthogonal(const SignedSet& x, const SignedSet& y) {
  bool agree = x.positive.intersects(y.positive) || x.negative.intersects(y.negative);
  bool disagree = x.positive.intersects(y.negative) || x.negative.intersects(y.positive);
  return agree == disagree;
}

}  // namespace cube_om
