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

#include "cube_om/matroid.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <unordered_set>

#include <omp.h>

#include "cube_om/exact.hpp"

namespace cube_om {

namespace {

// (w - base) / 2, entries in {-1, 0, 1}.
std::vector<std::int64_t> HalfDifference(int n, Vertex base, Vertex w) {
  std::vector<std::int64_t> row(n);
  for (int i = 0; i < n; ++i) row[i] = (w.coord(i) - base.coord(i)) / 2;
  return row;
}

void CanonicalizeEquation(std::vector<std::int64_t>& normal, std::int64_t& offset) {
  std::int64_t g = std::gcd(offset, std::int64_t{0});
  for (auto x : normal) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : normal) x /= g;
    offset /= g;
  }
  auto first = std::find_if(normal.begin(), normal.end(), [](std::int64_t x) { return x != 0; });
  if (first != normal.end() && *first < 0) {
    for (auto& x : normal) x = -x;
    offset = -offset;
  }
}

// Values x . normal for every vertex, filled by peeling the lowest set bit.
void EvaluateAll(int n, const std::int64_t* normal, std::int64_t* values) {
  std::int64_t at_origin = 0;
  for (int i = 0; i < n; ++i) at_origin += normal[i];
  values[0] = at_origin;
  for (std::uint32_t v = 1; v < (1u << n); ++v) {
    values[v] = values[v & (v - 1)] - 2 * normal[std::countr_zero(v)];
  }
}

VertexSet PointsOn(int n, const std::vector<std::int64_t>& normal, std::int64_t offset) {
  std::array<std::int64_t, 1u << kMaxDim> values;
  EvaluateAll(n, normal.data(), values.data());
  VertexSet pts;
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    if (values[v] == offset) pts.insert(Vertex(v));
  }
  return pts;
}

// Rows are kept in fraction-free echelon form so that membership of a new
// row in their span is one reduction pass. Entries stay tiny because each
// reduced row is divided by its content.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int n) : n_(n) {}

  int rank() const { return rank_; }

  bool Add(const std::int64_t* row) {
    std::array<std::int64_t, kMaxDim> x{};
    std::copy(row, row + n_, x.begin());
    for (int r = 0; r < rank_; ++r) {
      const int c = pivots_[r];
      if (x[c] == 0) continue;
      const std::int64_t a = rows_[r][c];
      const std::int64_t b = x[c];
      for (int k = 0; k < n_; ++k) x[k] = a * x[k] - b * rows_[r][k];
      std::int64_t g = 0;
      for (int k = 0; k < n_; ++k) g = std::gcd(g, x[k]);
      if (g > 1) {
        for (int k = 0; k < n_; ++k) x[k] /= g;
      }
    }
    int c = 0;
    while (c < n_ && x[c] == 0) ++c;
    if (c == n_) return false;
    rows_[rank_] = x;
    pivots_[rank_] = c;
    ++rank_;
    return true;
  }

  void Pop() { --rank_; }

 private:
  int n_;
  int rank_ = 0;
  std::array<std::array<std::int64_t, kMaxDim>, kMaxDim> rows_{};
  std::array<int, kMaxDim> pivots_{};
};

// Determinant of an m x m matrix (m < kMaxDim) by Bareiss; false on overflow.
bool SmallDeterminant(int m, std::array<std::array<std::int64_t, kMaxDim>, kMaxDim> a, std::int64_t& det) {
  bool negate = false;
  std::int64_t prev = 1;
  for (int c = 0; c < m; ++c) {
    int p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) {
      det = 0;
      return true;
    }
    if (p != c) {
      std::swap(a[p], a[c]);
      negate = !negate;
    }
    for (int i = c + 1; i < m; ++i) {
      for (int j = c + 1; j < m; ++j) {
        std::int64_t x, y, z;
        if (__builtin_mul_overflow(a[c][c], a[i][j], &x) || __builtin_mul_overflow(a[i][c], a[c][j], &y) ||
            __builtin_sub_overflow(x, y, &z)) {
          return false;
        }
        a[i][j] = z / prev;
      }
    }
    prev = a[c][c];
  }
  det = negate ? -a[m - 1][m - 1] : a[m - 1][m - 1];
  return true;
}

// Signed maximal minors of the (n-1) x n difference matrix. Falls back to the
// escalating general routine if the fast path overflows.
std::vector<std::int64_t> CofactorNormal(int n, const std::array<std::array<std::int64_t, kMaxDim>, kMaxDim>& rows) {
  std::vector<std::int64_t> normal(n);
  for (int j = 0; j < n; ++j) {
    std::array<std::array<std::int64_t, kMaxDim>, kMaxDim> minor{};
    for (int r = 0; r < n - 1; ++r) {
      for (int c = 0, k = 0; c < n; ++c) {
        if (c != j) minor[r][k++] = rows[r][c];
      }
    }
    std::int64_t d;
    if (!SmallDeterminant(n - 1, minor, d)) {
      exact::IntMatrix m(n - 1, n);
      for (int r = 0; r < n - 1; ++r) {
        for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
      }
      return exact::CofactorKernel(m);
    }
    normal[j] = (j % 2 == 0) ? d : -d;
  }
  return normal;
}

Hyperplane FinishHyperplane(int n, std::vector<std::int64_t> normal, Vertex anchor) {
  std::int64_t offset = 0;
  for (int i = 0; i < n; ++i) offset += normal[i] * anchor.coord(i);
  CanonicalizeEquation(normal, offset);
  Hyperplane h;
  h.points = PointsOn(n, normal, offset);
  h.normal = std::move(normal);
  h.offset = offset;
  return h;
}

// Depth-first scan of increasing vertex sequences p0 < p1 < ... < p(n-1)
// whose differences p_k - p0 stay linearly independent. The scan starting
// from the pair (p0, p1) is self-contained so pairs can be handed to workers.
// A leaf is reported only when p0 is the minimum of its hyperplane.
template <typename Emit>
void ScanFromPair(int n, std::uint32_t p0, std::uint32_t p1, Emit&& emit) {
  const std::uint32_t count = 1u << n;
  IncrementalSpan span(n);
  std::array<std::array<std::int64_t, kMaxDim>, kMaxDim> rows{};
  auto diff = [&](std::uint32_t w, std::array<std::int64_t, kMaxDim>& out) {
    for (int i = 0; i < n; ++i) out[i] = (Vertex(w).coord(i) - Vertex(p0).coord(i)) / 2;
  };
  diff(p1, rows[0]);
  span.Add(rows[0].data());
  if (n == 2) {
    Hyperplane h = FinishHyperplane(n, CofactorNormal(n, rows), Vertex(p0));
    if (h.points.min() == Vertex(p0)) emit(std::move(h));
    return;
  }
  auto recurse = [&](auto&& self, int depth, std::uint32_t last) -> void {
    // depth = number of difference rows already in the span.
    for (std::uint32_t w = last + 1; w < count; ++w) {
      diff(w, rows[depth]);
      if (!span.Add(rows[depth].data())) continue;
      if (depth + 1 == n - 1) {
        Hyperplane h = FinishHyperplane(n, CofactorNormal(n, rows), Vertex(p0));
        if (h.points.min() == Vertex(p0)) emit(std::move(h));
      } else {
        self(self, depth + 1, w);
      }
      span.Pop();
    }
  };
  recurse(recurse, 1, p1);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> StartPairs(int n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

}  // namespace

int AffineRank(int n, const VertexSet& s) {
  CheckDim(n);
  if (s.empty()) return 0;
  const Vertex base = s.min();
  exact::IntMatrix m(0, n);
  s.ForEach([&](Vertex w) {
    if (w != base) m.AppendRow(HalfDifference(n, base, w));
  });
  return exact::Rank(m) + 1;
}

VertexSet Closure(int n, const VertexSet& s) {
  CheckDim(n);
  if (s.empty()) return s;
  const Vertex base = s.min();
  IncrementalSpan span(n);
  std::array<std::int64_t, kMaxDim> row{};
  s.ForEach([&](Vertex w) {
    for (int i = 0; i < n; ++i) row[i] = (w.coord(i) - base.coord(i)) / 2;
    span.Add(row.data());
  });
  VertexSet out = s;
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    if (s.contains(Vertex(w))) continue;
    for (int i = 0; i < n; ++i) row[i] = (Vertex(w).coord(i) - base.coord(i)) / 2;
    if (span.Add(row.data())) {
      span.Pop();
    } else {
      out.insert(Vertex(w));
    }
  }
  return out;
}

std::int64_t Hyperplane::Evaluate(Vertex v) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * v.coord(static_cast<int>(i));
  return s;
}

std::string Hyperplane::ToString(int n) const {
  std::string out = "x.(";
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += std::to_string(normal[i]);
  }
  return out + ")=" + std::to_string(offset) + " [" + std::to_string(points.size()) + " points]";
}

std::optional<Hyperplane> HyperplaneThrough(int n, std::span<const Vertex> basis) {
  CheckDim(n, 2);
  if (static_cast<int>(basis.size()) != n) throw Error(ErrorCode::kInvalidArgument, "need exactly n vertices");
  exact::IntMatrix m(0, n);
  for (int k = 1; k < n; ++k) m.AppendRow(HalfDifference(n, basis[0], basis[k]));
  if (exact::Rank(m) != n - 1) return std::nullopt;
  return FinishHyperplane(n, exact::CofactorKernel(m), basis[0]);
}

Hyperplane HyperplaneFromEquation(int n, std::vector<std::int64_t> normal, std::int64_t offset) {
  CheckDim(n);
  if (static_cast<int>(normal.size()) != n) throw Error(ErrorCode::kInvalidArgument, "normal has wrong length");
  if (std::all_of(normal.begin(), normal.end(), [](std::int64_t x) { return x == 0; })) {
    throw Error(ErrorCode::kInvalidArgument, "zero normal");
  }
  CanonicalizeEquation(normal, offset);
  Hyperplane h;
  h.points = PointsOn(n, normal, offset);
  h.normal = std::move(normal);
  h.offset = offset;
  return h;
}

Hyperplane MakeFacet(int n, int i, int eps) {
  CheckDim(n);
  if (i < 0 || i >= n || (eps != 1 && eps != -1)) throw Error(ErrorCode::kInvalidArgument, "facet index out of range");
  std::vector<std::int64_t> normal(n, 0);
  normal[i] = 1;
  return HyperplaneFromEquation(n, std::move(normal), eps);
}

Hyperplane MakeSkewFacet(int n, int i, int j, int eps) {
  CheckDim(n, 2);
  if (i < 0 || j <= i || j >= n || (eps != 1 && eps != -1)) {
    throw Error(ErrorCode::kInvalidArgument, "skew-facet index out of range");
  }
  std::vector<std::int64_t> normal(n, 0);
  normal[i] = 1;
  normal[j] = eps;
  return HyperplaneFromEquation(n, std::move(normal), 0);
}

std::string HyperplaneKind::ToString() const {
  switch (tag) {
    case Tag::kFacet: return "Facet(" + std::to_string(i + 1) + "," + std::to_string(eps) + ")";
    case Tag::kSkewFacet:
      return "SkewFacet(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(eps) + ")";
    case Tag::kOther: return "Other";
  }
  return "?";
}

HyperplaneKind ClassifyHyperplane(int n, const Hyperplane& h) {
  std::vector<int> support;
  for (int k = 0; k < n; ++k) {
    if (h.normal[k] != 0) support.push_back(k);
  }
  HyperplaneKind kind;
  if (support.size() == 1 && h.normal[support[0]] == 1 && (h.offset == 1 || h.offset == -1)) {
    kind.tag = HyperplaneKind::Tag::kFacet;
    kind.i = support[0];
    kind.eps = static_cast<int>(h.offset);
  } else if (support.size() == 2 && h.offset == 0 && h.normal[support[0]] == 1 &&
             (h.normal[support[1]] == 1 || h.normal[support[1]] == -1)) {
    kind.tag = HyperplaneKind::Tag::kSkewFacet;
    kind.i = support[0];
    kind.j = support[1];
    kind.eps = static_cast<int>(h.normal[support[1]]);
  }
  return kind;
}

std::optional<std::size_t> HyperplaneCatalog::Find(const VertexSet& points) const {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].points == points) return k;
  }
  return std::nullopt;
}

HyperplaneCatalog EnumerateHyperplanes(int n, const HyperplaneCatalog* cache) {
  CheckDim(n, 2);
  if (cache) {
    ValidateCatalog(n, *cache);
    return *cache;
  }
  const auto pairs = StartPairs(n);
  std::vector<std::vector<Hyperplane>> found(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::vector<Hyperplane>& local = found[k];
    ScanFromPair(n, pairs[k].first, pairs[k].second, [&](Hyperplane h) { local.push_back(std::move(h)); });
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
  }
  HyperplaneCatalog catalog{n, {}};
  for (auto& local : found) {
    std::move(local.begin(), local.end(), std::back_inserter(catalog.entries));
  }
  std::sort(catalog.entries.begin(), catalog.entries.end());
  catalog.entries.erase(std::unique(catalog.entries.begin(), catalog.entries.end()), catalog.entries.end());
  return catalog;
}

HyperplaneCatalog EnumerateHyperplanesSerial(int n) {
  CheckDim(n, 2);
  std::set<Hyperplane> found;
  for (auto [a, b] : StartPairs(n)) {
    ScanFromPair(n, a, b, [&](Hyperplane h) { found.insert(std::move(h)); });
  }
  return HyperplaneCatalog{n, std::vector<Hyperplane>(found.begin(), found.end())};
}

void ValidateCatalog(int n, const HyperplaneCatalog& catalog) {
  if (catalog.n != n) {
    throw Error(ErrorCode::kCacheMismatch,
                "catalog is for n=" + std::to_string(catalog.n) + ", expected n=" + std::to_string(n));
  }
  CheckDim(n, 2);
  const VertexSet full = VertexSet::Full(n);
  for (std::size_t k = 0; k < catalog.entries.size(); ++k) {
    const Hyperplane& h = catalog.entries[k];
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kInconsistentCatalog, "catalog entry " + std::to_string(k) + ": " + why);
    };
    if (static_cast<int>(h.normal.size()) != n) fail("normal has wrong length");
    auto normal = h.normal;
    auto offset = h.offset;
    CanonicalizeEquation(normal, offset);
    if (normal != h.normal || offset != h.offset) fail("equation is not canonical");
    if (!h.points.subset_of(full)) fail("points outside C^n");
    if (PointsOn(n, h.normal, h.offset) != h.points) fail("points do not match the equation");
    if (AffineRank(n, h.points) != n) fail("point set does not have rank n");
    if (k > 0 && !(catalog.entries[k - 1] < h)) fail("entries not strictly sorted");
  }
  // Completeness is only cheap to check where the count is known.
  static constexpr std::array<std::size_t, 6> kKnownCounts{0, 0, 6, 20, 140, 3254};
  if (n < static_cast<int>(kKnownCounts.size()) && catalog.size() != kKnownCounts[n]) {
    throw Error(ErrorCode::kInconsistentCatalog, "catalog has " + std::to_string(catalog.size()) +
                                                     " entries, expected " + std::to_string(kKnownCounts[n]));
  }
}

std::vector<VertexSet> CocircuitSupports(const HyperplaneCatalog& catalog) {
  std::vector<VertexSet> out;
  out.reserve(catalog.entries.size());
  for (const Hyperplane& h : catalog.entries) out.push_back(h.points.Complement(catalog.n));
  return out;
}

}  // namespace cube_om
