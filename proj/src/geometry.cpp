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

#include "cube_om/geometry.hpp"

#include <algorithm>

#include "cube_om/matroid.hpp"

namespace cube_om {

std::string SubcubeDescriptor::ToString(int n) const {
  std::string out = "C(" + base.ToString(n);
  for (CoordSet b : blocks) out += "; " + b.ToString();
  return out + ")";
}

void ValidateDescriptor(int n, const SubcubeDescriptor& d) {
  CheckDim(n);
  if (d.base.word >= (1u << n)) throw Error(ErrorCode::kInvalidDescriptor, "base vertex outside C^n");
  CoordSet used;
  for (CoordSet b : d.blocks) {
    if (b.empty()) throw Error(ErrorCode::kInvalidDescriptor, "empty block");
    if (!b.subset_of(CoordSet::Full(n))) throw Error(ErrorCode::kInvalidDescriptor, "block outside [n]");
    if (!b.disjoint(used)) throw Error(ErrorCode::kInvalidDescriptor, "overlapping blocks");
    used = used | b;
  }
}

VertexSet GenerateSubcube(int n, const SubcubeDescriptor& d) {
  ValidateDescriptor(n, d);
  const int k = d.dimension();
  VertexSet out;
  for (std::uint32_t eps = 0; eps < (1u << k); ++eps) {
    CoordSet flip;
    for (int b = 0; b < k; ++b) {
      if ((eps >> b) & 1u) flip = flip | d.blocks[b];
    }
    out.insert(Reverse(d.base, flip));
  }
  return out;
}

namespace {

void SortBlocks(std::vector<CoordSet>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](CoordSet a, CoordSet b) { return a.min() < b.min(); });
}

// Blocks of the subcube `s` around its minimum vertex `base`: split on the
// first coordinate that varies, recurse into the half containing base, and
// take the remaining varying coordinates as the new block.
std::vector<CoordSet> SplitBlocks(const VertexSet& s, Vertex base) {
  if (s.size() <= 1) return {};
  CoordSet varying;
  s.ForEach([&](Vertex w) { varying = varying | Difference(base, w); });
  const int i = varying.min();
  VertexSet half;
  s.ForEach([&](Vertex w) {
    if (w.coord(i) == base.coord(i)) half.insert(w);
  });
  std::vector<CoordSet> blocks = SplitBlocks(half, base);
  CoordSet rest = varying;
  for (CoordSet b : blocks) rest = rest - b;
  if (!rest.empty()) blocks.push_back(rest);
  return blocks;
}

}  // namespace

SubcubeDescriptor CanonicalDescriptor(int n, const SubcubeDescriptor& d) {
  SubcubeDescriptor out{GenerateSubcube(n, d).min(), d.blocks};
  SortBlocks(out.blocks);
  return out;
}

std::optional<int> RecognizeSubcube(int n, const VertexSet& s) {
  CheckDim(n);
  const int size = s.size();
  if (size == 0 || !std::has_single_bit(static_cast<unsigned>(size))) return std::nullopt;
  const int k = std::countr_zero(static_cast<unsigned>(size));
  if (AffineRank(n, s) != k + 1) return std::nullopt;
  return k;
}

SubcubeDescriptor RecoverDescriptor(int n, const VertexSet& s) {
  auto k = RecognizeSubcube(n, s);
  if (!k) throw Error(ErrorCode::kNotASubcube, "set is not a subcube: " + s.ToString(n));
  SubcubeDescriptor d{s.min(), SplitBlocks(s, s.min())};
  SortBlocks(d.blocks);
  if (d.dimension() != *k || GenerateSubcube(n, d) != s) {
    throw Error(ErrorCode::kNotASubcube, "facet splitting did not reproduce " + s.ToString(n));
  }
  return d;
}

Rectangle Rectangle::Make(Vertex v, CoordSet i, CoordSet j) {
  if (i.empty() || j.empty() || !i.disjoint(j)) {
    throw Error(ErrorCode::kInvalidArgument, "rectangle blocks must be disjoint and nonempty");
  }
  Rectangle r;
  r.base = std::min({v, Reverse(v, i), Reverse(v, j), Reverse(v, i | j)});
  r.first = i;
  r.second = j;
  if (r.second.min() < r.first.min()) std::swap(r.first, r.second);
  return r;
}

Rectangle Rectangle::FromPoints(const VertexSet& points) {
  if (points.size() != 4) throw Error(ErrorCode::kInvalidArgument, "a rectangle has four points");
  const Vertex base = points.min();
  std::vector<CoordSet> masks;
  points.ForEach([&](Vertex w) {
    if (w != base) masks.push_back(Difference(base, w));
  });
  for (int u = 0; u < 3; ++u) {
    CoordSet a = masks[(u + 1) % 3];
    CoordSet b = masks[(u + 2) % 3];
    if (a.disjoint(b) && (a | b) == masks[u]) return Make(base, a, b);
  }
  throw Error(ErrorCode::kInvalidArgument, "points do not form a rectangle");
}

VertexSet Rectangle::Points() const {
  return VertexSet::Of({base, Reverse(base, first), Reverse(base, second), Reverse(base, first | second)});
}

std::pair<CoordSet, CoordSet> Rectangle::BlocksAt(Vertex pivot) const {
  // From any corner the two adjacent corners differ by the blocks and the
  // opposite corner by their union; the block pair is the same at every corner.
  if (!Points().contains(pivot)) throw Error(ErrorCode::kInvalidArgument, "pivot is not a rectangle vertex");
  return {first, second};
}

std::string Rectangle::ToString(int n) const { return Descriptor().ToString(n); }

std::size_t RectangleCount(int n) {
  std::size_t pow3 = 1;
  for (int i = 0; i < n; ++i) pow3 *= 3;
  std::size_t unordered_pairs = (pow3 - (std::size_t{2} << n) + 1) / 2;
  return (std::size_t{1} << n) * unordered_pairs / 4;
}

std::vector<Rectangle> EnumerateRectangles(int n) {
  CheckDim(n, 2);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Rectangle> out;
  out.reserve(RectangleCount(n));
  for (std::uint32_t v = 0; v <= full; ++v) {
    for (std::uint32_t i = 1; i <= full; ++i) {
      const std::uint32_t rest = full & ~i;
      // Unordered pairs {I, J}: require min(I) < min(J).
      for (std::uint32_t j = rest; j != 0; j = (j - 1) & rest) {
        if (std::countr_zero(j) < std::countr_zero(i)) continue;
        if ((v ^ i) < v || (v ^ j) < v || (v ^ i ^ j) < v) continue;
        out.push_back(Rectangle{Vertex(v), CoordSet(i), CoordSet(j)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view TripleTagName(TripleTag tag) {
  switch (tag) {
    case TripleTag::kDisjointCompletion: return "DisjointCompletion";
    case TripleTag::kNestedCompletion: return "NestedCompletion";
    case TripleTag::kNoFourthPoint: return "NoFourthPoint";
  }
  return "?";
}

TripleClass ClassifyTriple(Vertex v, Vertex v1, Vertex v2) {
  if (v == v1 || v == v2 || v1 == v2) throw Error(ErrorCode::kInvalidTriple, "triple vertices must be distinct");
  const CoordSet i = Difference(v, v1);
  const CoordSet j = Difference(v, v2);
  if (i.disjoint(j)) return {TripleTag::kDisjointCompletion, Reverse(v, i | j)};
  if (i.subset_of(j)) return {TripleTag::kNestedCompletion, Reverse(v, j - i)};
  if (j.subset_of(i)) return {TripleTag::kNestedCompletion, Reverse(v, i - j)};
  return {TripleTag::kNoFourthPoint, std::nullopt};
}

Rectangle EliminateRectangles(const Rectangle& r1, const Rectangle& r2, Vertex pivot) {
  if (!r1.Points().contains(pivot) || !r2.Points().contains(pivot)) {
    throw Error(ErrorCode::kNotAModularPair, "pivot is not a common vertex");
  }
  auto [a1, b1] = r1.BlocksAt(pivot);
  auto [a2, b2] = r2.BlocksAt(pivot);
  const CoordSet blocks1[2] = {a1, b1};
  const CoordSet blocks2[2] = {a2, b2};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const CoordSet p = blocks1[x], q = blocks1[1 - x];
      const CoordSet s = blocks2[y], t = blocks2[1 - y];
      // C(v; I, J) and C(v; I, K).
      if (p == s && q != t && q.disjoint(t)) {
        const CoordSet i = p, j = q, k = t;
        return Rectangle::Make(Reverse(pivot, j), i, j | k);
      }
      // C(v; IJ, K) and C(v; I, JK).
      if (s.subset_of(p) && s != p) {
        const CoordSet i = s, j = p - s, k = q;
        if (t == (j | k)) return Rectangle::Make(Reverse(pivot, i), j, i | k);
      }
    }
  }
  throw Error(ErrorCode::kNotAModularPair, "rectangles do not form a modular pair at the pivot");
}

}  // namespace cube_om
