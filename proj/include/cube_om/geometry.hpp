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

#ifndef CUBE_OM_GEOMETRY_HPP_
#define CUBE_OM_GEOMETRY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cube_om/core.hpp"

namespace cube_om {

// The k-subcube generated by a base vertex and k pairwise disjoint nonempty
// coordinate blocks: every vertex obtained from `base` by reversing the signs
// on a union of blocks.
struct SubcubeDescriptor {
  Vertex base;
  std::vector<CoordSet> blocks;

  int dimension() const { return static_cast<int>(blocks.size()); }
  friend bool operator==(const SubcubeDescriptor&, const SubcubeDescriptor&) = default;
  std::string ToString(int n) const;
};

// Throws kInvalidDescriptor on empty, overlapping, or out-of-range blocks.
void ValidateDescriptor(int n, const SubcubeDescriptor& d);

VertexSet GenerateSubcube(int n, const SubcubeDescriptor& d);

// Canonical presentation of the same subcube: base is the minimum vertex of
// the generated set and blocks are sorted by their smallest coordinate.
SubcubeDescriptor CanonicalDescriptor(int n, const SubcubeDescriptor& d);

// k if |s| = 2^k and s has affine dimension k, otherwise nullopt.
std::optional<int> RecognizeSubcube(int n, const VertexSet& s);

// Canonical descriptor of a subcube, recovered by splitting along the first
// non-constant coordinate and recursing into one side. Throws kNotASubcube.
SubcubeDescriptor RecoverDescriptor(int n, const VertexSet& s);

// A 2-subcube {v, -I v, -J v, -IJ v}, stored canonically: base is the
// minimum of the four vertices and first.min() < second.min().
struct Rectangle {
  Vertex base;
  CoordSet first;
  CoordSet second;

  static Rectangle Make(Vertex v, CoordSet i, CoordSet j);
  // Throws kInvalidArgument unless `points` is {v, -I v, -J v, -IJ v} for
  // some vertex v and disjoint nonempty I, J.
  static Rectangle FromPoints(const VertexSet& points);

  VertexSet Points() const;
  SubcubeDescriptor Descriptor() const { return {base, {first, second}}; }
  // The two blocks {I, J} such that this rectangle is C(pivot; I, J).
  std::pair<CoordSet, CoordSet> BlocksAt(Vertex pivot) const;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
  std::string ToString(int n) const;
};

// Every rectangle of C^n once, ordered by (base, first, second).
// Count is 2^n * U / 4 with U = (3^n - 2^(n+1) + 1) / 2.
std::vector<Rectangle> EnumerateRectangles(int n);
std::size_t RectangleCount(int n);

enum class TripleTag { kDisjointCompletion, kNestedCompletion, kNoFourthPoint };

struct TripleClass {
  TripleTag tag;
  std::optional<Vertex> fourth;
};

std::string_view TripleTagName(TripleTag tag);

// Classifies the plane through three distinct vertices by how the reversal
// sets I = v^v1 and J = v^v2 meet. Throws kInvalidTriple on repeated inputs.
TripleClass ClassifyTriple(Vertex v, Vertex v1, Vertex v2);

// Circuit elimination between two rectangles through a common vertex that
// form one of the two modular configurations
//   C(v; I, J) and C(v; I, K)        -> C(-J v; I, J u K)
//   C(v; I u J, K) and C(v; I, J u K) -> C(-I v; J, I u K)
// with I, J, K disjoint and nonempty. Throws kNotAModularPair otherwise.
Rectangle EliminateRectangles(const Rectangle& r1, const Rectangle& r2, Vertex pivot);

}  // namespace cube_om

#endif  // CUBE_OM_GEOMETRY_HPP_
