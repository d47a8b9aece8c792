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

#ifndef CUBE_OM_MATROID_HPP_
#define CUBE_OM_MATROID_HPP_

// The matroid of affine dependencies of C^n: exact rank, closure, and the
// complete hyperplane catalog.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cube_om/core.hpp"

namespace cube_om {

// dim(aff(s)) + 1, computed exactly. The empty set has rank 0.
int AffineRank(int n, const VertexSet& s);

// Every vertex whose addition leaves the rank unchanged.
VertexSet Closure(int n, const VertexSet& s);

// A rank-n flat together with the primitive integer equation x . normal = offset
// of its affine span. The normal is canonical: gcd(normal, offset) = 1 and its
// first nonzero entry is positive.
struct Hyperplane {
  VertexSet points;
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;

  // h . v; the vertex lies on the hyperplane iff this equals `offset`.
  std::int64_t Evaluate(Vertex v) const;
  // Compares by (normal, offset), the catalog order.
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane& a, const Hyperplane& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.offset <=> b.offset;
  }
  std::string ToString(int n) const;
};

// Hyperplane spanned by n affinely independent vertices, nullopt if they are
// dependent. The normal comes from cofactor expansion of the difference matrix.
std::optional<Hyperplane> HyperplaneThrough(int n, std::span<const Vertex> basis);

// Builds the canonical hyperplane for an arbitrary integer equation and
// collects its points. Throws kInvalidArgument if the equation is zero.
Hyperplane HyperplaneFromEquation(int n, std::vector<std::int64_t> normal, std::int64_t offset);

// Facet x_i = eps and skew-facet x_i + eps x_j = 0 (0-based i < j).
Hyperplane MakeFacet(int n, int i, int eps);
Hyperplane MakeSkewFacet(int n, int i, int j, int eps);

struct HyperplaneKind {
  enum class Tag { kFacet, kSkewFacet, kOther };
  Tag tag = Tag::kOther;
  int i = -1;
  int j = -1;
  int eps = 0;

  friend bool operator==(const HyperplaneKind&, const HyperplaneKind&) = default;
  std::string ToString() const;
};

HyperplaneKind ClassifyHyperplane(int n, const Hyperplane& h);

struct HyperplaneCatalog {
  int n = 0;
  std::vector<Hyperplane> entries;  // sorted by (normal, offset)

  std::size_t size() const { return entries.size(); }
  // Index of the hyperplane with exactly this point set, if any.
  std::optional<std::size_t> Find(const VertexSet& points) const;

  friend bool operator==(const HyperplaneCatalog&, const HyperplaneCatalog&) = default;
};

// Complete catalog by scanning affinely independent n-subsets in parallel.
// If `cache` is given it is validated and returned instead; a cache for a
// different n throws kCacheMismatch and a corrupt one kInconsistentCatalog.
HyperplaneCatalog EnumerateHyperplanes(int n, const HyperplaneCatalog* cache = nullptr);

// Single-threaded reference implementation of the same scan.
HyperplaneCatalog EnumerateHyperplanesSerial(int n);

// Re-verifies every entry (points match the equation, rank n, canonical
// normal, strictly sorted) and, for n <= 5, the entry count. Throws kCacheMismatch or kInconsistentCatalog.
void ValidateCatalog(int n, const HyperplaneCatalog& catalog);

// Cocircuit supports C^n \ H, in catalog order.
std::vector<VertexSet> CocircuitSupports(const HyperplaneCatalog& catalog);

}  // namespace cube_om

#endif  // CUBE_OM_MATROID_HPP_
