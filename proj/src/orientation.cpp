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

#include "cube_om/orientation.hpp"

#include <algorithm>

#include "cube_om/exact.hpp"

namespace cube_om {

Orientation Reorient(const Orientation& o, const VertexSet& flip) {
  Orientation out{o.n, {}};
  out.cocircuits.reserve(o.cocircuits.size());
  for (const SignedSet& y : o.cocircuits) out.cocircuits.push_back(Reorient(y, flip).Canonical());
  return out;
}

void ValidateOrientation(const HyperplaneCatalog& catalog, const Orientation& o) {
  if (o.n != catalog.n) throw Error(ErrorCode::kNotAnOrientation, "orientation and catalog disagree on n");
  if (o.cocircuits.size() != catalog.size()) {
    throw Error(ErrorCode::kNotAnOrientation, "orientation must have one cocircuit per catalog hyperplane");
  }
  for (std::size_t k = 0; k < o.cocircuits.size(); ++k) {
    const SignedSet& y = o.cocircuits[k];
    auto fail = [&](const char* why) {
      throw Error(ErrorCode::kNotAnOrientation, "cocircuit " + std::to_string(k) + ": " + why);
    };
    if (!y.valid()) fail("positive and negative parts overlap");
    if (!y.IsCanonical()) fail("not the canonical representative");
    if (y.support() != catalog.entries[k].points.Complement(catalog.n)) fail("support is not the hyperplane complement");
  }
}

SignedSet AffCocircuit(int n, const Hyperplane& h) {
  SignedSet y;
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    const std::int64_t side = h.Evaluate(Vertex(v)) - h.offset;
    if (side > 0) y.positive.insert(Vertex(v));
    if (side < 0) y.negative.insert(Vertex(v));
  }
  return y.Canonical();
}

Orientation AffOrientation(const HyperplaneCatalog& catalog) {
  Orientation o{catalog.n, std::vector<SignedSet>(catalog.size())};
  const auto count = static_cast<std::ptrdiff_t>(catalog.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    o.cocircuits[k] = AffCocircuit(catalog.n, catalog.entries[k]);
  }
  return o;
}

Orientation AffOrientationSerial(const HyperplaneCatalog& catalog) {
  Orientation o{catalog.n, {}};
  for (const Hyperplane& h : catalog.entries) o.cocircuits.push_back(AffCocircuit(catalog.n, h));
  return o;
}

SignedSet RadonSignature(int n, const VertexSet& circuit) {
  CheckDim(n);
  const int m = circuit.size();
  if (m < 2 || m != AffineRank(n, circuit) + 1) {
    throw Error(ErrorCode::kNotACircuit, "set is not a circuit: " + circuit.ToString(n));
  }
  // Columns (v, 1); the kernel is one-dimensional.
  const std::vector<Vertex> pts = circuit.Elements();
  exact::IntMatrix a(n + 1, m);
  for (int c = 0; c < m; ++c) {
    for (int i = 0; i < n; ++i) a(i, c) = pts[c].coord(i);
    a(n, c) = 1;
  }
  const std::vector<int> rows = exact::IndependentRows(a);
  if (static_cast<int>(rows.size()) != m - 1) {
    throw Error(ErrorCode::kNotACircuit, "dependency is not unique");
  }
  const std::vector<std::int64_t> lambda = exact::CofactorKernel(a.SelectRows(rows));
  SignedSet x;
  for (int c = 0; c < m; ++c) {
    if (lambda[c] == 0) throw Error(ErrorCode::kNotACircuit, "set is dependent but not minimal");
    (lambda[c] > 0 ? x.positive : x.negative).insert(pts[c]);
  }
  return x.Canonical();
}

SignedRectangle SignRectangle(const Rectangle& r) {
  const Vertex v = r.base;
  SignedSet s;
  s.positive = VertexSet::Of({v, Reverse(v, r.first | r.second)});
  s.negative = VertexSet::Of({Reverse(v, r.first), Reverse(v, r.second)});
  return {r, s.Canonical()};
}

std::vector<SignedSet> FamilyF(int n) {
  CheckDim(n);
  std::vector<SignedSet> out;
  for (int i = 0; i < n; ++i) {
    for (int eps : {-1, 1}) {
      out.push_back(SignedSet{MakeFacet(n, i, eps).points.Complement(n), {}});
    }
  }
  return out;
}

std::vector<SignedRectangle> FamilyR(int n) {
  std::vector<SignedRectangle> out;
  for (const Rectangle& r : EnumerateRectangles(n)) out.push_back(SignRectangle(r));
  return out;
}

bool IsAcyclic(const Orientation& o) {
  VertexSet covered;
  for (const SignedSet& y : o.cocircuits) {
    if (y.pure()) covered |= y.support();
  }
  return covered == VertexSet::Full(o.n);
}

std::size_t FacetIndex(const HyperplaneCatalog& catalog, int i, int eps) {
  const Hyperplane facet = MakeFacet(catalog.n, i, eps);
  auto it = std::lower_bound(catalog.entries.begin(), catalog.entries.end(), facet);
  if (it == catalog.entries.end() || it->normal != facet.normal || it->offset != facet.offset) {
    throw Error(ErrorCode::kInconsistentCatalog,
                "catalog is missing the facet " + HyperplaneKind{HyperplaneKind::Tag::kFacet, i, -1, eps}.ToString());
  }
  return static_cast<std::size_t>(it - catalog.entries.begin());
}

std::vector<std::size_t> FacetIndices(const HyperplaneCatalog& catalog) {
  std::vector<std::size_t> out;
  for (int i = 0; i < catalog.n; ++i) {
    for (int eps : {-1, 1}) out.push_back(FacetIndex(catalog, i, eps));
  }
  return out;
}

}  // namespace cube_om
