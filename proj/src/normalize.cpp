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

#include "cube_om/normalize.hpp"

namespace cube_om {

std::string_view BranchName(Branch b) { return b == Branch::kCondition1 ? "Condition1" : "Condition2"; }

VertexSet LastFacet(int n, int eps) { return MakeFacet(n, n - 1, eps).points; }

VertexSet BaseFlipSet(const HyperplaneCatalog& catalog, const Orientation& o) {
  const int n = catalog.n;
  VertexSet flip;
  for (int eps : {-1, 1}) {
    // Stored representatives are canonical, so a pure cocircuit is already
    // positive and contributes nothing.
    const SignedSet& y = o.cocircuits.at(FacetIndex(catalog, n - 1, eps)).Canonical();
    flip |= y.negative;
  }
  return flip;
}

std::vector<SignedSet> ForcedCircuitSignatures(const Orientation& o, const VertexSet& support) {
  std::vector<const SignedSet*> relevant;
  for (const SignedSet& y : o.cocircuits) {
    if (y.support().intersects(support)) relevant.push_back(&y);
  }
  const std::vector<Vertex> pts = support.Elements();
  const int m = static_cast<int>(pts.size());
  std::vector<SignedSet> out;
  if (m == 0) return out;
  // The minimum element stays positive; the other m-1 signs range freely.
  for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
    SignedSet x;
    x.positive.insert(pts[0]);
    for (int k = 1; k < m; ++k) {
      ((mask >> (k - 1)) & 1u ? x.negative : x.positive).insert(pts[k]);
    }
    bool ok = true;
    for (const SignedSet* y : relevant) {
      if (!Orthogonal(x, *y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

Branch RectangleBranchAt(const Orientation& o, const Rectangle& probe) {
  const int last = o.n - 1;
  CoordSet i = probe.first;
  CoordSet jn = probe.second;
  if (i.contains(last)) std::swap(i, jn);
  if (!jn.contains(last)) throw Error(ErrorCode::kInvalidArgument, "probe rectangle does not cross coordinate n");
  const Vertex v = probe.base;
  const SignedSet r{VertexSet::Of({v, Reverse(v, i | jn)}), VertexSet::Of({Reverse(v, i), Reverse(v, jn)})};
  const SignedSet r_swapped{VertexSet::Of({v, Reverse(v, jn)}), VertexSet::Of({Reverse(v, i), Reverse(v, i | jn)})};

  const std::vector<SignedSet> forced = ForcedCircuitSignatures(o, probe.Points());
  if (forced.size() != 1) {
    throw Error(ErrorCode::kNotAnOrientation, "probe rectangle " + probe.ToString(o.n) + " has " +
                                                  std::to_string(forced.size()) + " orthogonal signatures");
  }
  if (forced[0] == r.Canonical()) return Branch::kCondition1;
  if (forced[0] == r_swapped.Canonical()) return Branch::kCondition2;
  throw Error(ErrorCode::kNotAnOrientation, "probe rectangle signature matches neither pattern");
}

Branch RectangleBranch(const HyperplaneCatalog& catalog, const Orientation& o) {
  const int n = catalog.n;
  CheckDim(n, 2);
  for (int eps : {-1, 1}) {
    if (!o.cocircuits.at(FacetIndex(catalog, n - 1, eps)).pure()) {
      throw Error(ErrorCode::kInvalidArgument, "last-coordinate facet cocircuits must be pure");
    }
  }
  return RectangleBranchAt(o, Rectangle::Make(Vertex(0), CoordSet::Of({0}), CoordSet::Of({n - 1})));
}

NormalizationResult TryNormalize(const HyperplaneCatalog& catalog, const Orientation& o) {
  ValidateOrientation(catalog, o);
  const int n = catalog.n;
  NormalizationResult res;
  res.flip = BaseFlipSet(catalog, o);
  res.branch = RectangleBranch(catalog, Reorient(o, res.flip));
  if (res.branch == Branch::kCondition2) res.flip ^= LastFacet(n, 1);
  res.normalized = Reorient(o, res.flip);
  res.verified = VerifyF(catalog, res.normalized);
  return res;
}

NormalizationResult Normalize(const HyperplaneCatalog& catalog, const Orientation& o) {
  NormalizationResult res = TryNormalize(catalog, o);
  if (!res.verified) {
    throw Error(ErrorCode::kNotNormalizable, "reoriented input does not contain every facet cocircuit");
  }
  return res;
}

bool VerifyF(const HyperplaneCatalog& catalog, const Orientation& o) {
  for (std::size_t k : FacetIndices(catalog)) {
    if (!o.cocircuits.at(k).pure()) return false;
  }
  return true;
}

bool VerifyR(const HyperplaneCatalog& catalog, const Orientation& o) {
  const std::vector<SignedRectangle> family = FamilyR(catalog.n);
  const auto count = static_cast<std::ptrdiff_t>(o.cocircuits.size());
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    for (const SignedRectangle& x : family) {
      if (!Orthogonal(x.signs, o.cocircuits[k])) {
        ok = false;
        break;
      }
    }
  }
  return ok;
}

bool VerifyRSerial(const HyperplaneCatalog& catalog, const Orientation& o) {
  for (const SignedRectangle& x : FamilyR(catalog.n)) {
    for (const SignedSet& y : o.cocircuits) {
      if (!Orthogonal(x.signs, y)) return false;
    }
  }
  return true;
}

bool UniquenessCheck(const HyperplaneCatalog& catalog, const Orientation& o) {
  if (!VerifyF(catalog, o)) throw Error(ErrorCode::kInvalidArgument, "uniqueness check needs every facet cocircuit pure");
  const int n = catalog.n;
  for (const VertexSet& flip : {LastFacet(n, 1), LastFacet(n, -1), VertexSet::Full(n)}) {
    const Orientation other = Reorient(o, flip);
    if (other != o && VerifyF(catalog, other)) return false;
  }
  return true;
}

bool UniquenessCheckExhaustive(const HyperplaneCatalog& catalog, const Orientation& o) {
  const int n = catalog.n;
  CheckDim(n, 2, 4);
  if (!VerifyF(catalog, o)) throw Error(ErrorCode::kInvalidArgument, "uniqueness check needs every facet cocircuit pure");
  const std::vector<std::size_t> facets = FacetIndices(catalog);
  const std::uint32_t vertices = 1u << n;
  const std::uint64_t subsets = std::uint64_t{1} << vertices;
  for (std::uint64_t bits = 1; bits < subsets; ++bits) {
    VertexSet flip;
    flip.words()[0] = bits;
    bool pure = true;
    for (std::size_t k : facets) {
      if (!Reorient(o.cocircuits[k], flip).pure()) {
        pure = false;
        break;
      }
    }
    if (pure && Reorient(o, flip) != o) return false;
  }
  return true;
}

}  // namespace cube_om
