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

#ifndef CUBE_OM_ORIENTATION_HPP_
#define CUBE_OM_ORIENTATION_HPP_

// The realizable orientation of the cube matroid: cocircuits signed by the
// side of their hyperplane, circuits signed by their Radon partition.
//
// An orientation is presented as a total map from catalog index to the signed
// cocircuit on C^n \ H, each stored as its canonical +/- representative.

#include <vector>

#include "cube_om/core.hpp"
#include "cube_om/geometry.hpp"
#include "cube_om/matroid.hpp"

namespace cube_om {

struct Orientation {
  int n = 0;
  std::vector<SignedSet> cocircuits;  // indexed like the catalog

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Entrywise reorientation, re-canonicalized.
Orientation Reorient(const Orientation& o, const VertexSet& flip);

// Throws kNotAnOrientation unless every entry is canonical, disjoint, and
// supported on the complement of its catalog hyperplane.
void ValidateOrientation(const HyperplaneCatalog& catalog, const Orientation& o);

// Signs C^n \ H by sign(v . normal - offset), canonical representative.
SignedSet AffCocircuit(int n, const Hyperplane& h);

Orientation AffOrientation(const HyperplaneCatalog& catalog);
Orientation AffOrientationSerial(const HyperplaneCatalog& catalog);

// Signature of a circuit from the sign pattern of its unique affine
// dependency. Throws kNotACircuit if the set is not minimally dependent.
SignedSet RadonSignature(int n, const VertexSet& circuit);

struct SignedRectangle {
  Rectangle rect;
  SignedSet signs;  // positive {v, -IJ v}, negative {-I v, -J v}

  friend bool operator==(const SignedRectangle&, const SignedRectangle&) = default;
};

SignedRectangle SignRectangle(const Rectangle& r);

// The 2n facet cocircuits as pure signed sets (canonical representatives).
std::vector<SignedSet> FamilyF(int n);
// One signed rectangle per rectangle of C^n, in enumeration order.
std::vector<SignedRectangle> FamilyR(int n);

// True iff the pure cocircuits cover C^n.
bool IsAcyclic(const Orientation& o);

// Catalog indices of the facets x_i = eps, in the order (i, -1), (i, +1).
std::vector<std::size_t> FacetIndices(const HyperplaneCatalog& catalog);
std::size_t FacetIndex(const HyperplaneCatalog& catalog, int i, int eps);

}  // namespace cube_om

#endif  // CUBE_OM_ORIENTATION_HPP_
