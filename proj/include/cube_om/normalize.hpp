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

#ifndef CUBE_OM_NORMALIZE_HPP_
#define CUBE_OM_NORMALIZE_HPP_

// Reorientation to the representative of an orientation class that contains
// every facet cocircuit as a pure signed set.
//
// The pipeline:
//  1. Flip the negative parts of the two cocircuits supported on the facets
//     of the last coordinate, so both become pure.
//  2. Read off, from one probe rectangle C(0; {1}, {n}), which of the two
//     possible sign patterns the rectangles across the last coordinate take.
//  3. If it is the swapped pattern, additionally flip the facet x_n = 1.
//  4. Verify that the result contains all facet cocircuits as pure sets.

#include <string_view>
#include <vector>

#include "cube_om/orientation.hpp"

namespace cube_om {

enum class Branch { kCondition1, kCondition2 };
std::string_view BranchName(Branch b);

struct NormalizationResult {
  VertexSet flip;  // A: reorienting the input on A yields `normalized`
  Orientation normalized;
  Branch branch = Branch::kCondition1;
  bool verified = false;
};

// The facet x_n = +1 (0-based coordinate n-1), i.e. vertices with bit n-1 clear.
VertexSet LastFacet(int n, int eps);

// Union of the negative parts of the (canonical) cocircuits supported on the
// two facets of the last coordinate.
VertexSet BaseFlipSet(const HyperplaneCatalog& catalog, const Orientation& o);

// All signed sets on `support` (canonical representatives) orthogonal to every
// cocircuit of `o`. For a genuine orientation and a circuit support this is
// exactly the signed circuit.
std::vector<SignedSet> ForcedCircuitSignatures(const Orientation& o, const VertexSet& support);

// Requires both facet cocircuits of the last coordinate to be pure (throws
// kInvalidArgument otherwise). Throws kNotAnOrientation when the probe
// rectangle has no unique orthogonal signature or matches neither pattern.
Branch RectangleBranch(const HyperplaneCatalog& catalog, const Orientation& o);
// Same decision taken from an arbitrary rectangle crossing the last coordinate,
// i.e. one whose blocks are I and J u {n}.
Branch RectangleBranchAt(const Orientation& o, const Rectangle& probe);

// Runs the pipeline; `verified` reports whether step 4 succeeded.
NormalizationResult TryNormalize(const HyperplaneCatalog& catalog, const Orientation& o);
// As TryNormalize but throws kNotNormalizable when verification fails.
NormalizationResult Normalize(const HyperplaneCatalog& catalog, const Orientation& o);

// Every facet cocircuit is pure.
bool VerifyF(const HyperplaneCatalog& catalog, const Orientation& o);
// Every signed rectangle is orthogonal to every cocircuit.
bool VerifyR(const HyperplaneCatalog& catalog, const Orientation& o);
bool VerifyRSerial(const HyperplaneCatalog& catalog, const Orientation& o);

// True iff no reorientation that changes `o` keeps every facet cocircuit pure.
// Only flips in {H_n, H_-n, C^n} can keep the two last-coordinate facet
// cocircuits pure, so those are the candidates examined. Requires VerifyF(o).
bool UniquenessCheck(const HyperplaneCatalog& catalog, const Orientation& o);
// Same question answered over all 2^(2^n) flip sets; n <= 4.
bool UniquenessCheckExhaustive(const HyperplaneCatalog& catalog, const Orientation& o);

}  // namespace cube_om

#endif  // CUBE_OM_NORMALIZE_HPP_
