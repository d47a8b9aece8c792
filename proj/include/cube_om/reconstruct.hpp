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

#ifndef CUBE_OM_RECONSTRUCT_HPP_
#define CUBE_OM_RECONSTRUCT_HPP_

// Recovery of cocircuit signatures from signed rectangles by orthogonality.
//
// A signed rectangle X meeting a cocircuit support in exactly two vertices
// {p, q} must agree with the cocircuit Y on one of them and disagree on the
// other, so Y(p) * Y(q) = -X(p) * X(q). These parity edges are propagated from
// the minimum vertex of each support and split it into components whose
// internal signs are fixed up to one sign per component.
//
// A rectangle meeting the support in three or four vertices says that the
// products X(p) * Y(p) over the meet are not all equal. Over the component
// signs this is a not-all-equal clause. Unit propagation of those clauses
// settles every support for n <= 4; a complete search (DPLL, stopping at two
// solutions) settles the rest. Every determined signature is re-checked
// against full orthogonality.

#include <optional>
#include <string_view>
#include <vector>

#include "cube_om/orientation.hpp"

namespace cube_om {

struct ParityEdge {
  Vertex p;
  Vertex q;
  int parity;  // required value of Y(p) * Y(q)
};

std::optional<ParityEdge> TwoPointConstraint(const SignedRectangle& x, const VertexSet& support);

struct ConstraintGraph {
  VertexSet support;
  std::vector<ParityEdge> edges;
};

ConstraintGraph BuildConstraintGraph(const VertexSet& support, const std::vector<SignedRectangle>& family);

enum class SupportStatus { kDetermined, kUnderdetermined, kInconsistent };
std::string_view SupportStatusName(SupportStatus s);

// Inference strength, and which stage pinned a determined support down.
//   kParity:      parity edges only; determined iff the graph is connected.
//   kPropagation: plus unit propagation of the not-all-equal clauses.
//   kSearch:      plus a complete search for a unique sign assignment.
enum class Resolution { kParity, kPropagation, kSearch };
std::string_view ResolutionName(Resolution r);
std::optional<Resolution> ParseResolution(std::string_view name);

struct SupportResult {
  SupportStatus status = SupportStatus::kUnderdetermined;
  int components = 0;                  // connected components of the parity graph
  std::optional<SignedSet> signature;  // present iff kDetermined
  Resolution resolution = Resolution::kParity;
};

struct PropagateOptions {
  Resolution inference = Resolution::kSearch;
};

enum class Verdict { kVerified, kNotDecided };
std::string_view VerdictName(Verdict v);

struct DeterminacyReport {
  int n = 0;
  std::vector<SupportResult> supports;  // catalog order
  std::optional<Orientation> recovered;  // present iff every support is determined
  Verdict verdict = Verdict::kNotDecided;
  double wall_time_ms = 0;

  int Count(SupportStatus s) const;
};

SupportResult ResolveSupport(const VertexSet& support, const std::vector<SignedRectangle>& family,
                             const PropagateOptions& options = {});

DeterminacyReport Propagate(const HyperplaneCatalog& catalog, const std::vector<SignedRectangle>& family,
                            const PropagateOptions& options = {});
DeterminacyReport PropagateSerial(const HyperplaneCatalog& catalog, const std::vector<SignedRectangle>& family,
                                  const PropagateOptions& options = {});

// Propagates with the full rectangle family; Verified iff every support is
// determined and the recovered orientation equals the realizable one.
DeterminacyReport VerifyConjecture(const HyperplaneCatalog& catalog, const std::vector<SignedRectangle>& family,
                                   const PropagateOptions& options = {});
DeterminacyReport VerifyConjecture(const HyperplaneCatalog& catalog, const PropagateOptions& options = {});

// Rectangles that are 2-faces of the cube (both blocks singletons).
std::vector<SignedRectangle> FaceRectangles(const std::vector<SignedRectangle>& family);

}  // namespace cube_om

#endif  // CUBE_OM_RECONSTRUCT_HPP_
