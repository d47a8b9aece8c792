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

#include "cube_om/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>

namespace cube_om {

namespace {

bool OrthogonalToAll(const SignedSet& y, const std::vector<const SignedRectangle*>& meeting) {
  for (const SignedRectangle* x : meeting) {
    if (!Orthogonal(x->signs, y)) return false;
  }
  return true;
}

// Fills report.recovered when every support is determined.
void Assemble(DeterminacyReport& report) {
  Orientation o{report.n, {}};
  for (const SupportResult& s : report.supports) {
    if (s.status != SupportStatus::kDetermined) return;
    o.cocircuits.push_back(s.signature->Canonical());
  }
  report.recovered = std::move(o);
}

}  // namespace

std::string_view SupportStatusName(SupportStatus s) {
  switch (s) {
    case SupportStatus::kDetermined: return "Determined";
    case SupportStatus::kUnderdetermined: return "Underdetermined";
    case SupportStatus::kInconsistent: return "Inconsistent";
  }
  return "?";
}

std::string_view VerdictName(Verdict v) { return v == Verdict::kVerified ? "Verified" : "NotDecided"; }

int DeterminacyReport::Count(SupportStatus s) const {
  int c = 0;
  for (const SupportResult& r : supports) c += r.status == s;
  return c;
}

std::optional<ParityEdge> TwoPointConstraint(const SignedRectangle& x, const VertexSet& support) {
  const VertexSet meet = x.signs.support() & support;
  if (meet.size() != 2) return std::nullopt;
  const std::vector<Vertex> pq = meet.Elements();
  return ParityEdge{pq[0], pq[1], -x.signs.sign(pq[0]) * x.signs.sign(pq[1])};
}

ConstraintGraph BuildConstraintGraph(const VertexSet& support, const std::vector<SignedRectangle>& family) {
  ConstraintGraph g{support, {}};
  for (const SignedRectangle& x : family) {
    if (auto e = TwoPointConstraint(x, support)) g.edges.push_back(*e);
  }
  return g;
}

namespace {

// Orthogonality with a rectangle meeting the support in three or four
// vertices, over component variables: the literals a_k * z[comp_k] are not
// all equal.
struct NaeClause {
  std::vector<std::pair<int, int>> literals;  // (component, coefficient)
};

enum class Propagation { kFixpoint, kConflict };

// Unit propagation: a clause whose assigned literals all share a value and
// which has a single unassigned component forces that component the other way.
Propagation PropagateClauses(const std::vector<NaeClause>& clauses, std::vector<int>& z) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const NaeClause& clause : clauses) {
      int seen = 0;
      bool mixed = false;
      int free_component = -1;
      int free_coeff = 0;
      bool several_free = false;
      for (auto [c, a] : clause.literals) {
        if (z[c] == 0) {
          if (free_component == -1) {
            free_component = c;
            free_coeff = a;
          } else if (free_component != c) {
            several_free = true;
          } else if (free_coeff != a) {
            mixed = true;  // two literals of one component with opposite values
          }
          continue;
        }
        const int value = a * z[c];
        if (seen == 0) {
          seen = value;
        } else if (seen != value) {
          mixed = true;
        }
      }
      if (mixed || several_free) continue;
      if (free_component == -1) return Propagation::kConflict;
      if (seen == 0) continue;  // only one component involved, no information
      z[free_component] = -seen * free_coeff;
      changed = true;
    }
  }
  return Propagation::kFixpoint;
}

// Counts complete assignments (up to `limit`) that satisfy every clause,
// branching on the first free component. Keeps the first one found.
int CountSolutions(const std::vector<NaeClause>& clauses, std::vector<int> z, int limit, std::vector<int>& first) {
  if (PropagateClauses(clauses, z) == Propagation::kConflict) return 0;
  auto it = std::find(z.begin(), z.end(), 0);
  if (it == z.end()) {
    first = z;
    return 1;
  }
  int total = 0;
  for (int value : {1, -1}) {
    std::vector<int> branch = z;
    branch[it - z.begin()] = value;
    std::vector<int> sol;
    const int found = CountSolutions(clauses, branch, limit - total, sol);
    if (found > 0 && total == 0) first = sol;
    total += found;
    if (total >= limit) break;
  }
  return total;
}

}  // namespace

std::string_view ResolutionName(Resolution r) {
  switch (r) {
    case Resolution::kParity: return "parity";
    case Resolution::kPropagation: return "propagation";
    case Resolution::kSearch: return "search";
  }
  return "?";
}

std::optional<Resolution> ParseResolution(std::string_view name) {
  for (Resolution r : {Resolution::kParity, Resolution::kPropagation, Resolution::kSearch}) {
    if (ResolutionName(r) == name) return r;
  }
  return std::nullopt;
}

SupportResult ResolveSupport(const VertexSet& support, const std::vector<SignedRectangle>& family,
                             const PropagateOptions& options) {
  SupportResult result;
  std::vector<const SignedRectangle*> meeting;
  for (const SignedRectangle& x : family) {
    if (x.signs.support().intersects(support)) meeting.push_back(&x);
  }
  const ConstraintGraph graph = BuildConstraintGraph(support, family);

  const std::vector<Vertex> pts = support.Elements();
  std::array<int, VertexSet::kCapacity> local{};
  for (std::size_t k = 0; k < pts.size(); ++k) local[pts[k].word] = static_cast<int>(k);
  std::vector<std::vector<std::pair<int, int>>> adj(pts.size());
  for (const ParityEdge& e : graph.edges) {
    adj[local[e.p.word]].emplace_back(local[e.q.word], e.parity);
    adj[local[e.q.word]].emplace_back(local[e.p.word], e.parity);
  }

  // Breadth-first sign propagation, one root (sign +) per component. The
  // first root is the minimum vertex so the result is canonical.
  std::vector<int> sign(pts.size(), 0);
  std::vector<int> component(pts.size(), -1);
  bool conflict = false;
  for (std::size_t root = 0; root < pts.size(); ++root) {
    if (sign[root] != 0) continue;
    const int c = result.components++;
    sign[root] = 1;
    component[root] = c;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (auto [w, parity] : adj[u]) {
        const int want = sign[u] * parity;
        if (sign[w] == 0) {
          sign[w] = want;
          component[w] = c;
          queue.push_back(w);
        } else if (sign[w] != want) {
          conflict = true;
        }
      }
    }
  }
  if (conflict) {
    result.status = SupportStatus::kInconsistent;
    return result;
  }

  auto finish = [&](const std::vector<int>& z, Resolution how) {
    SignedSet y;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      (sign[k] * z[component[k]] > 0 ? y.positive : y.negative).insert(pts[k]);
    }
    if (OrthogonalToAll(y, meeting)) {
      result.status = SupportStatus::kDetermined;
      result.signature = y;
      result.resolution = how;
    } else {
      result.status = SupportStatus::kInconsistent;
    }
  };

  std::vector<int> z(result.components, 0);
  z[0] = 1;  // component of the minimum vertex
  if (result.components == 1) {
    finish(z, Resolution::kParity);
    return result;
  }
  result.status = SupportStatus::kUnderdetermined;
  if (options.inference == Resolution::kParity) return result;

  std::vector<NaeClause> clauses;
  for (const SignedRectangle* x : meeting) {
    const VertexSet meet = x->signs.support() & support;
    if (meet.size() < 3) continue;
    NaeClause clause;
    meet.ForEach([&](Vertex p) {
      const int k = local[p.word];
      clause.literals.emplace_back(component[k], x->signs.sign(p) * sign[k]);
    });
    clauses.push_back(std::move(clause));
  }
  if (PropagateClauses(clauses, z) == Propagation::kConflict) {
    result.status = SupportStatus::kInconsistent;
    return result;
  }
  if (std::find(z.begin(), z.end(), 0) == z.end()) {
    finish(z, Resolution::kPropagation);
    return result;
  }

  if (options.inference == Resolution::kPropagation) return result;
  std::vector<int> solution;
  const int solutions = CountSolutions(clauses, z, 2, solution);
  if (solutions == 0) {
    result.status = SupportStatus::kInconsistent;
  } else if (solutions == 1) {
    finish(solution, Resolution::kSearch);
  }
  return result;
}

DeterminacyReport Propagate(const HyperplaneCatalog& catalog, const std::vector<SignedRectangle>& family,
                            const PropagateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  DeterminacyReport report;
  report.n = catalog.n;
  const std::vector<VertexSet> supports = CocircuitSupports(catalog);
  report.supports.resize(supports.size());
  const auto count = static_cast<std::ptrdiff_t>(supports.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    report.supports[k] = ResolveSupport(supports[k], family, options);
  }
  Assemble(report);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DeterminacyReport PropagateSerial(const HyperplaneCatalog& catalog, const std::vector<SignedRectangle>& family,
                                  const PropagateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  DeterminacyReport report;
  report.n = catalog.n;
  for (const VertexSet& support : CocircuitSupports(catalog)) {
    report.supports.push_back(ResolveSupport(support, family, options));
  }
  Assemble(report);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DeterminacyReport VerifyConjecture(const HyperplaneCatalog& catalog, const std::vector<SignedRectangle>& family,
                                   const PropagateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  DeterminacyReport report = Propagate(catalog, family, options);
  if (report.recovered && *report.recovered == AffOrientation(catalog)) report.verdict = Verdict::kVerified;
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DeterminacyReport VerifyConjecture(const HyperplaneCatalog& catalog, const PropagateOptions& options) {
  return VerifyConjecture(catalog, FamilyR(catalog.n), options);
}

std::vector<SignedRectangle> FaceRectangles(const std::vector<SignedRectangle>& family) {
  std::vector<SignedRectangle> out;
  for (const SignedRectangle& x : family) {
    if (x.rect.first.size() == 1 && x.rect.second.size() == 1) out.push_back(x);
  }
  return out;
}

}  // namespace cube_om
