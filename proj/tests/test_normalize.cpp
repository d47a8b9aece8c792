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

#include <random>

#include "cube_om/normalize.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "test_util.hpp"

namespace cube_om {
namespace {

using testing::ErrorOf;

struct Fixture {
  explicit Fixture(int n) : n(n), catalog(EnumerateHyperplanes(n)), aff(AffOrientation(catalog)) {}
  int n;
  HyperplaneCatalog catalog;
  Orientation aff;
};

// Rectangles whose blocks separate coordinate n from the rest.
std::vector<Rectangle> Probes(int n) {
  std::vector<Rectangle> out;
  for (const Rectangle& r : EnumerateRectangles(n)) {
    if (r.first.contains(n - 1) || r.second.contains(n - 1)) out.push_back(r);
  }
  return out;
}

void CheckProbesAgree(const Orientation& o, Branch expect) {
  for (const Rectangle& probe : Probes(o.n)) CHECK(RectangleBranchAt(o, probe) == expect);
}

TEST_CASE("base flip set") {
  std::mt19937_64 rng(51);
  for (int n = 2; n <= 4; ++n) {
    const Fixture f(n);
    CHECK(BaseFlipSet(f.catalog, f.aff).empty());
    for (int trial = 0; trial < 100; ++trial) {
      const Orientation o = Reorient(f.aff, oracle::RandomSubset(n, rng));
      const Orientation fixed = Reorient(o, BaseFlipSet(f.catalog, o));
      for (int eps : {-1, 1}) {
        const SignedSet& y = fixed.cocircuits[FacetIndex(f.catalog, n - 1, eps)];
        CHECK(y.pure());
      }
      // Storing the other representative of a facet cocircuit changes nothing.
      Orientation flipped = o;
      SignedSet& y = flipped.cocircuits[FacetIndex(f.catalog, n - 1, 1)];
      y = y.Negated();
      CHECK(BaseFlipSet(f.catalog, flipped) == BaseFlipSet(f.catalog, o));
    }
  }
}

TEST_CASE("rectangle branch") {
  for (int n = 2; n <= 5; ++n) {
    const Fixture f(n);
    const VertexSet hn = LastFacet(n, 1);
    CHECK(RectangleBranch(f.catalog, f.aff) == Branch::kCondition1);
    const Orientation swapped = Reorient(f.aff, hn);
    CHECK(RectangleBranch(f.catalog, swapped) == Branch::kCondition2);
    CHECK(RectangleBranch(f.catalog, Reorient(swapped, hn)) == Branch::kCondition1);
  }
  // Needs pure last-coordinate facet cocircuits.
  const Fixture f(3);
  const Orientation bad = Reorient(f.aff, VertexSet::Of({Vertex(0)}));
  CHECK(ErrorOf([&] { RectangleBranch(f.catalog, bad); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("all probes agree at n = 3") {
  const Fixture f(3);
  CheckProbesAgree(f.aff, Branch::kCondition1);
  CheckProbesAgree(Reorient(f.aff, LastFacet(3, 1)), Branch::kCondition2);
  CheckProbesAgree(Reorient(f.aff, LastFacet(3, -1)), Branch::kCondition2);
  // Over every reorientation of aff, after the base flip.
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    const Orientation o = Reorient(f.aff, testing::AllSubsetBits(bits));
    const Orientation base = Reorient(o, BaseFlipSet(f.catalog, o));
    CheckProbesAgree(base, RectangleBranch(f.catalog, base));
  }
}

TEST_CASE("branches are exclusive and exhaustive over sampled reorientations at n = 3") {
  const Fixture f(3);
  std::mt19937_64 rng(61);
  int counts[2] = {0, 0};
  for (int trial = 0; trial < 1000; ++trial) {
    const Orientation o = Reorient(f.aff, oracle::RandomSubset(3, rng));
    const Orientation base = Reorient(o, BaseFlipSet(f.catalog, o));
    const Rectangle probe = Rectangle::Make(Vertex(0), CoordSet(1u), CoordSet(4u));
    const std::vector<SignedSet> forced = ForcedCircuitSignatures(base, probe.Points());
    REQUIRE(forced.size() == 1);
    ++counts[static_cast<int>(RectangleBranch(f.catalog, base))];
  }
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
}

TEST_CASE("normalization round trip") {
  std::mt19937_64 rng(71);
  for (int n = 2; n <= 4; ++n) {
    const Fixture f(n);
    std::vector<VertexSet> flips;
    if (n == 2) {
      for (std::uint64_t bits = 0; bits < 16; ++bits) flips.push_back(testing::AllSubsetBits(bits));
    } else {
      for (int k = 0; k < 100; ++k) flips.push_back(oracle::RandomSubset(n, rng));
    }
    for (const VertexSet& a : flips) {
      const Orientation o = Reorient(f.aff, a);
      const NormalizationResult res = Normalize(f.catalog, o);
      CHECK(res.verified);
      CHECK(res.normalized == f.aff);
      CHECK(Reorient(o, res.flip) == res.normalized);
      CHECK(Normalize(f.catalog, res.normalized).flip.empty());
    }
  }
}

TEST_CASE("normalization examples") {
  for (int n = 2; n <= 4; ++n) {
    const Fixture f(n);
    const NormalizationResult self = Normalize(f.catalog, f.aff);
    CHECK(self.flip.empty());
    CHECK(self.branch == Branch::kCondition1);
    const NormalizationResult swapped = Normalize(f.catalog, Reorient(f.aff, LastFacet(n, 1)));
    CHECK(swapped.flip == LastFacet(n, 1));
    CHECK(swapped.branch == Branch::kCondition2);
  }
}

TEST_CASE("verify F and verify R") {
  std::mt19937_64 rng(81);
  for (int n = 2; n <= 4; ++n) {
    const Fixture f(n);
    CHECK(VerifyF(f.catalog, f.aff));
    CHECK(VerifyR(f.catalog, f.aff));
    const Orientation one = Reorient(f.aff, VertexSet::Of({Vertex(0)}));
    CHECK(!VerifyF(f.catalog, one));
    CHECK(!VerifyR(f.catalog, one));
    // Random sets rarely keep F; unions of facets and their complements
    // supply the positive cases.
    int agree_true = 0;
    for (int trial = 0; trial < 200; ++trial) {
      VertexSet a;
      if (trial % 2 == 0) {
        a = oracle::RandomSubset(n, rng);
      } else {
        const int pick = static_cast<int>(rng() % 4);
        if (pick == 1) a = VertexSet::Full(n);
        if (pick >= 2) a = LastFacet(n, pick == 2 ? 1 : -1);
        if (rng() % 2) a ^= MakeFacet(n, static_cast<int>(rng() % n), 1).points;
      }
      const Orientation o = Reorient(f.aff, a);
      const bool vf = VerifyF(f.catalog, o);
      CHECK(vf == VerifyR(f.catalog, o));
      CHECK(VerifyR(f.catalog, o) == VerifyRSerial(f.catalog, o));
      agree_true += vf;
    }
    CHECK(agree_true > 0);
  }
}

TEST_CASE("total reversal leaves the canonical orientation unchanged") {
  for (int n = 2; n <= 4; ++n) {
    const Fixture f(n);
    const Orientation all = Reorient(f.aff, VertexSet::Full(n));
    CHECK(all == f.aff);
    CHECK(VerifyF(f.catalog, all));
  }
}

TEST_CASE("uniqueness") {
  for (int n = 2; n <= 5; ++n) {
    const Fixture f(n);
    CHECK(UniquenessCheck(f.catalog, f.aff));
    if (n <= 4) CHECK(UniquenessCheckExhaustive(f.catalog, f.aff));
  }
  const Fixture f(3);
  const Orientation bad = Reorient(f.aff, VertexSet::Of({Vertex(0)}));
  CHECK(ErrorOf([&] { UniquenessCheck(f.catalog, bad); }) == ErrorCode::kInvalidArgument);
  CHECK(ErrorOf([&] { UniquenessCheckExhaustive(f.catalog, bad); }) == ErrorCode::kInvalidArgument);
  const Fixture f5(5);
  CHECK(ErrorOf([&] { UniquenessCheckExhaustive(f5.catalog, f5.aff); }) == ErrorCode::kCapExceeded);
}

TEST_CASE("inputs that are not orientations are rejected") {
  const Fixture f(3);
  // Break the purity of a first-coordinate facet cocircuit only.
  Orientation fake = f.aff;
  SignedSet& y = fake.cocircuits[FacetIndex(f.catalog, 0, 1)];
  const Vertex moved = y.positive.Elements().back();
  y.positive.erase(moved);
  y.negative.insert(moved);
  const auto code = ErrorOf([&] { Normalize(f.catalog, fake); });
  REQUIRE(code.has_value());
  CHECK((*code == ErrorCode::kNotNormalizable || *code == ErrorCode::kNotAnOrientation));

  Orientation overlapping = f.aff;
  overlapping.cocircuits[0].negative.insert(overlapping.cocircuits[0].positive.min());
  CHECK(ErrorOf([&] { Normalize(f.catalog, overlapping); }) == ErrorCode::kNotAnOrientation);
}

}  // namespace
}  // namespace cube_om
