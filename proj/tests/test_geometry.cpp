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

#include <functional>
#include <random>
#include <set>

#include "cube_om/geometry.hpp"
#include "cube_om/matroid.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "test_util.hpp"

namespace cube_om {
namespace {

using testing::ErrorOf;
using testing::V;

CoordSet C(std::initializer_list<int> one_based) {
  CoordSet s;
  for (int i : one_based) s = s | CoordSet(1u << (i - 1));
  return s;
}

// Every descriptor presentation at dimension n: each coordinate gets a label
// 0 (unused) or 1..k, labels 1..k all used, block order = label order.
void ForEachPresentation(int n, const std::function<void(const SubcubeDescriptor&)>& f) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= n + 1;
  for (int code = 0; code < total; ++code) {
    std::vector<CoordSet> blocks(n);
    int c = code;
    int k = 0;
    for (int i = 0; i < n; ++i, c /= n + 1) {
      const int label = c % (n + 1);
      if (label > 0) {
        blocks[label - 1] = blocks[label - 1] | CoordSet(1u << i);
        k = std::max(k, label);
      }
    }
    blocks.resize(k);
    if (std::any_of(blocks.begin(), blocks.end(), [](CoordSet b) { return b.empty(); })) continue;
    for (std::uint32_t base = 0; base < (1u << n); ++base) f(SubcubeDescriptor{Vertex(base), blocks});
  }
}

TEST_CASE("generate subcube examples") {
  CHECK(GenerateSubcube(3, {V({1, 1, 1}), {C({1}), C({2, 3})}}) ==
        VertexSet::Of({V({1, 1, 1}), V({1, -1, -1}), V({-1, 1, 1}), V({-1, -1, -1})}));
  CHECK(GenerateSubcube(3, {V({1, -1, 1}), {}}) == VertexSet::Of({V({1, -1, 1})}));
  CHECK(GenerateSubcube(2, {V({1, 1}), {C({1}), C({2})}}) == VertexSet::Full(2));
  CHECK(ErrorOf([] { GenerateSubcube(3, {V({1, 1, 1}), {C({1, 2}), C({2})}}); }) == ErrorCode::kInvalidDescriptor);
  CHECK(ErrorOf([] { GenerateSubcube(3, {V({1, 1, 1}), {C({1}), CoordSet()}}); }) == ErrorCode::kInvalidDescriptor);
  CHECK(ErrorOf([] { GenerateSubcube(2, {V({1, 1}), {C({3})}}); }) == ErrorCode::kInvalidDescriptor);
}

TEST_CASE("recognize subcube examples") {
  CHECK(RecognizeSubcube(3, VertexSet::Of({V({1, -1, 1})})) == 0);
  // Pairwise-crossing reversal sets: no fourth point.
  const Vertex v = V({1, 1, 1});
  CHECK(!RecognizeSubcube(3, VertexSet::Of({v, Reverse(v, C({1, 2})), Reverse(v, C({2, 3}))})).has_value());
  CHECK(RecognizeSubcube(3, VertexSet::Full(3)) == 3);
  CHECK(!RecognizeSubcube(3, VertexSet::Of({V({1, 1, 1}), V({-1, 1, 1}), V({1, -1, 1}), V({1, 1, -1})})));
}

TEST_CASE("recover descriptor examples") {
  const SubcubeDescriptor full = RecoverDescriptor(3, VertexSet::Full(3));
  CHECK(full.blocks == std::vector<CoordSet>{C({1}), C({2}), C({3})});
  const VertexSet s = VertexSet::Of({V({1, 1, 1}), V({1, -1, -1}), V({-1, 1, 1}), V({-1, -1, -1})});
  const SubcubeDescriptor d = RecoverDescriptor(3, s);
  // The minimum-index vertex of the set is (1,1,1).
  CHECK(d.base == V({1, 1, 1}));
  CHECK(d.blocks == std::vector<CoordSet>{C({1}), C({2, 3})});
  CHECK(ErrorOf([] { RecoverDescriptor(3, VertexSet::Of({Vertex(0), Vertex(1), Vertex(2)})); }) ==
        ErrorCode::kNotASubcube);
}

TEST_CASE("descriptor round trip over every presentation, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    long long count = 0;
    ForEachPresentation(n, [&](const SubcubeDescriptor& d) {
      ++count;
      const VertexSet s = GenerateSubcube(n, d);
      const int k = d.dimension();
      CHECK(s.size() == (1 << k));
      CHECK(oracle::AffineRank(n, s) == k + 1);
      CHECK(RecognizeSubcube(n, s) == k);
      const SubcubeDescriptor canonical = CanonicalDescriptor(n, d);
      CHECK(RecoverDescriptor(n, s) == canonical);
      CHECK(canonical.base == s.min());
      for (std::size_t b = 1; b < canonical.blocks.size(); ++b) {
        CHECK(canonical.blocks[b - 1].min() < canonical.blocks[b].min());
      }
      CHECK(GenerateSubcube(n, canonical) == s);
    });
    CHECK(count > 0);
  }
}

TEST_CASE("subcube recognition over all small subsets agrees with rank, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const int m = 1 << n;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        CHECK(RecognizeSubcube(n, VertexSet::Of({Vertex(a), Vertex(b)})) == 1);
      }
    }
    const std::set<VertexSet> quads = oracle::RankThreeQuadruples(n);
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c < m; ++c) {
          for (int d = c + 1; d < m; ++d) {
            const VertexSet s = VertexSet::Of({Vertex(a), Vertex(b), Vertex(c), Vertex(d)});
            const bool flat = quads.count(s) > 0;
            CHECK(RecognizeSubcube(n, s).has_value() == flat);
            if (flat) CHECK(GenerateSubcube(n, RecoverDescriptor(n, s)) == s);
          }
        }
      }
    }
  }
}

TEST_CASE("every catalog hyperplane of maximum size is an (n-1)-subcube") {
  for (int n = 2; n <= 5; ++n) {
    for (const Hyperplane& h : EnumerateHyperplanes(n).entries) {
      const bool big = h.points.size() == (1 << (n - 1));
      CHECK(RecognizeSubcube(n, h.points).has_value() == big);
      if (big) {
        CHECK(RecognizeSubcube(n, h.points) == n - 1);
        CHECK(GenerateSubcube(n, RecoverDescriptor(n, h.points)) == h.points);
      }
    }
  }
}

TEST_CASE("more than 2^k points force rank at least k+2") {
  // Exhaustive at n = 3.
  for (std::uint64_t bits = 1; bits < 256; ++bits) {
    const VertexSet s = testing::AllSubsetBits(bits);
    const int r = oracle::AffineRank(3, s);
    for (int k = 0; (1 << k) + 1 <= s.size(); ++k) CHECK(r >= k + 2);
  }
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    const VertexSet s = oracle::RandomSubset(4, rng);
    if (s.empty()) continue;
    const int r = AffineRank(4, s);
    for (int k = 0; (1 << k) + 1 <= s.size(); ++k) CHECK(r >= k + 2);
  }
}

TEST_CASE("rectangle enumeration") {
  CHECK(EnumerateRectangles(2).size() == 1);
  CHECK(EnumerateRectangles(3).size() == 12);
  CHECK(EnumerateRectangles(4).size() == 100);
  for (int n = 2; n <= 8; ++n) {
    long long three = 1;
    for (int i = 0; i < n; ++i) three *= 3;
    const long long u = (three - (2LL << n) + 1) / 2;
    CHECK(RectangleCount(n) == static_cast<std::size_t>((1LL << n) * u / 4));
    if (n <= 6) CHECK(EnumerateRectangles(n).size() == RectangleCount(n));
  }
  for (int n = 2; n <= 4; ++n) {
    std::set<VertexSet> mine;
    const std::vector<Rectangle> rects = EnumerateRectangles(n);
    CHECK(std::is_sorted(rects.begin(), rects.end()));
    for (const Rectangle& r : rects) {
      const VertexSet p = r.Points();
      CHECK(p.size() == 4);
      CHECK(r.base == p.min());
      CHECK(r.first.min() < r.second.min());
      CHECK(Rectangle::FromPoints(p) == r);
      mine.insert(p);
    }
    CHECK(mine.size() == rects.size());
    CHECK(mine == oracle::RankThreeQuadruples(n));
  }
  // n = 3: 6 faces and 6 diagonal rectangles.
  int faces = 0;
  for (const Rectangle& r : EnumerateRectangles(3)) faces += r.first.size() == 1 && r.second.size() == 1;
  CHECK(faces == 6);
}

TEST_CASE("rectangle blocks at each corner") {
  const Rectangle r = Rectangle::Make(V({1, 1, 1, 1}), C({1}), C({2, 3}));
  r.Points().ForEach([&](Vertex p) {
    const auto [i, j] = r.BlocksAt(p);
    CHECK(Rectangle::Make(p, i, j) == r);
  });
  CHECK(ErrorOf([&] { r.BlocksAt(V({-1, -1, -1, -1})); }) == ErrorCode::kInvalidArgument);
  CHECK(ErrorOf([] { Rectangle::FromPoints(VertexSet::Of({Vertex(0), Vertex(1), Vertex(2), Vertex(4)})); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("classify triple examples") {
  const Vertex v = V({1, 1, 1});
  TripleClass c = ClassifyTriple(v, Reverse(v, C({1})), Reverse(v, C({2})));
  CHECK(c.tag == TripleTag::kDisjointCompletion);
  CHECK(c.fourth == V({-1, -1, 1}));
  c = ClassifyTriple(v, Reverse(v, C({1})), Reverse(v, C({1, 2})));
  CHECK(c.tag == TripleTag::kNestedCompletion);
  CHECK(c.fourth == V({1, -1, 1}));
  c = ClassifyTriple(v, Reverse(v, C({1, 2})), Reverse(v, C({2, 3})));
  CHECK(c.tag == TripleTag::kNoFourthPoint);
  CHECK(!c.fourth);
  CHECK(ErrorOf([&] { ClassifyTriple(v, v, Reverse(v, C({1}))); }) == ErrorCode::kInvalidTriple);
}

TEST_CASE("classify triple agrees with the affine plane through the triple, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const int m = 1 << n;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        for (int c = 0; c < m; ++c) {
          if (a == b || b == c || a == c) continue;
          const Vertex v(a), v1(b), v2(c);
          const TripleClass got = ClassifyTriple(v, v1, v2);
          const VertexSet plane = oracle::PlanePoints(n, v, v1, v2);
          REQUIRE((plane.size() == 3 || plane.size() == 4));
          CHECK(got.fourth.has_value() == (plane.size() == 4));
          if (got.fourth) CHECK(plane == VertexSet::Of({v, v1, v2, *got.fourth}));
          const CoordSet i = Difference(v, v1);
          const CoordSet j = Difference(v, v2);
          if (i.disjoint(j)) {
            CHECK(got.tag == TripleTag::kDisjointCompletion);
          } else if (i.subset_of(j) || j.subset_of(i)) {
            CHECK(got.tag == TripleTag::kNestedCompletion);
          } else {
            CHECK(got.tag == TripleTag::kNoFourthPoint);
          }
        }
      }
    }
  }
}

TEST_CASE("eliminate rectangles examples") {
  const Vertex v = V({1, 1, 1});
  const Rectangle r = EliminateRectangles(Rectangle::Make(v, C({1}), C({2})), Rectangle::Make(v, C({1}), C({3})), v);
  CHECK(r == Rectangle::Make(V({1, -1, 1}), C({1}), C({2, 3})));
  const Vertex w = V({1, 1, 1, 1});
  const Rectangle r2 =
      EliminateRectangles(Rectangle::Make(w, C({1, 2}), C({3})), Rectangle::Make(w, C({1}), C({2, 3})), w);
  CHECK(r2.Points() == Rectangle::Make(V({-1, 1, 1, 1}), C({2}), C({1, 3})).Points());
  CHECK(ErrorOf([&] {
          EliminateRectangles(Rectangle::Make(w, C({1}), C({2})), Rectangle::Make(w, C({3}), C({4})), w);
        }) == ErrorCode::kNotAModularPair);
  CHECK(ErrorOf([&] {
          EliminateRectangles(Rectangle::Make(w, C({1}), C({2})), Rectangle::Make(w, C({1}), C({3})), V({-1, -1, -1, -1}));
        }) == ErrorCode::kNotAModularPair);
}

TEST_CASE("eliminated rectangle is the unique circuit in the union minus the pivot") {
  for (int n = 3; n <= 4; ++n) {
    for (std::uint32_t base = 0; base < (1u << n); ++base) {
      const Vertex v(base);
      // Disjoint nonempty I, J, K by labelling coordinates 0..3 (0 unused).
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 4;
      for (int code = 0; code < total; ++code) {
        CoordSet blk[4];
        int c = code;
        for (int i = 0; i < n; ++i, c /= 4) blk[c % 4] = blk[c % 4] | CoordSet(1u << i);
        const CoordSet i = blk[1], j = blk[2], k = blk[3];
        if (i.empty() || j.empty() || k.empty()) continue;
        const std::pair<Rectangle, Rectangle> pairs[2] = {
            {Rectangle::Make(v, i, j), Rectangle::Make(v, i, k)},
            {Rectangle::Make(v, i | j, k), Rectangle::Make(v, i, j | k)}};
        for (const auto& [r1, r2] : pairs) {
          const Rectangle got = EliminateRectangles(r1, r2, v);
          VertexSet pool = r1.Points() | r2.Points();
          pool.erase(v);
          CHECK(got.Points().subset_of(pool));
          int circuits = 0;
          const std::vector<Vertex> pts = pool.Elements();
          for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
              for (std::size_t c2 = b + 1; c2 < pts.size(); ++c2)
                for (std::size_t d = c2 + 1; d < pts.size(); ++d)
                  circuits += oracle::AffineRank(n, {pts[a], pts[b], pts[c2], pts[d]}) == 3;
          CHECK(circuits == 1);
        }
      }
    }
  }
}

}  // namespace
}  // namespace cube_om
