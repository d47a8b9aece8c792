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

#ifndef CUBE_OM_CORE_HPP_
#define CUBE_OM_CORE_HPP_

// Ground-set primitives for the vertex set {-1,1}^n of the n-cube.
//
// Conventions used throughout the library:
//  * Coordinates are 0-based internally (coordinate i is bit i). Anything
//    user-facing (CLI, printed descriptors) is 1-based.
//  * Bit i of a vertex word is set iff coordinate i equals -1, so the vertex
//    (1,...,1) has index 0 and reversing signs on a coordinate set is an XOR.
//  * Vertex sets are fixed 256-bit sets; n is capped at kMaxDim = 8.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cube_om {

inline constexpr int kMaxDim = 8;

enum class ErrorCode {
  kInvalidArgument,
  kCapExceeded,
  kInvalidDescriptor,
  kNotASubcube,
  kInvalidTriple,
  kNotAModularPair,
  kNotACircuit,
  kCacheMismatch,
  kMalformedFile,
  kInconsistentCatalog,
  kNotAnOrientation,
  kNotNormalizable,
  kOverflow,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Throws kCapExceeded unless lo <= n <= hi.
void CheckDim(int n, int lo = 1, int hi = kMaxDim);

// Subset of the coordinate indices {0,...,n-1}.
struct CoordSet {
  std::uint32_t mask = 0;

  constexpr CoordSet() = default;
  constexpr explicit CoordSet(std::uint32_t m) : mask(m) {}
  static CoordSet Of(std::initializer_list<int> coords);
  static constexpr CoordSet Full(int n) { return CoordSet((1u << n) - 1u); }

  constexpr bool empty() const { return mask == 0; }
  constexpr int size() const { return std::popcount(mask); }
  constexpr bool contains(int i) const { return (mask >> i) & 1u; }
  // Smallest coordinate in the set; -1 when empty.
  constexpr int min() const { return mask ? std::countr_zero(mask) : -1; }
  constexpr bool subset_of(CoordSet o) const { return (mask & ~o.mask) == 0; }
  constexpr bool disjoint(CoordSet o) const { return (mask & o.mask) == 0; }

  friend constexpr CoordSet operator|(CoordSet a, CoordSet b) { return CoordSet(a.mask | b.mask); }
  friend constexpr CoordSet operator&(CoordSet a, CoordSet b) { return CoordSet(a.mask & b.mask); }
  friend constexpr CoordSet operator^(CoordSet a, CoordSet b) { return CoordSet(a.mask ^ b.mask); }
  // Set difference a \ b.
  friend constexpr CoordSet operator-(CoordSet a, CoordSet b) { return CoordSet(a.mask & ~b.mask); }
  friend constexpr auto operator<=>(CoordSet, CoordSet) = default;

  // 1-based rendering, e.g. "{1,3}".
  std::string ToString() const;
};

// A vertex of the n-cube packed as an n-bit word.
struct Vertex {
  std::uint32_t word = 0;

  constexpr Vertex() = default;
  constexpr explicit Vertex(std::uint32_t w) : word(w) {}
  // coords must be a sequence of +1/-1 entries.
  static Vertex FromCoords(std::span<const int> coords);
  static Vertex FromCoords(std::initializer_list<int> coords) {
    return FromCoords(std::span<const int>(coords.begin(), coords.size()));
  }

  constexpr int index() const { return static_cast<int>(word); }
  constexpr int coord(int i) const { return ((word >> i) & 1u) ? -1 : 1; }
  std::vector<int> Coords(int n) const;
  std::string ToString(int n) const;

  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

// Sign reversal on the coordinates in `coords`.
constexpr Vertex Reverse(Vertex v, CoordSet coords) { return Vertex(v.word ^ coords.mask); }

// The coordinates on which two vertices differ: b = Reverse(a, Difference(a, b)).
constexpr CoordSet Difference(Vertex a, Vertex b) { return CoordSet(a.word ^ b.word); }

// v(I): the integer vector equal to v on I and 0 elsewhere.
std::vector<int> Restrict(Vertex v, CoordSet coords, int n);

// A subset of C^n stored as a 256-bit set indexed by vertex word.
class VertexSet {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = 64 * kWords;

  constexpr VertexSet() = default;
  static VertexSet Of(std::initializer_list<Vertex> vertices);
  static VertexSet Of(std::span<const Vertex> vertices);
  // All 2^n vertices.
  static VertexSet Full(int n);

  bool contains(Vertex v) const { return (words_[v.word >> 6] >> (v.word & 63)) & 1u; }
  void insert(Vertex v) { words_[v.word >> 6] |= std::uint64_t{1} << (v.word & 63); }
  void erase(Vertex v) { words_[v.word >> 6] &= ~(std::uint64_t{1} << (v.word & 63)); }

  int size() const;
  bool empty() const;
  // Smallest vertex; undefined on the empty set.
  Vertex min() const;
  bool subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  // C^n \ *this.
  VertexSet Complement(int n) const;

  template <typename F>
  void ForEach(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(Vertex(static_cast<std::uint32_t>(64 * w + b)));
        bits &= bits - 1;
      }
    }
  }
  std::vector<Vertex> Elements() const;

  const std::array<std::uint64_t, kWords>& words() const { return words_; }
  std::array<std::uint64_t, kWords>& words() { return words_; }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Ordered by the bit words read as one big little-endian integer.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  // Lowercase hex of the 2^n-bit set, one byte per two digits, byte k holding
  // vertices 8k..8k+7 with vertex 8k in the least significant bit. Sets of
  // fewer than 8 vertices still occupy one byte.
  std::string ToHex(int n) const;
  // Inverse of ToHex; throws kMalformedFile on bad length, digits, or bits
  // beyond 2^n.
  static VertexSet FromHex(std::string_view hex, int n);
  std::string ToString(int n) const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const;
};

// Ordered pair of disjoint vertex sets (positive, negative).
struct SignedSet {
  VertexSet positive;
  VertexSet negative;

  VertexSet support() const { return positive | negative; }
  bool valid() const { return !positive.intersects(negative); }
  bool empty() const { return positive.empty() && negative.empty(); }
  SignedSet Negated() const { return {negative, positive}; }
  // Representative of {S, -S} whose minimum support element is positive.
  SignedSet Canonical() const;
  bool IsCanonical() const;
  // +1, -1, or 0 when v is outside the support.
  int sign(Vertex v) const;
  // Entirely on one side (positive or negative).
  bool pure() const { return positive.empty() != negative.empty(); }

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
  friend std::strong_ordering operator<=>(const SignedSet& a, const SignedSet& b);

  std::string ToString(int n) const;
};

// Elements of `flip` change sides; the support is unchanged.
SignedSet Reorient(const SignedSet& s, const VertexSet& flip);

// Orthogonality of signed sets: the agreement set is nonempty exactly when
// the disagreement set is nonempty.
bool Orthogonal(const SignedSet& x, const SignedSet& y);

}  // namespace cube_om

#endif  // CUBE_OM_CORE_HPP_
