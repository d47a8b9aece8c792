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

#ifndef CUBE_OM_TESTS_TEST_UTIL_HPP_
#define CUBE_OM_TESTS_TEST_UTIL_HPP_

#include <optional>

#include "cube_om/core.hpp"

namespace cube_om::testing {

// The error code thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<ErrorCode> ErrorOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Vertex V(std::initializer_list<int> coords) { return Vertex::FromCoords(coords); }

inline VertexSet AllSubsetBits(std::uint64_t bits) {
  VertexSet s;
  s.words()[0] = bits;
  return s;
}

}  // namespace cube_om::testing

#endif  // CUBE_OM_TESTS_TEST_UTIL_HPP_
