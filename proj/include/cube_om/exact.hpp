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

#ifndef CUBE_OM_EXACT_HPP_
#define CUBE_OM_EXACT_HPP_

// Fraction-free integer linear algebra. Every routine runs in checked 64-bit
// arithmetic first and reruns in checked 128-bit arithmetic if any
// intermediate overflows; a 128-bit overflow throws ErrorCode::kOverflow.

#include <cstdint>
#include <vector>

namespace cube_om::exact {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  void AppendRow(const std::vector<std::int64_t>& row);
  IntMatrix WithoutColumn(int col) const;
  IntMatrix SelectRows(const std::vector<int>& rows) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Rank over the rationals (Bareiss elimination with row pivoting).
int Rank(const IntMatrix& m);

// Indices of a maximal set of linearly independent rows, greedily in order.
std::vector<int> IndependentRows(const IntMatrix& m);

// Determinant of a square matrix; throws kOverflow if it does not fit in 64 bits.
std::int64_t Determinant(const IntMatrix& m);

// For a k x (k+1) matrix, the vector of signed maximal minors
// x_j = (-1)^j det(m without column j). It spans the kernel when rank(m) = k
// and is zero otherwise.
std::vector<std::int64_t> CofactorKernel(const IntMatrix& m);

// Divides by the gcd of all entries (no-op on the zero vector).
void MakePrimitive(std::vector<std::int64_t>& v);

}  // namespace cube_om::exact

#endif  // CUBE_OM_EXACT_HPP_
