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

#include "cube_om/exact.hpp"

#include <limits>
#include <numeric>
#include <optional>
#include <utility>

#include "cube_om/core.hpp"

namespace cube_om::exact {
namespace {

using Wide = __int128;

template <typename T>
bool MulSub(T a, T b, T c, T d, T& out) {
  // out = a*b - c*d, false on overflow.
  T ab, cd;
  if (__builtin_mul_overflow(a, b, &ab)) return false;
  if (__builtin_mul_overflow(c, d, &cd)) return false;
  return !__builtin_sub_overflow(ab, cd, &out);
}

template <typename T>
struct Elimination {
  int rank = 0;
  bool negate = false;
  std::vector<int> pivot_rows;  // original row index of each pivot
  std::vector<T> a;
};

// Fraction-free Gaussian elimination (Bareiss). Returns nullopt on overflow.
// After the pass, a[r][c] for the last pivot is the leading principal minor
// when the matrix is square and nonsingular.
template <typename T>
std::optional<Elimination<T>> Bareiss(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  Elimination<T> e;
  e.a.assign(m.data().begin(), m.data().end());
  std::vector<int> order(rows);
  std::iota(order.begin(), order.end(), 0);
  auto at = [&](int r, int c) -> T& { return e.a[static_cast<std::size_t>(r) * cols + c]; };
  T prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      std::swap(order[p], order[r]);
      e.negate = !e.negate;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        T v;
        if (!MulSub(at(r, c), at(i, j), at(i, c), at(r, j), v)) return std::nullopt;
        at(i, j) = v / prev;
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    e.pivot_rows.push_back(order[r]);
    ++r;
  }
  e.rank = r;
  return e;
}

template <typename F>
auto WithEscalation(const IntMatrix& m, F&& f) {
  if (auto e = Bareiss<std::int64_t>(m)) return f(*e);
  if (auto e = Bareiss<Wide>(m)) return f(*e);
  throw Error(ErrorCode::kOverflow, "integer elimination overflowed 128-bit arithmetic");
}

}  // namespace

void IntMatrix::AppendRow(const std::vector<std::int64_t>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) {
    throw Error(ErrorCode::kInvalidArgument, "row length mismatch");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::WithoutColumn(int col) const {
  IntMatrix out(rows_, cols_ - 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0, k = 0; c < cols_; ++c) {
      if (c != col) out(r, k++) = (*this)(r, c);
    }
  }
  return out;
}

IntMatrix IntMatrix::SelectRows(const std::vector<int>& rows) const {
  IntMatrix out(static_cast<int>(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int c = 0; c < cols_; ++c) out(static_cast<int>(i), c) = (*this)(rows[i], c);
  }
  return out;
}

int Rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return WithEscalation(m, [](const auto& e) { return e.rank; });
}

std::vector<int> IndependentRows(const IntMatrix& m) {
  // Row pivoting may reorder rows, so grow the selection greedily instead.
  std::vector<int> chosen;
  IntMatrix acc(0, m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    IntMatrix trial = acc;
    std::vector<std::int64_t> row(m.cols());
    for (int c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    trial.AppendRow(row);
    if (Rank(trial) == trial.rows()) {
      acc = std::move(trial);
      chosen.push_back(r);
      if (static_cast<int>(chosen.size()) == m.cols()) break;
    }
  }
  return chosen;
}

std::int64_t Determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  return WithEscalation(m, [n](const auto& e) -> std::int64_t {
    if (e.rank < n) return 0;
    auto det = e.a[static_cast<std::size_t>(n - 1) * n + (n - 1)];
    if (e.negate) det = -det;
    if (det > std::numeric_limits<std::int64_t>::max() || det < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::kOverflow, "determinant exceeds 64 bits");
    }
    return static_cast<std::int64_t>(det);
  });
}

std::vector<std::int64_t> CofactorKernel(const IntMatrix& m) {
  if (m.cols() != m.rows() + 1) throw Error(ErrorCode::kInvalidArgument, "cofactor kernel needs a k x (k+1) matrix");
  std::vector<std::int64_t> x(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    std::int64_t d = Determinant(m.WithoutColumn(j));
    x[j] = (j % 2 == 0) ? d : -d;
  }
  return x;
}

void MakePrimitive(std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

}  // namespace cube_om::exact
