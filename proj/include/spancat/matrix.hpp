#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spancat/errors.hpp"

namespace spancat {

// Hom-set matrices of the (effective) Burnside category.  A morphism from a
// set of size `rows` to a set of size `cols` is a rows x cols matrix; the
// entry at (x, y) counts the apex fiber over the pair.  Composition in
// diagram order is ordinary matrix multiplication contracting the middle
// index.  NatMatrix entries are nonnegative; IntMatrix entries are arbitrary.
template <class Tag>
struct BasicMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> entries;  // row-major, size rows*cols

  BasicMatrix() = default;
  BasicMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

  static BasicMatrix identity(int n) {
    BasicMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static BasicMatrix zero(int r, int c) { return BasicMatrix(r, c); }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;
  friend bool operator<(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    return a.entries < b.entries;
  }
};

struct NatTag {};
struct IntTag {};

using NatMatrix = BasicMatrix<NatTag>;
using IntMatrix = BasicMatrix<IntTag>;

template <class Tag>
BasicMatrix<Tag> mat_mul(const BasicMatrix<Tag>& a, const BasicMatrix<Tag>& b) {
  if (a.cols != b.rows)
    throw ShapeMismatch("matrix product shape mismatch: " + std::to_string(a.cols) +
                        " != " + std::to_string(b.rows));
  BasicMatrix<Tag> r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const long long v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += v * b.at(k, j);
    }
  return r;
}

template <class Tag>
BasicMatrix<Tag> mat_add(const BasicMatrix<Tag>& a, const BasicMatrix<Tag>& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatch("matrix sum shape mismatch");
  BasicMatrix<Tag> r = a;
  for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

IntMatrix to_int(const NatMatrix& a);

// a - b entrywise.
IntMatrix mat_sub(const NatMatrix& a, const NatMatrix& b);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);

// Determinant by fraction-free (Bareiss) elimination; exact over the integers.
long long determinant(const IntMatrix& m);

// Two-sided integer inverse, when the matrix is square with det = +-1.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

}  // namespace spancat
