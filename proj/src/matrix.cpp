#include "spancat/matrix.hpp"

namespace spancat {

IntMatrix to_int(const NatMatrix& a) {
  IntMatrix r(a.rows, a.cols);
  r.entries = a.entries;
  return r;
}

IntMatrix mat_sub(const NatMatrix& a, const NatMatrix& b) {
  return mat_sub(to_int(a), to_int(b));
}

IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatch("matrix difference shape mismatch");
  IntMatrix r = a;
  for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
  return r;
}

long long determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw ShapeMismatch("determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

IntMatrix minor_of(const IntMatrix& m, int row, int col) {
  IntMatrix r(m.rows - 1, m.cols - 1);
  for (int i = 0, ri = 0; i < m.rows; ++i) {
    if (i == row) continue;
    for (int j = 0, rj = 0; j < m.cols; ++j) {
      if (j == col) continue;
      r.at(ri, rj) = m.at(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

}  // namespace

std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  const long long det = determinant(m);
  if (det != 1 && det != -1) return std::nullopt;
  const int n = m.rows;
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const long long cof = determinant(minor_of(m, i, j));
      inv.at(j, i) = (((i + j) % 2 == 0) ? cof : -cof) * det;
    }
  return inv;
}

}  // namespace spancat
