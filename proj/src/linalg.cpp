#include "plie/linalg.hpp"

#include <algorithm>

#include "plie/errors.hpp"

namespace plie {

namespace {

void check_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("vector sizes differ");
}

}  // namespace

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Scalar(0)); }

Vec basis_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[static_cast<size_t>(i - 1)] = 1;
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& x) { return x == 0; });
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar(0)) {
  if (rows < 0 || cols < 0) throw DimensionMismatchError("negative size");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatchError("matrix sizes differ");
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatchError("matrix sizes differ");
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatchError("matrix product shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw DimensionMismatchError("matrix-vector shape mismatch");
  Vec r = zero_vec(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) r[i] += a(i, j) * v[j];
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

bool is_zero(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

Scalar determinant(Matrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatchError("determinant of non-square matrix");
  const int n = a.rows();
  Scalar det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int row = col + 1; row < n; ++row) {
      if (a(row, col) == 0) continue;
      Scalar f = a(row, col) / a(col, col);
      for (int j = col; j < n; ++j) a(row, j) -= f * a(col, j);
    }
  }
  return det;
}

namespace {

// Gauss-Jordan elimination in place; returns the pivot columns.
std::vector<int> eliminate(Matrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int r = row; r < a.rows(); ++r)
      if (a(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Scalar inv = Scalar(1) / a(row, col);
    for (int j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Scalar f = a(r, col);
      for (int j = 0; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatchError("inverse of non-square matrix");
  const int n = a.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = eliminate(aug);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

int rank(Matrix a) { return static_cast<int>(eliminate(a).size()); }

Matrix rref(Matrix a) {
  eliminate(a);
  return a;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
  Matrix r = a;
  auto pivots = eliminate(r);
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = zero_vec(a.cols());
    v[static_cast<size_t>(free)] = 1;
    for (size_t prow = 0; prow < pivots.size(); ++prow)
      v[static_cast<size_t>(pivots[prow])] = -r(static_cast<int>(prow), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw DimensionMismatchError("solve shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  auto pivots = eliminate(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.cols());
  for (size_t prow = 0; prow < pivots.size(); ++prow)
    x[static_cast<size_t>(pivots[prow])] = aug(static_cast<int>(prow), a.cols());
  return x;
}

Subspace make_subspace(int ambient_dim, const std::vector<Vec>& generators) {
  for (const Vec& g : generators)
    if (static_cast<int>(g.size()) != ambient_dim)
      throw DimensionMismatchError("generator has wrong ambient dimension");
  Matrix m(static_cast<int>(generators.size()), ambient_dim);
  for (size_t i = 0; i < generators.size(); ++i)
    for (int j = 0; j < ambient_dim; ++j)
      m(static_cast<int>(i), j) = generators[i][static_cast<size_t>(j)];
  auto pivots = eliminate(m);
  Subspace s;
  s.ambient_dim = ambient_dim;
  for (size_t row = 0; row < pivots.size(); ++row) {
    Vec v(static_cast<size_t>(ambient_dim));
    for (int j = 0; j < ambient_dim; ++j) v[static_cast<size_t>(j)] = m(static_cast<int>(row), j);
    s.basis.push_back(std::move(v));
  }
  return s;
}

bool contains(const Subspace& s, const Vec& v) {
  if (static_cast<int>(v.size()) != s.ambient_dim)
    throw DimensionMismatchError("vector has wrong ambient dimension");
  // Reduce v against the rref basis rows.
  Vec w = v;
  for (const Vec& b : s.basis) {
    int lead = -1;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0) continue;
    if (w[static_cast<size_t>(lead)] != 0) w = w - w[static_cast<size_t>(lead)] * b;
  }
  return is_zero(w);
}

Subspace orthogonal_complement(const Subspace& s, const Matrix& gram) {
  if (gram.rows() != s.ambient_dim || gram.cols() != s.ambient_dim)
    throw DimensionMismatchError("gram matrix has wrong size");
  Matrix constraints(s.dim(), s.ambient_dim);
  for (int i = 0; i < s.dim(); ++i) {
    Vec row = transpose(gram) * s.basis[static_cast<size_t>(i)];
    for (int j = 0; j < s.ambient_dim; ++j) constraints(i, j) = row[static_cast<size_t>(j)];
  }
  return make_subspace(s.ambient_dim, kernel_basis(constraints));
}

}  // namespace plie
