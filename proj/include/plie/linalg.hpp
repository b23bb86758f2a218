#pragma once

#include <optional>
#include <vector>

#include "plie/scalar.hpp"

namespace plie {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n);
Vec basis_vec(int n, int i);  // 1-based standard basis vector
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);

// Dense exact-rational matrix, 0-based indexing.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return data_[i * cols_ + j]; }
  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);
Vec operator*(const Matrix& a, const Vec& v);
Matrix transpose(const Matrix& a);
bool is_zero(const Matrix& a);

Scalar determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);
int rank(Matrix a);

// Reduced row echelon form; pivots scaled to 1, zero rows kept in place.
Matrix rref(Matrix a);

// Canonical basis of the null space of a (from the rref free columns).
std::vector<Vec> kernel_basis(const Matrix& a);

// One solution of a x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Rational subspace of an ambient coordinate space. The basis rows are kept
// in reduced row echelon form with zero rows dropped, so equal subspaces
// compare equal componentwise.
struct Subspace {
  int ambient_dim = 0;
  std::vector<Vec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Subspace&) const = default;
};

Subspace make_subspace(int ambient_dim, const std::vector<Vec>& generators);
bool contains(const Subspace& s, const Vec& v);
// {v : <b, v>_gram = 0 for every basis row b}.
Subspace orthogonal_complement(const Subspace& s, const Matrix& gram);

}  // namespace plie
