#pragma once

#include <map>
#include <string>
#include <vector>

#include "plie/linalg.hpp"
#include "plie/scalar.hpp"

namespace plie {

// A multivector lives either on the base space or on its dual; pairings and
// interior products are the only operations allowed to mix the two sides.
enum class Space { Primal, Dual };
Space opposite(Space s);

// Strictly increasing tuple of 1-based basis indices.
using IndexTuple = std::vector<int>;

// Exact element of the k-th exterior power of an n-dimensional based space.
// Keys are strictly increasing tuples; zero coefficients are never stored.
class MultiVector {
 public:
  MultiVector() = default;
  MultiVector(int dim, int degree, Space space);

  // e_{i1} ^ ... ^ e_{ik} for an arbitrary index tuple (canonical sign).
  static MultiVector basis(int dim, Space space, const IndexTuple& indices);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  Space space() const { return space_; }
  const std::map<IndexTuple, Scalar>& coords() const { return coords_; }

  bool is_zero() const { return coords_.empty(); }
  // Coefficient on a strictly increasing tuple (0 when absent).
  Scalar coeff(const IndexTuple& key) const;
  // Coefficient on an arbitrary tuple, with the permutation sign applied.
  Scalar component(const IndexTuple& indices) const;

  // Adds c on an arbitrary tuple after canonical sorting; repeated indices
  // contribute nothing, coefficients that cancel are dropped.
  MultiVector& add_term(const IndexTuple& indices, const Scalar& c);

  bool operator==(const MultiVector&) const = default;
  MultiVector operator-() const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  Space space_ = Space::Primal;
  std::map<IndexTuple, Scalar> coords_;
};

MultiVector operator+(const MultiVector& a, const MultiVector& b);
MultiVector operator-(const MultiVector& a, const MultiVector& b);
MultiVector operator*(const Scalar& c, const MultiVector& a);

// Degree-1 conversions.
MultiVector vec_to_mv(const Vec& v, Space space);
Vec mv_to_vec(const MultiVector& m);

// Exterior product. Same dimension and tag required, p + q <= dim.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

// <a1^...^ak, x1^...^xk> = det[ai(xj)], no factorial normalization.
// omega must be dual-tagged, a primal-tagged, equal degree and dimension.
Scalar pairing(const MultiVector& omega, const MultiVector& a);

// Interior product i_x omega, convention (i_{x^y} omega)(...) = omega(x,y,...).
// x and omega carry opposite tags; the result lives on omega's side.
MultiVector interior(const MultiVector& x, const MultiVector& omega);

// Derivation extension A^{(k)}(v1^...^vk) = sum_i v1^...^(A vi)^...^vk.
MultiVector extend_derivation(const Matrix& a, int k, const MultiVector& m);

// "2 e1^e3 - 1/2 e2^e4", dual tags render with a star suffix. Labels, when
// given, replace the default e1..en names.
std::string to_string(const MultiVector& m,
                      const std::vector<std::string>& labels = {});

}  // namespace plie
