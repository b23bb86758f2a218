#pragma once

#include <vector>

#include "plie/bialgebra.hpp"
#include "plie/lie_algebra.hpp"
#include "plie/linalg.hpp"

namespace plie {

// Symmetric positive-definite rational Gram matrix.
struct InnerProduct {
  Matrix gram;

  int dim() const { return gram.rows(); }
};

bool is_symmetric(const Matrix& a);
// Exact Sylvester test: all leading principal minors positive.
bool is_positive_definite(const Matrix& a);
// Throws InputError unless gram is square, symmetric and positive definite.
InnerProduct make_inner_product(const Matrix& gram);
// Inverse Gram matrix, the metric induced on the dual space.
InnerProduct dual_metric(const InnerProduct& m);

Scalar inner(const InnerProduct& m, const Vec& x, const Vec& y);

// ad_x^t = G^{-1} ad_x^T G.
Matrix ad_transpose(const LieAlgebra& L, const InnerProduct& m, const Vec& x);

// S = {x : ad_x + ad_x^t = 0}, the exact kernel of the flattened n^2-row
// linear system.
Subspace s_subalgebra(const LieAlgebra& L, const InnerProduct& m);

struct MilnorDecomposition {
  Subspace S;
  Subspace derived;
  bool s_abelian = false;
  bool derived_abelian = false;
  bool orthogonal_complement_match = false;  // S-perp equals derived
  bool is_milnor = false;
};

MilnorDecomposition milnor_check(const LieAlgebra& L, const InnerProduct& m);

// Floating-point presentation layer: simultaneous block rotation form of the
// S-action on the derived ideal. Everything else in this module is exact.
struct NormalForm {
  int p = 0;    // dim S
  int r = 0;    // half the derived dimension
  int ell = 0;  // rank of the frequency matrix
  std::vector<std::vector<double>> e_basis;        // p rows, ambient coords
  std::vector<std::vector<double>> f_basis;        // 2r rows, ambient coords
  std::vector<std::vector<double>> lambda_matrix;  // p x r rates
  double tolerance = 0.0;
  double residual = 0.0;  // max reconstruction error
};

// Requires milnor_check to pass (NotMilnorError otherwise); throws
// FailedToConvergeError with the residual when no block frame meets tol.
// Reconstruction contract: [e_i, f_{2j-1}] ~ lambda_ij f_{2j} and
// [e_i, f_{2j}] ~ -lambda_ij f_{2j-1} within tol.
NormalForm milnor_normal_form(const LieAlgebra& L, const InnerProduct& m,
                              double tol = 1e-9);

// Contravariant Levi-Civita product for invariant data, determined by
// 2<D_x y, z> = <[x,y],z> + <[z,x],y> + <[z,y],x>.
struct LCProduct {
  int dim = 0;
  std::vector<std::vector<Vec>> table;  // table[i][j] = D_{e_{i+1}} e_{j+1}
};

LCProduct lc_product(const LieAlgebra& L, const InnerProduct& m);
Vec lc_apply(const LCProduct& D, const Vec& x, const Vec& y);

// R(x,y)z = D_{[x,y]} z - (D_x D_y z - D_y D_x z).
Vec curvature(const LCProduct& D, const LieAlgebra& L, const Vec& x,
              const Vec& y, const Vec& z);
bool is_flat(const LCProduct& D, const LieAlgebra& L);

// Metacurvature in the flat invariant case, M(a,b,g) = ad2_a ad2_b rho(g)
// for a, b, g in S. Refuses non-Milnor inputs (the closed form is only
// valid there) and arguments outside S.
MultiVector metacurvature(const LieAlgebra& L_dual, const InnerProduct& m_dual,
                          const Cocycle& rho, const Vec& alpha, const Vec& beta,
                          const Vec& gamma);

// Independent route through parallel forms: M = -D_a D_b (d g) with d = -rho
// and D extended as a derivation to degree 2. Agrees bit-exactly with the
// closed form.
MultiVector metacurvature_via_parallel(const LieAlgebra& L_dual,
                                       const InnerProduct& m_dual,
                                       const Cocycle& rho, const Vec& alpha,
                                       const Vec& beta, const Vec& gamma);

// True iff the metacurvature vanishes on a basis of S (cubed); mixed and
// derived-ideal arguments vanish identically in the flat case.
bool metaflat_check(const LieAlgebra& L_dual, const InnerProduct& m_dual,
                    const Cocycle& rho);

}  // namespace plie
