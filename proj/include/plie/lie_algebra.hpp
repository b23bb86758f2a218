#pragma once

#include <string>
#include <vector>

#include "plie/linalg.hpp"
#include "plie/multivector.hpp"

namespace plie {

// Lie algebra by structure constants, [e_i, e_j] = sum_k c_ij^k e_k.
// Antisymmetry of the table is maintained by set_bracket/add_bracket_term;
// the Jacobi identity is never assumed, callers test jacobi_defect.
struct LieAlgebra {
  int dim = 0;
  Space space = Space::Primal;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<Vec>> c;  // c[i][j] = coords of [e_{i+1}, e_{j+1}]

  static LieAlgebra abelian(int dim, Space space = Space::Primal,
                            std::vector<std::string> labels = {});

  // 1-based indices; writes both (i,j) and (j,i).
  void set_bracket(int i, int j, const Vec& value);
  void add_bracket_term(int i, int j, int k, const Scalar& coeff);

  const Vec& bracket_basis(int i, int j) const;  // 1-based
  Vec bracket(const Vec& x, const Vec& y) const;
};

bool antisymmetry_ok(const LieAlgebra& L);

// Matrix of y -> [x, y] in the given basis.
Matrix ad(const LieAlgebra& L, const Vec& x);
Matrix ad_basis(const LieAlgebra& L, int i);  // ad(e_i), 1-based

struct JacobiDefect {
  int i, j, k;  // 1-based, i < j < k
  Vec defect;   // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};
std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& L);
bool is_lie_algebra(const LieAlgebra& L);

Subspace derived_ideal(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);

// kappa(x) = tr ad_x, as a covector on the opposite side.
MultiVector modular_form(const LieAlgebra& L);
bool is_unimodular(const LieAlgebra& L);

// Algebraic Schouten bracket of primal multivectors over L, computed by
// graded Leibniz expansion. Degrees p, q >= 0, result degree p + q - 1.
MultiVector schouten(const LieAlgebra& L, const MultiVector& P,
                     const MultiVector& Q);

// Chevalley-Eilenberg differential with trivial coefficients on forms over L:
// (d w)(x_0..x_k) = sum_{i<j} (-1)^{i+j} w([x_i,x_j], x_0..^i..^j..x_k).
MultiVector ce_differential(const LieAlgebra& L, const MultiVector& omega);

}  // namespace plie
