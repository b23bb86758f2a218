#pragma once

#include <map>
#include <optional>
#include <string>

#include "plie/bialgebra.hpp"
#include "plie/metric.hpp"

namespace plie {

enum class StrongVerdict { Yes, NecessaryConditionsHoldOnly, No };
std::string to_string(StrongVerdict v);

struct HawkinsReport {
  bool jacobi_ok = false;
  bool cocycle_ok = false;
  bool dual_jacobi_ok = false;
  bool flat = false;
  bool metaflat = false;
  bool g_unimodular = false;
  bool dual_unimodular = false;
  bool modular_condition = false;
  bool compatible = false;  // flat and metaflat
  StrongVerdict strongly_compatible = StrongVerdict::No;

  // Human-readable failure witnesses keyed by flag name.
  std::map<std::string, std::string> witnesses;
  // Exact modular witness: first basis index i with d(i_{xi(e_i)} mu) != 0
  // and the value written on the rho-extension side (rho_ext = -d).
  int modular_witness_index = 0;  // 1-based, 0 when the condition holds
  std::optional<MultiVector> modular_witness;
};

struct ModularResult {
  bool holds = false;
  int witness_index = 0;
  std::optional<MultiVector> witness;
};

// The volume form is the unscaled wedge of the dual basis: the condition's
// zero set is invariant under rescaling mu, so no orthonormal frame (and no
// irrational arithmetic) is needed. The metric argument is kept for interface
// symmetry and validated only.
ModularResult modular_condition(const LieBialgebra& B, const InnerProduct& m);

// Full analysis. Validates dimensions and the metric first (InputError),
// then fills every flag. Geometric flags are computed only when the
// bialgebra axioms hold; otherwise they are false with an explanatory
// witness. flat is computed along two independent paths (Milnor predicate
// and curvature of the dual Levi-Civita product) which must agree.
HawkinsReport analyze(const LieAlgebra& L, const Cocycle& xi,
                      const InnerProduct& m);
HawkinsReport analyze(const LieBialgebra& B, const InnerProduct& m);

// Heisenberg layer. Basis convention x1, y1, ..., xn, yn, z with
// [x_i, y_i] = z; the symplectic form omega is read off the brackets.
LieAlgebra heisenberg_algebra(int n);
// xi(u) = z ^ J u. J must be antisymmetric wrt m with J z = 0 (InputError).
LieBialgebra heisenberg_build(int n, const Matrix& J, const InnerProduct& m);

struct HeisenbergCondition {
  bool holds = false;
  int witness_i = 0, witness_j = 0;  // 1-based basis pair, 0 when it holds
  Scalar witness_value = 0;
};

// omega(J^2 u, v) + omega(u, J^2 v) + 2 omega(Ju, Jv) = 0 on basis pairs.
HeisenbergCondition heisenberg_condition(int n, const Matrix& J,
                                         const InnerProduct& m);

// Triangular structure r on a compact semisimple algebra with bi-invariant
// metric: deformability reduces to [r, r] = 0. Checks ad-invariance of m.
bool triangular_analysis(const LieAlgebra& L, const InnerProduct& m,
                         const MultiVector& r);

// Linear Poisson structure of L: the bialgebra with abelian primal, cocycle
// transposed from L's bracket and primal metric m^{-1} (so the dual metric
// is m). Returns the analyze verdict, asserted equal to milnor_check(L, m).
bool linear_case(const LieAlgebra& L, const InnerProduct& m);

}  // namespace plie
