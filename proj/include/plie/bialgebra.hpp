#pragma once

#include <string>
#include <vector>

#include "plie/lie_algebra.hpp"
#include "plie/multivector.hpp"

namespace plie {

// Linear map into the second exterior power, given on basis vectors.
// base is the algebra whose adjoint action the cocycle condition refers to;
// images[i] lives on base's side of the duality.
struct Cocycle {
  LieAlgebra base;
  std::vector<MultiVector> images;

  static Cocycle zero(const LieAlgebra& base);
  // xi(x) for arbitrary coordinates x.
  MultiVector apply(const Vec& x) const;
};

struct CocycleDefect {
  int i, j;  // 1-based, i < j
  MultiVector defect;
};

// defect(i,j) = xi([e_i,e_j]) - ad2_{e_i} xi(e_j) + ad2_{e_j} xi(e_i),
// with ad2 the degree-2 derivation extension of ad over L.
std::vector<CocycleDefect> cocycle_defect(const LieAlgebra& L,
                                          const Cocycle& xi);

// [e_i*, e_j*] = sum_k <e_i*^e_j*, xi(e_k)> e_k* on the dual basis.
// The result is not guaranteed to satisfy Jacobi; callers test it.
LieAlgebra dual_bracket(const Cocycle& xi);

// rho(e_k*) = sum_{i<j} c_ij^k e_i*^e_j*, the transpose of L's bracket,
// so rho(gamma)(x, y) = gamma([x, y]). Equals -ce_differential on degree 1.
// The returned cocycle's base is the abelian placeholder on the dual side;
// build_bialgebra rewires it to the actual dual algebra.
Cocycle dual_cocycle(const LieAlgebra& L);

// Coboundary of r: xi(e_i) = ad2_{e_i} r. Always a cocycle; verified anyway.
Cocycle coboundary_cocycle(const LieAlgebra& L, const MultiVector& r);

// Classical and generalized Yang-Baxter tests.
MultiVector cybe(const LieAlgebra& L, const MultiVector& r);
bool gybe_holds(const LieAlgebra& L, const MultiVector& r);

struct LieBialgebra {
  LieAlgebra primal;
  Cocycle xi;       // on primal
  LieAlgebra dual;  // derived from xi
  Cocycle rho;      // on dual, transpose of the primal bracket
};

struct BuildDiagnostics {
  bool jacobi_ok = false;
  bool cocycle_ok = false;
  bool dual_jacobi_ok = false;
  bool rho_cocycle_ok = false;
  bool duality_ok = false;  // dual_bracket(rho) reproduces the primal table
  std::string witness;      // first failing axiom, human-readable

  bool ok() const {
    return jacobi_ok && cocycle_ok && dual_jacobi_ok && rho_cocycle_ok &&
           duality_ok;
  }
};

struct BuildResult {
  LieBialgebra bialgebra;
  BuildDiagnostics diag;
};

// Assembles the full structure and verifies every axiom; the bialgebra part
// is filled even on failure so reports can show the offending tables.
BuildResult build_bialgebra(const LieAlgebra& L, const Cocycle& xi);

}  // namespace plie
