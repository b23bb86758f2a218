#include "plie/bialgebra.hpp"

#include <sstream>

#include "plie/errors.hpp"

namespace plie {

namespace {

void check_cocycle_shape(const LieAlgebra& L, const Cocycle& xi) {
  if (static_cast<int>(xi.images.size()) != L.dim)
    throw DimensionMismatchError("cocycle image count differs from the dimension");
  for (const MultiVector& m : xi.images) {
    if (m.dim() != L.dim)
      throw DimensionMismatchError("cocycle image has wrong dimension");
    if (m.degree() != 2) throw DegreeError("cocycle image must have degree 2");
    if (m.space() != L.space)
      throw TagMismatchError("cocycle image lives on the wrong side");
  }
}

// Pairing with the arguments ordered by tag, so callers can stay agnostic
// about which side the cocycle lives on.
Scalar pair_mixed(const MultiVector& a, const MultiVector& b) {
  return a.space() == Space::Dual ? pairing(a, b) : pairing(b, a);
}

}  // namespace

Cocycle Cocycle::zero(const LieAlgebra& base) {
  Cocycle xi;
  xi.base = base;
  xi.images.assign(static_cast<size_t>(base.dim),
                   MultiVector(base.dim, 2, base.space));
  return xi;
}

MultiVector Cocycle::apply(const Vec& x) const {
  if (x.size() != images.size())
    throw DimensionMismatchError("cocycle argument has wrong size");
  MultiVector r(base.dim, 2, base.space);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) r = r + x[i] * images[i];
  return r;
}

std::vector<CocycleDefect> cocycle_defect(const LieAlgebra& L,
                                          const Cocycle& xi) {
  check_cocycle_shape(L, xi);
  std::vector<CocycleDefect> out;
  for (int i = 1; i <= L.dim; ++i)
    for (int j = i + 1; j <= L.dim; ++j) {
      MultiVector d =
          xi.apply(L.bracket_basis(i, j)) -
          extend_derivation(ad_basis(L, i), 2, xi.images[static_cast<size_t>(j - 1)]) +
          extend_derivation(ad_basis(L, j), 2, xi.images[static_cast<size_t>(i - 1)]);
      if (!d.is_zero()) out.push_back({i, j, std::move(d)});
    }
  return out;
}

LieAlgebra dual_bracket(const Cocycle& xi) {
  const int n = xi.base.dim;
  LieAlgebra dual = LieAlgebra::abelian(n, opposite(xi.base.space));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      MultiVector eij = MultiVector::basis(n, dual.space, {i, j});
      Vec value = zero_vec(n);
      for (int k = 1; k <= n; ++k)
        value[static_cast<size_t>(k - 1)] =
            pair_mixed(eij, xi.images[static_cast<size_t>(k - 1)]);
      dual.set_bracket(i, j, value);
    }
  return dual;
}

Cocycle dual_cocycle(const LieAlgebra& L) {
  Cocycle rho;
  rho.base = LieAlgebra::abelian(L.dim, opposite(L.space));
  for (int k = 1; k <= L.dim; ++k) {
    MultiVector img(L.dim, 2, opposite(L.space));
    for (int i = 1; i <= L.dim; ++i)
      for (int j = i + 1; j <= L.dim; ++j)
        img.add_term({i, j},
                     L.bracket_basis(i, j)[static_cast<size_t>(k - 1)]);
    rho.images.push_back(std::move(img));
  }
  return rho;
}

Cocycle coboundary_cocycle(const LieAlgebra& L, const MultiVector& r) {
  if (r.dim() != L.dim || r.space() != L.space)
    throw DimensionMismatchError("r must be a bivector over the algebra");
  if (r.degree() != 2) throw DegreeError("r must have degree 2");
  Cocycle xi;
  xi.base = L;
  for (int i = 1; i <= L.dim; ++i)
    xi.images.push_back(extend_derivation(ad_basis(L, i), 2, r));
  return xi;
}

MultiVector cybe(const LieAlgebra& L, const MultiVector& r) {
  return schouten(L, r, r);
}

bool gybe_holds(const LieAlgebra& L, const MultiVector& r) {
  MultiVector c = cybe(L, r);
  for (int i = 1; i <= L.dim; ++i)
    if (!extend_derivation(ad_basis(L, i), 3, c).is_zero()) return false;
  return true;
}

BuildResult build_bialgebra(const LieAlgebra& L, const Cocycle& xi) {
  check_cocycle_shape(L, xi);
  BuildResult result;
  BuildDiagnostics& diag = result.diag;
  LieBialgebra& B = result.bialgebra;

  B.primal = L;
  B.xi = xi;
  B.xi.base = L;
  B.dual = dual_bracket(B.xi);
  B.rho = dual_cocycle(L);
  B.rho.base = B.dual;

  diag.jacobi_ok = is_lie_algebra(L);
  if (!diag.jacobi_ok) {
    auto defects = jacobi_defect(L);
    std::ostringstream msg;
    if (!defects.empty()) {
      const auto& d = defects.front();
      msg << "jacobi fails at (" << d.i << "," << d.j << "," << d.k
          << "): " << to_string(vec_to_mv(d.defect, L.space), L.basis_labels);
    } else {
      msg << "bracket table is not antisymmetric";
    }
    if (diag.witness.empty()) diag.witness = msg.str();
  }

  auto xi_defects = cocycle_defect(L, B.xi);
  diag.cocycle_ok = xi_defects.empty();
  if (!diag.cocycle_ok && diag.witness.empty()) {
    const auto& d = xi_defects.front();
    std::ostringstream msg;
    msg << "cocycle identity fails at (" << d.i << "," << d.j
        << "): " << to_string(d.defect, L.basis_labels);
    diag.witness = msg.str();
  }

  diag.dual_jacobi_ok = is_lie_algebra(B.dual);
  if (!diag.dual_jacobi_ok && diag.witness.empty()) {
    auto defects = jacobi_defect(B.dual);
    std::ostringstream msg;
    if (!defects.empty()) {
      const auto& d = defects.front();
      msg << "dual jacobi fails at (" << d.i << "," << d.j << "," << d.k
          << "): " << to_string(vec_to_mv(d.defect, B.dual.space));
    } else {
      msg << "dual bracket table is not antisymmetric";
    }
    diag.witness = msg.str();
  }

  diag.rho_cocycle_ok = cocycle_defect(B.dual, B.rho).empty();
  if (!diag.rho_cocycle_ok && diag.witness.empty())
    diag.witness = "transposed bracket is not a cocycle over the dual";

  // Transposing back must reproduce the primal table.
  LieAlgebra back = dual_bracket(B.rho);
  diag.duality_ok = (back.c == L.c);
  if (!diag.duality_ok && diag.witness.empty())
    diag.witness = "double transpose does not return the primal bracket";

  return result;
}

}  // namespace plie
