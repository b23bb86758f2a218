#include "plie/hawkins.hpp"

#include <sstream>
#include <stdexcept>

#include "plie/errors.hpp"

namespace plie {

std::string to_string(StrongVerdict v) {
  switch (v) {
    case StrongVerdict::Yes:
      return "Yes";
    case StrongVerdict::NecessaryConditionsHoldOnly:
      return "NecessaryConditionsHoldOnly";
    case StrongVerdict::No:
      return "No";
  }
  return "No";
}

ModularResult modular_condition(const LieBialgebra& B, const InnerProduct& m) {
  const int n = B.primal.dim;
  if (m.dim() != n)
    throw InputError("metric dimension differs from the algebra");
  if (static_cast<int>(B.xi.images.size()) != n)
    throw DimensionMismatchError("cocycle image count differs from the dimension");
  IndexTuple all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  // The condition's zero set is scale-invariant, so the unscaled coordinate
  // volume form stands in for the metric one.
  MultiVector mu = MultiVector::basis(n, opposite(B.primal.space), all);
  ModularResult r;
  r.holds = true;
  for (int i = 1; i <= n; ++i) {
    MultiVector contracted = interior(B.xi.images[static_cast<size_t>(i - 1)], mu);
    MultiVector v = ce_differential(B.primal, contracted);
    if (!v.is_zero()) {
      r.holds = false;
      r.witness_index = i;
      r.witness = -v;  // value on the derivation-extension side
      return r;
    }
  }
  return r;
}

namespace {

std::string milnor_failure(const MilnorDecomposition& d) {
  if (!d.s_abelian) return "S is not abelian";
  if (!d.derived_abelian) return "the derived ideal is not abelian";
  return "the orthogonal complement of S is not the derived ideal";
}

}  // namespace

HawkinsReport analyze(const LieAlgebra& L, const Cocycle& xi,
                      const InnerProduct& m) {
  if (m.dim() != L.dim)
    throw InputError("metric dimension differs from the algebra");
  make_inner_product(m.gram);

  BuildResult build = build_bialgebra(L, xi);
  const LieBialgebra& B = build.bialgebra;
  // The rho condition over the dual is the xi condition re-indexed, so the
  // two flags must agree; double transposition must return the input.
  if (build.diag.rho_cocycle_ok != build.diag.cocycle_ok || !build.diag.duality_ok)
    throw std::logic_error("transpose construction lost self-consistency");

  HawkinsReport rep;
  rep.jacobi_ok = build.diag.jacobi_ok;
  rep.cocycle_ok = build.diag.cocycle_ok;
  rep.dual_jacobi_ok = build.diag.dual_jacobi_ok;

  // Traces need no axioms, so unimodularity is always meaningful.
  rep.g_unimodular = is_unimodular(L);
  if (!rep.g_unimodular)
    rep.witnesses["g_unimodular"] =
        "modular character " + to_string(modular_form(L), L.basis_labels);
  rep.dual_unimodular = is_unimodular(B.dual);
  if (!rep.dual_unimodular)
    rep.witnesses["dual_unimodular"] =
        "dual modular character " + to_string(modular_form(B.dual));

  const auto label = [&](int i) { return L.basis_labels[static_cast<size_t>(i - 1)]; };
  if (!rep.jacobi_ok) {
    auto defects = jacobi_defect(L);
    if (!defects.empty()) {
      const auto& d = defects.front();
      rep.witnesses["jacobi"] =
          "(" + label(d.i) + "," + label(d.j) + "," + label(d.k) + "): defect " +
          to_string(vec_to_mv(d.defect, L.space), L.basis_labels);
    } else {
      rep.witnesses["jacobi"] = "bracket table is not antisymmetric";
    }
  }
  if (!rep.cocycle_ok) {
    auto defects = cocycle_defect(L, B.xi);
    const auto& d = defects.front();
    rep.witnesses["cocycle"] = "(" + label(d.i) + "," + label(d.j) + "): defect " +
                               to_string(d.defect, L.basis_labels);
  }
  if (!rep.dual_jacobi_ok) {
    auto defects = jacobi_defect(B.dual);
    if (!defects.empty()) {
      const auto& d = defects.front();
      rep.witnesses["dual_jacobi"] =
          "(" + label(d.i) + "*," + label(d.j) + "*," + label(d.k) + "*): defect " +
          to_string(vec_to_mv(d.defect, B.dual.space), L.basis_labels);
    } else {
      rep.witnesses["dual_jacobi"] = "dual bracket table is not antisymmetric";
    }
  }

  const bool axioms_ok = rep.jacobi_ok && rep.cocycle_ok && rep.dual_jacobi_ok;
  if (!axioms_ok) {
    std::string reason = "bialgebra axioms fail";
    if (!build.diag.witness.empty()) reason += ": " + build.diag.witness;
    rep.witnesses["flat"] = reason;
    rep.witnesses["metaflat"] = reason;
    rep.witnesses["modular_condition"] = reason;
    rep.strongly_compatible = StrongVerdict::No;
    return rep;
  }

  const InnerProduct m_dual = dual_metric(m);
  MilnorDecomposition milnor = milnor_check(B.dual, m_dual);
  const bool flat_by_curvature = is_flat(lc_product(B.dual, m_dual), B.dual);
  if (milnor.is_milnor != flat_by_curvature)
    throw std::logic_error("structure test and curvature disagree on flatness");
  rep.flat = milnor.is_milnor;

  if (rep.flat) {
    rep.metaflat = metaflat_check(B.dual, m_dual, B.rho);
    if (!rep.metaflat) {
      const auto& sb = milnor.S.basis;
      for (size_t a = 0; a < sb.size() && rep.witnesses.count("metaflat") == 0; ++a)
        for (size_t b = a; b < sb.size() && rep.witnesses.count("metaflat") == 0; ++b)
          for (size_t g = 0; g < sb.size(); ++g) {
            MultiVector mc = metacurvature(B.dual, m_dual, B.rho, sb[a], sb[b], sb[g]);
            if (!mc.is_zero()) {
              std::ostringstream msg;
              msg << "metacurvature on S basis triple (" << a + 1 << "," << b + 1
                  << "," << g + 1 << ") is " << to_string(mc);
              rep.witnesses["metaflat"] = msg.str();
              break;
            }
          }
    }
  } else {
    rep.witnesses["flat"] = milnor_failure(milnor);
    rep.metaflat = false;
    rep.witnesses["metaflat"] = "metacurvature undefined (connection not flat)";
  }

  ModularResult mr = modular_condition(B, m);
  rep.modular_condition = mr.holds;
  rep.modular_witness_index = mr.witness_index;
  rep.modular_witness = mr.witness;
  if (!mr.holds) {
    std::ostringstream msg;
    msg << "fails at basis index " << mr.witness_index << " with value "
        << to_string(*mr.witness, L.basis_labels);
    rep.witnesses["modular_condition"] = msg.str();
  }

  rep.compatible = rep.flat && rep.metaflat;
  if (!rep.compatible || !rep.modular_condition)
    rep.strongly_compatible = StrongVerdict::No;
  else if (rep.g_unimodular && rep.dual_unimodular)
    rep.strongly_compatible = StrongVerdict::Yes;
  else
    rep.strongly_compatible = StrongVerdict::NecessaryConditionsHoldOnly;
  return rep;
}

HawkinsReport analyze(const LieBialgebra& B, const InnerProduct& m) {
  return analyze(B.primal, B.xi, m);
}

LieAlgebra heisenberg_algebra(int n) {
  if (n < 1) throw InputError("heisenberg rank must be positive");
  const int dim = 2 * n + 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    labels.push_back("x" + std::to_string(i));
    labels.push_back("y" + std::to_string(i));
  }
  labels.push_back("z");
  LieAlgebra L = LieAlgebra::abelian(dim, Space::Primal, labels);
  for (int i = 1; i <= n; ++i)
    L.add_bracket_term(2 * i - 1, 2 * i, dim, 1);
  return L;
}

namespace {

void check_heisenberg_data(int n, const Matrix& J, const InnerProduct& m) {
  const int dim = 2 * n + 1;
  if (J.rows() != dim || J.cols() != dim)
    throw InputError("J has the wrong size");
  if (m.dim() != dim)
    throw InputError("metric dimension differs from the algebra");
  if (!is_zero(J * basis_vec(dim, dim)))
    throw InputError("J must annihilate the center");
  Matrix gj = m.gram * J;
  if (!(transpose(gj) == Scalar(-1) * gj))
    throw InputError("J must be antisymmetric for the metric");
}

}  // namespace

LieBialgebra heisenberg_build(int n, const Matrix& J, const InnerProduct& m) {
  check_heisenberg_data(n, J, m);
  LieAlgebra L = heisenberg_algebra(n);
  const int dim = L.dim;
  MultiVector z = MultiVector::basis(dim, Space::Primal, {dim});
  Cocycle xi;
  xi.base = L;
  for (int i = 1; i <= dim; ++i)
    xi.images.push_back(wedge(z, vec_to_mv(J * basis_vec(dim, i), Space::Primal)));
  BuildResult result = build_bialgebra(L, xi);
  if (!result.diag.ok())
    throw std::logic_error("central construction failed the bialgebra axioms");
  return result.bialgebra;
}

HeisenbergCondition heisenberg_condition(int n, const Matrix& J,
                                         const InnerProduct& m) {
  check_heisenberg_data(n, J, m);
  LieAlgebra L = heisenberg_algebra(n);
  const int dim = L.dim;
  Matrix w(dim, dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j)
      w(i - 1, j - 1) = L.bracket_basis(i, j)[static_cast<size_t>(dim - 1)];
  Matrix jj = J * J;
  Matrix cond = transpose(jj) * w + w * jj +
                Scalar(2) * (transpose(J) * w * J);
  HeisenbergCondition out;
  out.holds = true;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (cond(i, j) != 0) {
        out.holds = false;
        out.witness_i = i + 1;
        out.witness_j = j + 1;
        out.witness_value = cond(i, j);
        return out;
      }
  return out;
}

bool triangular_analysis(const LieAlgebra& L, const InnerProduct& m,
                         const MultiVector& r) {
  if (m.dim() != L.dim)
    throw InputError("metric dimension differs from the algebra");
  if (!is_lie_algebra(L)) throw InputError("not a Lie algebra");
  if (r.dim() != L.dim || r.degree() != 2 || r.space() != L.space)
    throw InputError("r must be a bivector over the algebra");
  // Bi-invariance: <[x,y],z> + <y,[x,z]> = 0.
  for (int i = 1; i <= L.dim; ++i)
    for (int j = 1; j <= L.dim; ++j)
      for (int k = 1; k <= L.dim; ++k) {
        Vec ei = basis_vec(L.dim, i), ej = basis_vec(L.dim, j), ek = basis_vec(L.dim, k);
        if (inner(m, L.bracket(ei, ej), ek) + inner(m, ej, L.bracket(ei, ek)) != 0)
          throw InputError("metric is not ad-invariant");
      }
  return cybe(L, r).is_zero();
}

bool linear_case(const LieAlgebra& L, const InnerProduct& m) {
  if (m.dim() != L.dim)
    throw InputError("metric dimension differs from the algebra");
  if (!is_lie_algebra(L)) throw InputError("not a Lie algebra");
  // The linear structure on the dual vector space: abelian translations,
  // cocycle transposed from L, metric inverted so the dual side carries m.
  LieAlgebra primal = LieAlgebra::abelian(L.dim, Space::Primal);
  Cocycle xi = Cocycle::zero(primal);
  for (int k = 1; k <= L.dim; ++k) {
    MultiVector img(L.dim, 2, Space::Primal);
    for (int i = 1; i <= L.dim; ++i)
      for (int j = i + 1; j <= L.dim; ++j)
        img.add_term({i, j}, L.bracket_basis(i, j)[static_cast<size_t>(k - 1)]);
    xi.images[static_cast<size_t>(k - 1)] = std::move(img);
  }
  HawkinsReport rep = analyze(primal, xi, dual_metric(m));
  const bool deformable = rep.strongly_compatible == StrongVerdict::Yes;
  if (deformable != milnor_check(L, m).is_milnor)
    throw std::logic_error("linear verdict disagrees with the structure test");
  return deformable;
}

}  // namespace plie
