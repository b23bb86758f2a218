#include "plie/metric.hpp"

#include <stdexcept>
#include <string>

#include "plie/errors.hpp"

namespace plie {

bool is_symmetric(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_positive_definite(const Matrix& a) {
  if (!is_symmetric(a)) return false;
  for (int k = 1; k <= a.rows(); ++k) {
    Matrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = a(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

InnerProduct make_inner_product(const Matrix& gram) {
  if (gram.rows() != gram.cols())
    throw InputError("metric is not square");
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = i + 1; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i))
        throw InputError("metric not symmetric at (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + ")");
  for (int k = 1; k <= gram.rows(); ++k) {
    Matrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    if (determinant(minor) <= 0)
      throw InputError("metric not positive definite (leading minor " +
                       std::to_string(k) + ")");
  }
  return InnerProduct{gram};
}

InnerProduct dual_metric(const InnerProduct& m) {
  auto inv = inverse(m.gram);
  if (!inv) throw InputError("metric is singular");
  return InnerProduct{*inv};
}

Scalar inner(const InnerProduct& m, const Vec& x, const Vec& y) {
  Vec gy = m.gram * y;
  if (x.size() != gy.size())
    throw DimensionMismatchError("inner product size mismatch");
  Scalar total = 0;
  for (size_t i = 0; i < x.size(); ++i) total += x[i] * gy[i];
  return total;
}

Matrix ad_transpose(const LieAlgebra& L, const InnerProduct& m, const Vec& x) {
  auto ginv = inverse(m.gram);
  if (!ginv) throw InputError("metric is singular");
  return (*ginv) * transpose(ad(L, x)) * m.gram;
}

Subspace s_subalgebra(const LieAlgebra& L, const InnerProduct& m) {
  // x is in S iff G ad_x + ad_x^T G = 0; flatten over the n^2 entries.
  const int n = L.dim;
  Matrix system(n * n, n);
  for (int i = 1; i <= n; ++i) {
    Matrix a = ad_basis(L, i);
    Matrix cond = m.gram * a + transpose(a) * m.gram;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) system(r * n + c, i - 1) = cond(r, c);
  }
  return make_subspace(n, kernel_basis(system));
}

namespace {

bool pairwise_brackets_vanish(const LieAlgebra& L, const Subspace& s) {
  for (size_t a = 0; a < s.basis.size(); ++a)
    for (size_t b = a + 1; b < s.basis.size(); ++b)
      if (!is_zero(L.bracket(s.basis[a], s.basis[b]))) return false;
  return true;
}

}  // namespace

MilnorDecomposition milnor_check(const LieAlgebra& L, const InnerProduct& m) {
  MilnorDecomposition d;
  d.S = s_subalgebra(L, m);
  d.derived = derived_ideal(L);
  d.s_abelian = pairwise_brackets_vanish(L, d.S);
  d.derived_abelian = pairwise_brackets_vanish(L, d.derived);
  d.orthogonal_complement_match = (orthogonal_complement(d.S, m.gram) == d.derived);
  d.is_milnor = d.s_abelian && d.derived_abelian && d.orthogonal_complement_match;
  return d;
}

LCProduct lc_product(const LieAlgebra& L, const InnerProduct& m) {
  const int n = L.dim;
  auto ginv = inverse(m.gram);
  if (!ginv) throw InputError("metric is singular");
  LCProduct D;
  D.dim = n;
  D.table.assign(static_cast<size_t>(n),
                 std::vector<Vec>(static_cast<size_t>(n), zero_vec(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec w = zero_vec(n);
      Vec ei = basis_vec(n, i), ej = basis_vec(n, j);
      for (int k = 1; k <= n; ++k) {
        Vec ek = basis_vec(n, k);
        w[static_cast<size_t>(k - 1)] =
            inner(m, L.bracket(ei, ej), ek) + inner(m, L.bracket(ek, ei), ej) +
            inner(m, L.bracket(ek, ej), ei);
      }
      D.table[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          Scalar(1, 2) * ((*ginv) * w);
    }
  return D;
}

Vec lc_apply(const LCProduct& D, const Vec& x, const Vec& y) {
  if (static_cast<int>(x.size()) != D.dim || static_cast<int>(y.size()) != D.dim)
    throw DimensionMismatchError("product argument has wrong size");
  Vec r = zero_vec(D.dim);
  for (int i = 0; i < D.dim; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < D.dim; ++j) {
      if (y[static_cast<size_t>(j)] == 0) continue;
      r = r + (x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)]) *
                  D.table[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return r;
}

Vec curvature(const LCProduct& D, const LieAlgebra& L, const Vec& x,
              const Vec& y, const Vec& z) {
  Vec first = lc_apply(D, L.bracket(x, y), z);
  Vec second = lc_apply(D, x, lc_apply(D, y, z)) -
               lc_apply(D, y, lc_apply(D, x, z));
  return first - second;
}

bool is_flat(const LCProduct& D, const LieAlgebra& L) {
  for (int i = 1; i <= L.dim; ++i)
    for (int j = i + 1; j <= L.dim; ++j)
      for (int k = 1; k <= L.dim; ++k)
        if (!is_zero(curvature(D, L, basis_vec(L.dim, i), basis_vec(L.dim, j),
                               basis_vec(L.dim, k))))
          return false;
  return true;
}

namespace {

void require_milnor_and_s(const LieAlgebra& L_dual, const InnerProduct& m_dual,
                          const MilnorDecomposition& milnor, const Vec& alpha,
                          const Vec& beta, const Vec& gamma) {
  (void)m_dual;
  if (!milnor.is_milnor)
    throw NotMilnorError("metacurvature closed form needs the Milnor structure");
  if (!contains(milnor.S, alpha) || !contains(milnor.S, beta) ||
      !contains(milnor.S, gamma))
    throw ArgumentNotInSError("metacurvature arguments must lie in S");
}

}  // namespace

MultiVector metacurvature(const LieAlgebra& L_dual, const InnerProduct& m_dual,
                          const Cocycle& rho, const Vec& alpha, const Vec& beta,
                          const Vec& gamma) {
  MilnorDecomposition milnor = milnor_check(L_dual, m_dual);
  require_milnor_and_s(L_dual, m_dual, milnor, alpha, beta, gamma);
  MultiVector inner_step = extend_derivation(ad(L_dual, beta), 2, rho.apply(gamma));
  return extend_derivation(ad(L_dual, alpha), 2, inner_step);
}

MultiVector metacurvature_via_parallel(const LieAlgebra& L_dual,
                                       const InnerProduct& m_dual,
                                       const Cocycle& rho, const Vec& alpha,
                                       const Vec& beta, const Vec& gamma) {
  MilnorDecomposition milnor = milnor_check(L_dual, m_dual);
  require_milnor_and_s(L_dual, m_dual, milnor, alpha, beta, gamma);
  LCProduct D = lc_product(L_dual, m_dual);
  auto d_matrix = [&](const Vec& x) {
    Matrix m(L_dual.dim, L_dual.dim);
    for (int j = 1; j <= L_dual.dim; ++j) {
      Vec col = lc_apply(D, x, basis_vec(L_dual.dim, j));
      for (int k = 0; k < L_dual.dim; ++k) m(k, j - 1) = col[static_cast<size_t>(k)];
    }
    return m;
  };
  MultiVector d_gamma = -rho.apply(gamma);
  MultiVector step = extend_derivation(d_matrix(beta), 2, d_gamma);
  return -extend_derivation(d_matrix(alpha), 2, step);
}

bool metaflat_check(const LieAlgebra& L_dual, const InnerProduct& m_dual,
                    const Cocycle& rho) {
  MilnorDecomposition milnor = milnor_check(L_dual, m_dual);
  if (!milnor.is_milnor)
    throw NotMilnorError("metaflatness test needs the Milnor structure");
  const auto& sbasis = milnor.S.basis;
  bool flat_meta = true;
  for (size_t a = 0; a < sbasis.size(); ++a)
    for (size_t b = a; b < sbasis.size(); ++b)
      for (size_t g = 0; g < sbasis.size(); ++g) {
        MultiVector ab = metacurvature(L_dual, m_dual, rho, sbasis[a],
                                       sbasis[b], sbasis[g]);
        MultiVector ba = metacurvature(L_dual, m_dual, rho, sbasis[b],
                                       sbasis[a], sbasis[g]);
        // S is abelian and acts by commuting skew maps, so the two slots
        // commute; a mismatch means the decomposition above is broken.
        if (!(ab == ba))
          throw std::logic_error("metacurvature lost its (alpha,beta) symmetry");
        if (!ab.is_zero()) flat_meta = false;
      }
  return flat_meta;
}

}  // namespace plie
