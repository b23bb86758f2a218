#include "plie/lie_algebra.hpp"

#include <functional>

#include "plie/errors.hpp"

namespace plie {

namespace {

void check_basis_index(const LieAlgebra& L, int i) {
  if (i < 1 || i > L.dim) throw InputError("basis index out of range");
}

}  // namespace

LieAlgebra LieAlgebra::abelian(int dim, Space space,
                               std::vector<std::string> labels) {
  if (dim < 0) throw InputError("negative dimension");
  LieAlgebra L;
  L.dim = dim;
  L.space = space;
  L.basis_labels = std::move(labels);
  if (L.basis_labels.empty())
    for (int i = 1; i <= dim; ++i)
      L.basis_labels.push_back("e" + std::to_string(i));
  if (static_cast<int>(L.basis_labels.size()) != dim)
    throw InputError("label count differs from the dimension");
  L.c.assign(static_cast<size_t>(dim),
             std::vector<Vec>(static_cast<size_t>(dim), zero_vec(dim)));
  return L;
}

void LieAlgebra::set_bracket(int i, int j, const Vec& value) {
  check_basis_index(*this, i);
  check_basis_index(*this, j);
  if (static_cast<int>(value.size()) != dim)
    throw DimensionMismatchError("bracket value has wrong size");
  if (i == j) throw InputError("bracket of a basis vector with itself");
  c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = value;
  c[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = Scalar(-1) * value;
}

void LieAlgebra::add_bracket_term(int i, int j, int k, const Scalar& coeff) {
  check_basis_index(*this, i);
  check_basis_index(*this, j);
  check_basis_index(*this, k);
  if (i == j) throw InputError("bracket of a basis vector with itself");
  c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)] += coeff;
  c[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] -= coeff;
}

const Vec& LieAlgebra::bracket_basis(int i, int j) const {
  check_basis_index(*this, i);
  check_basis_index(*this, j);
  return c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw DimensionMismatchError("bracket argument has wrong size");
  Vec r = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[static_cast<size_t>(j)] == 0) continue;
      Scalar f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      const Vec& cij = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k)
        if (cij[static_cast<size_t>(k)] != 0) r[static_cast<size_t>(k)] += f * cij[static_cast<size_t>(k)];
    }
  }
  return r;
}

bool antisymmetry_ok(const LieAlgebra& L) {
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j <= i; ++j) {
      const Vec& a = L.c[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const Vec& b = L.c[static_cast<size_t>(j)][static_cast<size_t>(i)];
      for (int k = 0; k < L.dim; ++k)
        if (a[static_cast<size_t>(k)] + b[static_cast<size_t>(k)] != 0) return false;
    }
  return true;
}

Matrix ad(const LieAlgebra& L, const Vec& x) {
  if (static_cast<int>(x.size()) != L.dim)
    throw DimensionMismatchError("ad argument has wrong size");
  Matrix m(L.dim, L.dim);
  for (int j = 1; j <= L.dim; ++j) {
    Vec col = zero_vec(L.dim);
    for (int i = 0; i < L.dim; ++i)
      if (x[static_cast<size_t>(i)] != 0)
        col = col + x[static_cast<size_t>(i)] * L.c[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
    for (int k = 0; k < L.dim; ++k) m(k, j - 1) = col[static_cast<size_t>(k)];
  }
  return m;
}

Matrix ad_basis(const LieAlgebra& L, int i) {
  check_basis_index(L, i);
  Matrix m(L.dim, L.dim);
  for (int j = 1; j <= L.dim; ++j) {
    const Vec& col = L.bracket_basis(i, j);
    for (int k = 0; k < L.dim; ++k) m(k, j - 1) = col[static_cast<size_t>(k)];
  }
  return m;
}

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& L) {
  std::vector<JacobiDefect> out;
  for (int i = 1; i <= L.dim; ++i)
    for (int j = i + 1; j <= L.dim; ++j)
      for (int k = j + 1; k <= L.dim; ++k) {
        Vec d = L.bracket(basis_vec(L.dim, i), L.bracket_basis(j, k)) +
                L.bracket(basis_vec(L.dim, j), L.bracket_basis(k, i)) +
                L.bracket(basis_vec(L.dim, k), L.bracket_basis(i, j));
        if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

bool is_lie_algebra(const LieAlgebra& L) {
  return antisymmetry_ok(L) && jacobi_defect(L).empty();
}

Subspace derived_ideal(const LieAlgebra& L) {
  std::vector<Vec> gens;
  for (int i = 1; i <= L.dim; ++i)
    for (int j = i + 1; j <= L.dim; ++j) gens.push_back(L.bracket_basis(i, j));
  return make_subspace(L.dim, gens);
}

Subspace center(const LieAlgebra& L) {
  // x central iff sum_i x_i c_ij^k = 0 for all j, k.
  Matrix m(L.dim * L.dim, L.dim);
  for (int j = 0; j < L.dim; ++j)
    for (int k = 0; k < L.dim; ++k)
      for (int i = 0; i < L.dim; ++i)
        m(j * L.dim + k, i) = L.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  return make_subspace(L.dim, kernel_basis(m));
}

MultiVector modular_form(const LieAlgebra& L) {
  MultiVector kappa(L.dim, 1, opposite(L.space));
  for (int i = 1; i <= L.dim; ++i) {
    Scalar tr = 0;
    for (int k = 1; k <= L.dim; ++k)
      tr += L.bracket_basis(i, k)[static_cast<size_t>(k - 1)];
    kappa.add_term({i}, tr);
  }
  return kappa;
}

bool is_unimodular(const LieAlgebra& L) { return modular_form(L).is_zero(); }

MultiVector schouten(const LieAlgebra& L, const MultiVector& P,
                     const MultiVector& Q) {
  if (P.dim() != L.dim || Q.dim() != L.dim)
    throw DimensionMismatchError("multivector dimension differs from the algebra");
  if (P.space() != L.space || Q.space() != L.space)
    throw TagMismatchError("schouten arguments must live on the algebra side");
  const int p = P.degree(), q = Q.degree();
  if (p + q - 1 > L.dim)
    throw DegreeError("schouten bracket degree exceeds the dimension");
  const int out_degree = std::max(p + q - 1, 0);
  MultiVector r(L.dim, out_degree, L.space);
  if (P.is_zero() || Q.is_zero() || p == 0 || q == 0) return r;
  if (p == 1 && q == 1)
    return vec_to_mv(L.bracket(mv_to_vec(P), mv_to_vec(Q)), L.space);
  if (q == 1) {
    // [P, y] = -(-1)^{(p-1)(q-1)} [y, P] = -L_y P.
    return -extend_derivation(ad(L, mv_to_vec(Q)), p, P);
  }
  // q > 1: split each monomial of Q as y ^ Q' and apply the graded Leibniz
  // rule [P, y^Q'] = [P,y]^Q' + (-1)^{p-1} y^[P,Q'].
  for (const auto& [key, cq] : Q.coords()) {
    MultiVector y = MultiVector::basis(L.dim, L.space, {key[0]});
    MultiVector qrest = MultiVector::basis(
        L.dim, L.space, IndexTuple(key.begin() + 1, key.end()));
    MultiVector first = wedge(schouten(L, P, y), qrest);
    MultiVector second = wedge(y, schouten(L, P, qrest));
    Scalar sgn = (p - 1) % 2 == 0 ? 1 : -1;
    r = r + cq * (first + sgn * second);
  }
  return r;
}

namespace {

void for_each_tuple(int n, int k, const std::function<void(const IndexTuple&)>& fn) {
  IndexTuple t;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(t.size()) == k) {
      fn(t);
      return;
    }
    for (int i = start; i <= n; ++i) {
      t.push_back(i);
      rec(i + 1);
      t.pop_back();
    }
  };
  rec(1);
}

}  // namespace

MultiVector ce_differential(const LieAlgebra& L, const MultiVector& omega) {
  if (omega.dim() != L.dim)
    throw DimensionMismatchError("form dimension differs from the algebra");
  if (omega.space() != opposite(L.space))
    throw TagMismatchError("forms over the algebra live on the opposite side");
  const int k = omega.degree();
  MultiVector r(L.dim, k + 1, omega.space());
  if (k + 1 > L.dim || omega.is_zero()) return r;
  for_each_tuple(L.dim, k + 1, [&](const IndexTuple& J) {
    Scalar value = 0;
    for (size_t a = 0; a < J.size(); ++a)
      for (size_t b = a + 1; b < J.size(); ++b) {
        const Vec& br = L.bracket_basis(J[a], J[b]);
        IndexTuple rest;
        rest.reserve(J.size() - 1);
        for (size_t t = 0; t < J.size(); ++t)
          if (t != a && t != b) rest.push_back(J[t]);
        Scalar inner = 0;
        for (int l = 1; l <= L.dim; ++l) {
          if (br[static_cast<size_t>(l - 1)] == 0) continue;
          IndexTuple arg;
          arg.reserve(J.size() - 1);
          arg.push_back(l);
          arg.insert(arg.end(), rest.begin(), rest.end());
          inner += br[static_cast<size_t>(l - 1)] * omega.component(arg);
        }
        Scalar sgn = (a + b) % 2 == 0 ? 1 : -1;
        value += sgn * inner;
      }
    r.add_term(J, value);
  });
  return r;
}

}  // namespace plie
