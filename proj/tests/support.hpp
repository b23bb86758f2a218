#pragma once

#include <random>
#include <vector>

#include "plie/bialgebra.hpp"
#include "plie/metric.hpp"

namespace support {

using namespace plie;

using Rng = std::mt19937_64;

inline Scalar random_rational(Rng& rng, int num_max = 4, int den_max = 3) {
  std::uniform_int_distribution<int> num(-num_max, num_max);
  std::uniform_int_distribution<int> den(1, den_max);
  return Scalar(num(rng)) / den(rng);
}

inline Vec random_vec(Rng& rng, int n) {
  Vec v(static_cast<size_t>(n));
  for (auto& x : v) x = random_rational(rng);
  return v;
}

inline MultiVector random_mv(Rng& rng, int dim, int degree, Space space,
                             int terms = 3) {
  MultiVector m(dim, degree, space);
  std::uniform_int_distribution<int> pick(1, dim);
  for (int t = 0; t < terms; ++t) {
    IndexTuple key;
    for (int s = 0; s < degree; ++s) key.push_back(pick(rng));
    std::sort(key.begin(), key.end());
    bool repeats = false;
    for (size_t s = 1; s < key.size(); ++s) repeats = repeats || key[s] == key[s - 1];
    if (repeats) continue;
    m.add_term(key, random_rational(rng));
  }
  return m;
}

inline Matrix random_matrix(Rng& rng, int rows, int cols) {
  Matrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = random_rational(rng);
  return a;
}

inline Matrix random_invertible(Rng& rng, int n) {
  while (true) {
    Matrix p = random_matrix(rng, n, n);
    if (determinant(p) != 0) return p;
  }
}

// Random symmetric positive definite gram matrix P^T P.
inline InnerProduct random_metric(Rng& rng, int n) {
  Matrix p = random_invertible(rng, n);
  return make_inner_product(transpose(p) * p);
}

// e1 acting on the abelian ideal span(e2..en) by an arbitrary matrix;
// Jacobi holds for any choice.
inline LieAlgebra random_solvable(Rng& rng, int n) {
  LieAlgebra L = LieAlgebra::abelian(n);
  for (int j = 2; j <= n; ++j) {
    Vec img = zero_vec(n);
    for (int k = 2; k <= n; ++k) img[static_cast<size_t>(k - 1)] = random_rational(rng, 2, 2);
    L.set_bracket(1, j, img);
  }
  return L;
}

inline LieAlgebra su2_algebra() {
  LieAlgebra L = LieAlgebra::abelian(3);
  L.add_bracket_term(1, 2, 3, 1);
  L.add_bracket_term(2, 3, 1, 1);
  L.add_bracket_term(3, 1, 2, 1);
  return L;
}

// su(2) + abelian directions, padded to dimension n >= 3.
inline LieAlgebra su2_plus_abelian(int n) {
  LieAlgebra L = LieAlgebra::abelian(n);
  L.add_bracket_term(1, 2, 3, 1);
  L.add_bracket_term(2, 3, 1, 1);
  L.add_bracket_term(3, 1, 2, 1);
  return L;
}

struct MilnorFixture {
  LieAlgebra algebra;
  InnerProduct metric;
  int p = 0;    // dim S
  int r = 0;    // rotation planes
  int ell = 0;  // rank of the rate matrix
};

// Milnor structure in a hidden frame: S = span(e1..ep) rotating r planes of
// the derived ideal with rational rates, conjugated by a random rational
// change of basis. Every plane gets at least one nonzero rate.
inline MilnorFixture random_milnor(Rng& rng, int p, int r) {
  const int n = p + 2 * r;
  std::vector<std::vector<Scalar>> rates(static_cast<size_t>(p),
                                         std::vector<Scalar>(static_cast<size_t>(r), 0));
  std::uniform_int_distribution<int> pick_k(0, p - 1);
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < p; ++k) rates[static_cast<size_t>(k)][static_cast<size_t>(j)] =
        random_rational(rng, 2, 2);
    int forced = pick_k(rng);
    if (rates[static_cast<size_t>(forced)][static_cast<size_t>(j)] == 0)
      rates[static_cast<size_t>(forced)][static_cast<size_t>(j)] = 1;
  }

  LieAlgebra frame = LieAlgebra::abelian(n);
  for (int k = 0; k < p; ++k)
    for (int j = 0; j < r; ++j) {
      const Scalar& rate = rates[static_cast<size_t>(k)][static_cast<size_t>(j)];
      if (rate == 0) continue;
      frame.add_bracket_term(k + 1, p + 2 * j + 1, p + 2 * j + 2, rate);
      frame.add_bracket_term(k + 1, p + 2 * j + 2, p + 2 * j + 1, -rate);
    }

  Matrix t = random_invertible(rng, n);
  Matrix t_inv = *inverse(t);
  LieAlgebra L = LieAlgebra::abelian(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec x = t * basis_vec(n, i);
      Vec y = t * basis_vec(n, j);
      L.set_bracket(i, j, t_inv * frame.bracket(x, y));
    }

  MilnorFixture fx;
  fx.algebra = L;
  fx.metric = make_inner_product(transpose(t) * t);  // identity gram, pulled back
  fx.p = p;
  fx.r = r;
  Matrix rate_matrix(p, r);
  for (int k = 0; k < p; ++k)
    for (int j = 0; j < r; ++j) rate_matrix(k, j) = rates[static_cast<size_t>(k)][static_cast<size_t>(j)];
  fx.ell = rank(rate_matrix);
  return fx;
}

// Schouten bracket oracle by monomial expansion:
// [x_1^...^x_p, y_1^...^y_q] = sum (-1)^{s+t} [x_s, y_t] ^ rest(x) ^ rest(y).
inline MultiVector schouten_oracle(const LieAlgebra& L, const MultiVector& P,
                                   const MultiVector& Q) {
  const int p = P.degree(), q = Q.degree();
  MultiVector out(L.dim, p + q - 1 > 0 ? p + q - 1 : 0, P.space());
  if (p == 0 || q == 0) return out;
  for (const auto& [pk, pc] : P.coords())
    for (const auto& [qk, qc] : Q.coords())
      for (size_t s = 0; s < pk.size(); ++s)
        for (size_t t = 0; t < qk.size(); ++t) {
          MultiVector term =
              vec_to_mv(L.bracket_basis(pk[s], qk[t]), P.space());
          IndexTuple prest, qrest;
          for (size_t u = 0; u < pk.size(); ++u)
            if (u != s) prest.push_back(pk[u]);
          for (size_t u = 0; u < qk.size(); ++u)
            if (u != t) qrest.push_back(qk[u]);
          MultiVector rest(L.dim, static_cast<int>(prest.size()), P.space());
          rest.add_term(prest, 1);
          MultiVector qrest_mv(L.dim, static_cast<int>(qrest.size()), P.space());
          qrest_mv.add_term(qrest, 1);
          Scalar sign = ((s + 1 + t + 1) % 2 == 0) ? 1 : -1;
          out = out + sign * pc * qc * wedge(wedge(term, rest), qrest_mv);
        }
  return out;
}

// r-matrix contraction g* -> g for a bivector r.
inline Vec sharp(const MultiVector& r, int a) {
  Vec out = zero_vec(r.dim());
  for (const auto& [key, c] : r.coords()) {
    if (key[0] == a) out[static_cast<size_t>(key[1] - 1)] += c;
    if (key[1] == a) out[static_cast<size_t>(key[0] - 1)] -= c;
  }
  return out;
}

// Trilinear oracle for [r, r]: value on (e_a*, e_b*, e_c*).
inline Scalar cybe_oracle(const LieAlgebra& L, const MultiVector& r, int a,
                          int b, int c) {
  auto pair1 = [&](int i, const Vec& v) { return v[static_cast<size_t>(i - 1)]; };
  Scalar out = pair1(a, L.bracket(sharp(r, b), sharp(r, c))) +
               pair1(b, L.bracket(sharp(r, c), sharp(r, a))) +
               pair1(c, L.bracket(sharp(r, a), sharp(r, b)));
  return 2 * out;
}

}  // namespace support
