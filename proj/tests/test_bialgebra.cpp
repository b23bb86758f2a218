#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/errors.hpp"
#include "support.hpp"

using namespace plie;
using support::Rng;

namespace {

// [e2,e3] = a e1, [e1,e2] = b e2, [e1,e3] = b e3 with the rotation cocycle
// xi(e2) = -lambda e1^e3, xi(e3) = lambda e1^e2.
std::pair<LieAlgebra, Cocycle> dim3_pair(const Scalar& a, const Scalar& b,
                                         const Scalar& lambda) {
  LieAlgebra L = LieAlgebra::abelian(3);
  L.add_bracket_term(1, 2, 2, b);
  L.add_bracket_term(1, 3, 3, b);
  L.add_bracket_term(2, 3, 1, a);
  Cocycle xi = Cocycle::zero(L);
  xi.images[1].add_term({1, 3}, -lambda);
  xi.images[2].add_term({1, 2}, lambda);
  return {L, xi};
}

Cocycle random_cocycle_shape(Rng& rng, const LieAlgebra& L) {
  Cocycle xi = Cocycle::zero(L);
  for (auto& img : xi.images) img = support::random_mv(rng, L.dim, 2, L.space, 2);
  return xi;
}

}  // namespace

TEST_CASE("dual bracket of the rotation cocycle") {
  auto [L, xi] = dim3_pair(1, 0, 2);
  LieAlgebra dual = dual_bracket(xi);
  CHECK(dual.space == Space::Dual);
  // [e1*, e2*] = 2 e3*, [e1*, e3*] = -2 e2*, [e2*, e3*] = 0
  Vec v12 = zero_vec(3), v13 = zero_vec(3);
  v12[2] = 2;
  v13[1] = -2;
  CHECK(dual.bracket_basis(1, 2) == v12);
  CHECK(dual.bracket_basis(1, 3) == v13);
  CHECK(dual.bracket_basis(2, 3) == zero_vec(3));
  CHECK(is_lie_algebra(dual));
}

TEST_CASE("dual bracket pairs xi against basis covectors") {
  Rng rng(7201);
  for (int it = 0; it < 15; ++it) {
    LieAlgebra L = support::random_solvable(rng, 4);
    Cocycle xi = random_cocycle_shape(rng, L);
    LieAlgebra dual = dual_bracket(xi);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) {
          Scalar expect = pairing(MultiVector::basis(4, Space::Dual, {i, j}),
                                  xi.images[static_cast<size_t>(k - 1)]);
          CHECK(dual.bracket_basis(i, j)[static_cast<size_t>(k - 1)] == expect);
        }
  }
}

TEST_CASE("dual cocycle transposes the bracket") {
  LieAlgebra su2 = support::su2_algebra();
  Cocycle rho = dual_cocycle(su2);
  CHECK(rho.images[0] == MultiVector::basis(3, Space::Dual, {2, 3}));
  CHECK(rho.images[1] == -MultiVector::basis(3, Space::Dual, {1, 3}));
  CHECK(rho.images[2] == MultiVector::basis(3, Space::Dual, {1, 2}));
  for (int i = 1; i <= 3; ++i)
    CHECK(rho.images[static_cast<size_t>(i - 1)] ==
          -ce_differential(su2, MultiVector::basis(3, Space::Dual, {i})));
}

TEST_CASE("cocycle defect locates the failure") {
  LieAlgebra h = LieAlgebra::abelian(3);
  h.add_bracket_term(1, 2, 3, 1);
  Cocycle xi = Cocycle::zero(h);
  xi.images[0].add_term({1, 2}, 1);
  auto defects = cocycle_defect(h, xi);
  REQUIRE(!defects.empty());
  CHECK(defects[0].i == 1);
  CHECK(defects[0].j == 2);
  CHECK(defects[0].defect == MultiVector::basis(3, Space::Primal, {2, 3}));
}

TEST_CASE("coboundaries are cocycles") {
  Rng rng(7202);
  for (int it = 0; it < 20; ++it) {
    const int dim = 4;
    LieAlgebra L = (it % 2 == 0) ? support::random_solvable(rng, dim)
                                 : support::su2_plus_abelian(dim);
    MultiVector r = support::random_mv(rng, dim, 2, Space::Primal);
    Cocycle xi = coboundary_cocycle(L, r);
    CHECK(cocycle_defect(L, xi).empty());
  }
}

TEST_CASE("cocycle apply is linear in the argument") {
  Rng rng(7203);
  LieAlgebra L = support::su2_plus_abelian(4);
  Cocycle xi = random_cocycle_shape(rng, L);
  Vec x = support::random_vec(rng, 4), y = support::random_vec(rng, 4);
  Vec sum(x);
  for (size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
  CHECK(xi.apply(sum) == xi.apply(x) + xi.apply(y));
  CHECK(xi.apply(basis_vec(4, 2)) == xi.images[1]);
}

TEST_CASE("cybe and gybe on su(2)") {
  LieAlgebra su2 = support::su2_algebra();
  MultiVector r = MultiVector::basis(3, Space::Primal, {1, 2});
  CHECK(cybe(su2, r) == 2 * MultiVector::basis(3, Space::Primal, {1, 2, 3}));
  CHECK(gybe_holds(su2, r));  // top degree is invariant on su(2)
  CHECK(cybe(su2, MultiVector(3, 2, Space::Primal)).is_zero());

  Rng rng(7204);
  for (int it = 0; it < 10; ++it) {
    MultiVector s = support::random_mv(rng, 3, 2, Space::Primal, 3);
    CHECK(cybe(su2, s) == schouten(su2, s, s));
    CHECK(gybe_holds(su2, s));
    // componentwise trilinear oracle
    CHECK(cybe(su2, s).component({1, 2, 3}) == support::cybe_oracle(su2, s, 1, 2, 3));
  }
}

TEST_CASE("build_bialgebra accepts the rotation family") {
  for (int a = -2; a <= 2; ++a) {
    auto [L, xi] = dim3_pair(a, 0, 1);
    BuildResult res = build_bialgebra(L, xi);
    CHECK(res.diag.ok());
    CHECK(res.diag.witness.empty());
    CHECK(res.bialgebra.dual.space == Space::Dual);
    CHECK(res.bialgebra.rho.images[0].space() == Space::Dual);
  }
}

TEST_CASE("build_bialgebra reports a jacobi witness") {
  auto [L, xi] = dim3_pair(1, 1, 1);
  BuildResult res = build_bialgebra(L, xi);
  CHECK_FALSE(res.diag.jacobi_ok);
  CHECK(res.diag.witness == "jacobi fails at (1,2,3): -2 e1");
}

TEST_CASE("build_bialgebra reports a cocycle witness") {
  LieAlgebra h = LieAlgebra::abelian(3);
  h.add_bracket_term(1, 2, 3, 1);
  Cocycle xi = Cocycle::zero(h);
  xi.images[0].add_term({1, 2}, 1);
  BuildResult res = build_bialgebra(h, xi);
  CHECK(res.diag.jacobi_ok);
  CHECK_FALSE(res.diag.cocycle_ok);
  CHECK(res.diag.witness == "cocycle identity fails at (1,2): 1 e2^e3");
}

TEST_CASE("the rho condition is the xi condition re-indexed") {
  Rng rng(7205);
  for (int it = 0; it < 25; ++it) {
    const int dim = 4;
    LieAlgebra L = (it % 2 == 0) ? support::random_solvable(rng, dim)
                                 : support::su2_plus_abelian(dim);
    Cocycle xi = random_cocycle_shape(rng, L);
    BuildResult res = build_bialgebra(L, xi);
    CHECK(res.diag.rho_cocycle_ok == res.diag.cocycle_ok);
    CHECK(res.diag.duality_ok);
  }
}

TEST_CASE("double duality returns the original structure") {
  auto [L, xi] = dim3_pair(Scalar(1) / 2, 0, 2);
  BuildResult first = build_bialgebra(L, xi);
  REQUIRE(first.diag.ok());
  const LieBialgebra& B = first.bialgebra;

  BuildResult second = build_bialgebra(B.dual, B.rho);
  REQUIRE(second.diag.ok());
  CHECK(second.bialgebra.dual.c == L.c);
  CHECK(second.bialgebra.dual.space == Space::Primal);
  for (int i = 0; i < 3; ++i)
    CHECK(second.bialgebra.rho.images[static_cast<size_t>(i)] ==
          B.xi.images[static_cast<size_t>(i)]);
}

TEST_CASE("cocycle shape validation") {
  LieAlgebra L = support::su2_algebra();
  Cocycle xi = Cocycle::zero(L);
  xi.images.pop_back();
  CHECK_THROWS_AS(build_bialgebra(L, xi), Error);

  Cocycle wrong_degree = Cocycle::zero(L);
  wrong_degree.images[0] = MultiVector::basis(3, Space::Primal, {1});
  CHECK_THROWS_AS(build_bialgebra(L, wrong_degree), Error);

  Cocycle wrong_space = Cocycle::zero(L);
  wrong_space.images[0] = MultiVector(3, 2, Space::Dual);
  CHECK_THROWS_AS(build_bialgebra(L, wrong_space), Error);
}
