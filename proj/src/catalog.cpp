#include "plie/catalog.hpp"

#include <utility>

#include "plie/errors.hpp"

namespace plie {

namespace {

Scalar get(const Params& p, const std::string& k) {
  auto it = p.find(k);
  return it == p.end() ? Scalar(0) : it->second;
}

InnerProduct euclid(int n) { return InnerProduct{Matrix::identity(n)}; }

MultiVector biv(int dim, int i, int j, const Scalar& c) {
  MultiVector m(dim, 2, Space::Primal);
  m.add_term({i, j}, c);
  return m;
}

// Three-dimensional family: [e1,e2]=b e2, [e1,e3]=b e3, [e2,e3]=a e1 with
// the rate-lambda rotation cocycle on the (e2,e3) plane.
CatalogInstance make_dim3(const Scalar& a, const Scalar& b,
                          const Scalar& lambda) {
  LieAlgebra L = LieAlgebra::abelian(3);
  L.add_bracket_term(1, 2, 2, b);
  L.add_bracket_term(1, 3, 3, b);
  L.add_bracket_term(2, 3, 1, a);
  Cocycle xi = Cocycle::zero(L);
  xi.images[1] = biv(3, 1, 3, -lambda);
  xi.images[2] = biv(3, 1, 2, lambda);
  return {std::move(L), std::move(xi), euclid(3)};
}

// Four-dimensional family in derivation constants: the cocycle rotates the
// (e3,e4) plane, e1 and e2 act as the commuting derivations
// diag-rotation (c,c) and (d,e), and [e3,e4] closes on a e1 + b e2.
CatalogInstance make_dim4(const Scalar& a, const Scalar& b, const Scalar& c,
                          const Scalar& d, const Scalar& e,
                          const Scalar& lambda) {
  LieAlgebra L = LieAlgebra::abelian(4);
  L.add_bracket_term(1, 3, 3, c);
  L.add_bracket_term(1, 4, 4, c);
  L.add_bracket_term(2, 3, 3, d);
  L.add_bracket_term(2, 3, 4, -e);
  L.add_bracket_term(2, 4, 3, e);
  L.add_bracket_term(2, 4, 4, d);
  L.add_bracket_term(3, 4, 1, a);
  L.add_bracket_term(3, 4, 2, b);
  Cocycle xi = Cocycle::zero(L);
  xi.images[2] = biv(4, 1, 4, -lambda);
  xi.images[3] = biv(4, 1, 3, lambda);
  return {std::move(L), std::move(xi), euclid(4)};
}

// Five-dimensional family with two-dimensional derived dual: the cocycle
// rotates the (e4,e5) plane; the eleven constants follow the transpose form
// rho(e_i*) = a_i e23* + b_i e45* (i<=3), rho(e4*), rho(e5*) paired.
CatalogInstance make_dim5_case2(const Scalar& a1, const Scalar& a2,
                                const Scalar& a3, const Scalar& b1,
                                const Scalar& b2, const Scalar& b3,
                                const Scalar& A, const Scalar& B,
                                const Scalar& C, const Scalar& D,
                                const Scalar& E) {
  LieAlgebra L = LieAlgebra::abelian(5);
  L.add_bracket_term(1, 4, 4, A);
  L.add_bracket_term(1, 5, 5, A);
  L.add_bracket_term(2, 3, 1, a1);
  L.add_bracket_term(2, 3, 2, a2);
  L.add_bracket_term(2, 3, 3, a3);
  L.add_bracket_term(2, 4, 4, B);
  L.add_bracket_term(2, 4, 5, -C);
  L.add_bracket_term(2, 5, 4, C);
  L.add_bracket_term(2, 5, 5, B);
  L.add_bracket_term(3, 4, 4, D);
  L.add_bracket_term(3, 4, 5, -E);
  L.add_bracket_term(3, 5, 4, E);
  L.add_bracket_term(3, 5, 5, D);
  L.add_bracket_term(4, 5, 1, b1);
  L.add_bracket_term(4, 5, 2, b2);
  L.add_bracket_term(4, 5, 3, b3);
  Cocycle xi = Cocycle::zero(L);
  xi.images[3] = biv(5, 1, 5, -1);
  xi.images[4] = biv(5, 1, 4, 1);
  return {std::move(L), std::move(xi), euclid(5)};
}

// Five-dimensional family with four-dimensional derived dual: the cocycle
// rotates (e2,e3) at rate 1 and (e4,e5) at rate lambda; the primal is a
// central extension of an abelian algebra by e1.
CatalogInstance make_dim5_case4(const Scalar& lambda,
                                const std::vector<std::pair<std::pair<int, int>, Scalar>>& central) {
  LieAlgebra L = LieAlgebra::abelian(5);
  for (const auto& [pair, coeff] : central)
    L.add_bracket_term(pair.first, pair.second, 1, coeff);
  Cocycle xi = Cocycle::zero(L);
  xi.images[1] = biv(5, 1, 3, -1);
  xi.images[2] = biv(5, 1, 2, 1);
  xi.images[3] = biv(5, 1, 5, -lambda);
  xi.images[4] = biv(5, 1, 4, lambda);
  return {std::move(L), std::move(xi), euclid(5)};
}

LieAlgebra su2() {
  LieAlgebra L = LieAlgebra::abelian(3);
  L.add_bracket_term(1, 2, 3, 1);
  L.add_bracket_term(2, 3, 1, 1);
  L.add_bracket_term(3, 1, 2, 1);
  return L;
}

// The linear structure of L on the dual vector space: abelian translations,
// the transposed bracket as cocycle, and the inverted metric so the dual
// side carries m itself.
CatalogInstance make_linear(const LieAlgebra& L, const InnerProduct& m) {
  LieAlgebra primal = LieAlgebra::abelian(L.dim);
  Cocycle xi = Cocycle::zero(primal);
  for (int k = 1; k <= L.dim; ++k) {
    MultiVector img(L.dim, 2, Space::Primal);
    for (int i = 1; i <= L.dim; ++i)
      for (int j = i + 1; j <= L.dim; ++j)
        img.add_term({i, j}, L.bracket_basis(i, j)[static_cast<size_t>(k - 1)]);
    xi.images[static_cast<size_t>(k - 1)] = std::move(img);
  }
  return {std::move(primal), std::move(xi), dual_metric(m)};
}

CatalogInstance make_heisenberg(int n, const Matrix& J, const InnerProduct& m) {
  LieBialgebra B = heisenberg_build(n, J, m);
  return {B.primal, B.xi, m};
}

// Verdict from the flags, with the axiom-failure collapse applied: when an
// axiom fails the geometric flags are forced off, matching analyze.
void finish(ExpectedFlags& e) {
  if (!(e.jacobi_ok && e.cocycle_ok && e.dual_jacobi_ok)) {
    e.flat = false;
    e.metaflat = false;
    e.modular_condition = false;
  }
  if (!e.flat) e.metaflat = false;
  if (!(e.flat && e.metaflat) || !e.modular_condition)
    e.strongly_compatible = StrongVerdict::No;
  else if (e.g_unimodular && e.dual_unimodular)
    e.strongly_compatible = StrongVerdict::Yes;
  else
    e.strongly_compatible = StrongVerdict::NecessaryConditionsHoldOnly;
}

Params ps(std::initializer_list<std::pair<const char*, Scalar>> kv) {
  Params p;
  for (const auto& [k, v] : kv) p[k] = v;
  return p;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> entries;

  entries.push_back(CatalogEntry{
      "dim2.trivial",
      "Abelian plane with zero cocycle and the Euclidean metric; every "
      "condition holds.",
      {},
      [](const Params&) -> CatalogInstance {
        LieAlgebra L = LieAlgebra::abelian(2);
        return {L, Cocycle::zero(L), euclid(2)};
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "dim3.abelian-rotation",
      "Abelian R^3 with the rate-lambda rotation cocycle on the (e2,e3) "
      "plane and the Euclidean metric. Deformable for every nonzero lambda.",
      {{"lambda", 1, "rotation rate of the cocycle, nonzero"}},
      [](const Params& p) { return make_dim3(0, 0, get(p, "lambda")); },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"lambda", 1}}), ps({{"lambda", 2}}), ps({{"lambda", Scalar(-1, 2)}})},
      [](const Params& p) { return get(p, "lambda") != 0; }});

  entries.push_back(CatalogEntry{
      "dim3.heisenberg",
      "Heisenberg algebra [e1,e2]=e3 with the central rotation cocycle of "
      "rate lambda and metric diag(1,1,a). Deformable for every nonzero "
      "lambda and a > 0.",
      {{"lambda", 1, "rotation rate of the cocycle, nonzero"},
       {"a", 1, "metric weight of the center, positive"}},
      [](const Params& p) -> CatalogInstance {
        Scalar lambda = get(p, "lambda"), a = get(p, "a");
        Matrix J(3, 3);
        J(1, 0) = -lambda;  // J e1 = -lambda e2
        J(0, 1) = lambda;   // J e2 =  lambda e1
        Matrix g = Matrix::identity(3);
        g(2, 2) = a;
        return make_heisenberg(1, J, make_inner_product(g));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"lambda", 1}, {"a", 1}}), ps({{"lambda", 2}, {"a", Scalar(1, 2)}}),
       ps({{"lambda", 1}, {"a", 2}})},
      [](const Params& p) {
        return get(p, "lambda") != 0 && get(p, "a") > 0;
      }});

  entries.push_back(CatalogEntry{
      "dim3.dual-family",
      "Three-dimensional family [e1,e2]=b e2, [e1,e3]=b e3, [e2,e3]=a e1 "
      "with the rate-lambda rotation cocycle and the Euclidean metric. "
      "Jacobi needs ab=0 and the modular condition forces b=0, so only the "
      "b=0 line is deformable.",
      {{"a", 1, "coefficient of [e2,e3] on e1"},
       {"b", 0, "diagonal action rate of e1, killed by the modular condition"},
       {"lambda", 1, "rotation rate of the cocycle, nonzero"}},
      [](const Params& p) {
        return make_dim3(get(p, "a"), get(p, "b"), get(p, "lambda"));
      },
      [](const Params& p) {
        Scalar a = get(p, "a"), b = get(p, "b"), lambda = get(p, "lambda");
        ExpectedFlags e;
        e.jacobi_ok = (a * b == 0);
        e.g_unimodular = (b == 0);
        e.modular_condition = (lambda * b == 0);
        finish(e);
        return e;
      },
      {ps({{"a", 1}, {"b", 0}, {"lambda", 1}}),
       ps({{"a", Scalar(1, 2)}, {"b", 0}, {"lambda", 2}}),
       ps({{"a", -2}, {"b", 0}, {"lambda", 1}}),
       ps({{"a", 0}, {"b", 1}, {"lambda", 1}}),
       ps({{"a", 0}, {"b", -1}, {"lambda", 2}}),
       ps({{"a", 1}, {"b", 1}, {"lambda", 1}})},
      [](const Params& p) { return get(p, "lambda") != 0; }});

  // Four-dimensional entries use the presentation [e2,e3]=a e3 - b e4,
  // [e2,e4]=b e3 + a e4, [e3,e4]=c e1 + d e2 with e1 central.
  auto dim4_builder = [](const Params& p) {
    return make_dim4(get(p, "c"), get(p, "d"), 0, get(p, "a"), get(p, "b"),
                     get(p, "lambda"));
  };
  auto dim4_expected = [](const Params& p) {
    Scalar a = get(p, "a"), c = get(p, "c"), d = get(p, "d");
    ExpectedFlags e;
    e.jacobi_ok = (a == 0) || (c == 0 && d == 0);
    e.g_unimodular = (a == 0);
    finish(e);
    return e;
  };

  entries.push_back(CatalogEntry{
      "dim4.family",
      "Four-dimensional family [e2,e3]=a e3 - b e4, [e2,e4]=b e3 + a e4, "
      "[e3,e4]=c e1 + d e2 with e1 central, the rate-lambda rotation cocycle "
      "on (e3,e4) and the Euclidean metric. Jacobi needs a=0 or c=d=0; the "
      "necessary conditions always hold, and a=0 is exactly the unimodular, "
      "fully deformable branch.",
      {{"a", 0, "diagonal action rate of e2; obstructs unimodularity"},
       {"b", 1, "rotation rate of e2 on the (e3,e4) plane"},
       {"c", 1, "coefficient of [e3,e4] on e1"},
       {"d", 0, "coefficient of [e3,e4] on e2"},
       {"lambda", 1, "rotation rate of the cocycle, nonzero"}},
      dim4_builder, dim4_expected,
      {ps({{"a", 0}, {"b", 1}, {"c", 1}, {"d", 0}, {"lambda", 1}}),
       ps({{"a", 1}, {"b", 0}, {"c", 0}, {"d", 0}, {"lambda", 1}}),
       ps({{"a", 0}, {"b", 0}, {"c", 2}, {"d", -1}, {"lambda", 2}}),
       ps({{"a", 1}, {"b", 2}, {"c", 1}, {"d", 1}, {"lambda", 1}}),
       ps({{"a", Scalar(1, 2)}, {"b", 1}, {"c", 0}, {"d", 0}, {"lambda", 2}})},
      [](const Params& p) { return get(p, "lambda") != 0; }});

  entries.push_back(CatalogEntry{
      "dim4.unimodular.trivial",
      "Abelian R^4 with the rate-lambda rotation cocycle on (e3,e4) and the "
      "Euclidean metric; the a=b=c=d=0 point of the four-dimensional family.",
      {{"lambda", 1, "rotation rate of the cocycle, nonzero"}},
      [](const Params& p) {
        return make_dim4(0, 0, 0, 0, 0, get(p, "lambda"));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"lambda", 1}}), ps({{"lambda", 2}})},
      [](const Params& p) { return get(p, "lambda") != 0; }});

  entries.push_back(CatalogEntry{
      "dim4.unimodular.semidirect",
      "Central extension branch [e3,e4]=c e1 + d e2 of the four-dimensional "
      "family (a=b=0): two-step nilpotent and fully deformable.",
      {{"c", 1, "coefficient of [e3,e4] on e1"},
       {"d", 0, "coefficient of [e3,e4] on e2"},
       {"lambda", 1, "rotation rate of the cocycle, nonzero"}},
      [](const Params& p) {
        return make_dim4(get(p, "c"), get(p, "d"), 0, 0, 0, get(p, "lambda"));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"c", 1}, {"d", 0}, {"lambda", 1}}),
       ps({{"c", Scalar(1, 2)}, {"d", -1}, {"lambda", 2}})},
      [](const Params& p) { return get(p, "lambda") != 0; }});

  entries.push_back(CatalogEntry{
      "dim4.unimodular.oscillator",
      "Oscillator branch of the four-dimensional family: a=0, c=1, d=0 with "
      "rotation rate b, so [e2,e3]=-b e4, [e2,e4]=b e3, [e3,e4]=e1. "
      "Unimodular and fully deformable.",
      {{"b", 1, "rotation rate of e2 on the (e3,e4) plane"},
       {"lambda", 1, "rotation rate of the cocycle, nonzero"}},
      [](const Params& p) {
        return make_dim4(1, 0, 0, 0, get(p, "b"), get(p, "lambda"));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"b", 1}, {"lambda", 1}}), ps({{"b", Scalar(1, 2)}, {"lambda", 2}})},
      [](const Params& p) { return get(p, "lambda") != 0; }});

  entries.push_back(CatalogEntry{
      "dim4.nonunimodular",
      "Nonunimodular branch of the four-dimensional family: c=d=0 with a "
      "nonzero, so e2 acts by the similarity (a,b) on the (e3,e4) plane. "
      "All necessary conditions hold but unimodularity fails.",
      {{"a", 1, "diagonal action rate of e2, nonzero"},
       {"b", 0, "rotation rate of e2 on the (e3,e4) plane"},
       {"lambda", 1, "rotation rate of the cocycle, nonzero"}},
      [](const Params& p) {
        return make_dim4(0, 0, 0, get(p, "a"), get(p, "b"), get(p, "lambda"));
      },
      [](const Params& p) {
        ExpectedFlags e;
        e.g_unimodular = (get(p, "a") == 0);
        finish(e);
        return e;
      },
      {ps({{"a", 1}, {"b", 0}, {"lambda", 1}}),
       ps({{"a", Scalar(1, 2)}, {"b", 1}, {"lambda", 2}})},
      [](const Params& p) {
        return get(p, "a") != 0 && get(p, "lambda") != 0;
      }});

  // dim5.case2.* entries: the branch presentations of the five-dimensional
  // family whose dual has two-dimensional derived ideal.
  entries.push_back(CatalogEntry{
      "dim5.case2.basic1",
      "Branch with only [e4,e5]=b1 e1 + b2 e2 + b3 e3 nonzero: two-step "
      "nilpotent and fully deformable.",
      {{"b1", 1, "coefficient of [e4,e5] on e1"},
       {"b2", 0, "coefficient of [e4,e5] on e2"},
       {"b3", 0, "coefficient of [e4,e5] on e3"}},
      [](const Params& p) {
        return make_dim5_case2(0, 0, 0, get(p, "b1"), get(p, "b2"),
                               get(p, "b3"), 0, 0, 0, 0, 0);
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"b1", 1}, {"b2", 0}, {"b3", 0}}),
       ps({{"b1", 1}, {"b2", Scalar(1, 2)}, {"b3", -1}})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "dim5.case2.basic2",
      "Branch [e2,e3]=a1 e1 with e2, e3 acting on the (e4,e5) plane by the "
      "similarities (A,B) and (C,D). Deformable exactly when A=C=0, the "
      "unimodular case.",
      {{"a1", 1, "coefficient of [e2,e3] on e1"},
       {"A", 0, "diagonal rate of e2 on (e4,e5); obstructs unimodularity"},
       {"B", 1, "rotation rate of e2 on (e4,e5)"},
       {"C", 0, "diagonal rate of e3 on (e4,e5); obstructs unimodularity"},
       {"D", 0, "rotation rate of e3 on (e4,e5)"}},
      [](const Params& p) {
        return make_dim5_case2(get(p, "a1"), 0, 0, 0, 0, 0, 0, get(p, "A"),
                               get(p, "B"), get(p, "C"), get(p, "D"));
      },
      [](const Params& p) {
        ExpectedFlags e;
        e.g_unimodular = (get(p, "A") == 0 && get(p, "C") == 0);
        finish(e);
        return e;
      },
      {ps({{"a1", 1}, {"A", 0}, {"B", 1}, {"C", 0}, {"D", 0}}),
       ps({{"a1", 1}, {"A", 1}, {"B", 0}, {"C", 0}, {"D", 0}}),
       ps({{"a1", Scalar(1, 2)}, {"A", 0}, {"B", 2}, {"C", 0}, {"D", -1}})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "dim5.case2.basic3",
      "Branch [e2,e3]=a1 e1, [e4,e5]=b1 e1 with pure rotations (rates B, D) "
      "of e2, e3 on the (e4,e5) plane: unimodular and fully deformable.",
      {{"a1", 1, "coefficient of [e2,e3] on e1"},
       {"b1", 1, "coefficient of [e4,e5] on e1"},
       {"B", 1, "rotation rate of e2 on (e4,e5)"},
       {"D", 0, "rotation rate of e3 on (e4,e5)"}},
      [](const Params& p) {
        return make_dim5_case2(get(p, "a1"), 0, 0, get(p, "b1"), 0, 0, 0, 0,
                               get(p, "B"), 0, get(p, "D"));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"a1", 1}, {"b1", 1}, {"B", 1}, {"D", 0}}),
       ps({{"a1", Scalar(1, 2)}, {"b1", -1}, {"B", 0}, {"D", 2}})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "dim5.case2.family1",
      "Branch with [e2,e3]=a1 e1 + a2 e2 + a3 e3, (a2,a3) nonzero, and the "
      "action rates tied by A=alpha a3, B=beta a3, C=-alpha a2, D=-beta a2. "
      "Deformable exactly at alpha=-1/2, where the trace obstruction "
      "cancels.",
      {{"a1", 1, "coefficient of [e2,e3] on e1"},
       {"a2", 1, "coefficient of [e2,e3] on e2"},
       {"a3", 0, "coefficient of [e2,e3] on e3"},
       {"alpha", Scalar(-1, 2), "diagonal coupling rate"},
       {"beta", 1, "rotation coupling rate"}},
      [](const Params& p) {
        Scalar a2 = get(p, "a2"), a3 = get(p, "a3");
        Scalar alpha = get(p, "alpha"), beta = get(p, "beta");
        return make_dim5_case2(get(p, "a1"), a2, a3, 0, 0, 0, 0, alpha * a3,
                               beta * a3, -alpha * a2, -beta * a2);
      },
      [](const Params& p) {
        Scalar a2 = get(p, "a2"), a3 = get(p, "a3");
        Scalar t = 1 + 2 * get(p, "alpha");
        ExpectedFlags e;
        e.g_unimodular = (a3 * t == 0 && a2 * t == 0);
        finish(e);
        return e;
      },
      {ps({{"a1", 1}, {"a2", 1}, {"a3", 0}, {"alpha", Scalar(-1, 2)}, {"beta", 1}}),
       ps({{"a1", 0}, {"a2", 1}, {"a3", 1}, {"alpha", 0}, {"beta", 1}}),
       ps({{"a1", 1}, {"a2", 0}, {"a3", 2}, {"alpha", Scalar(-1, 2)}, {"beta", Scalar(-1, 2)}})},
      [](const Params& p) {
        return get(p, "a2") != 0 || get(p, "a3") != 0;
      }});

  entries.push_back(CatalogEntry{
      "dim5.case2.family2",
      "Branch with [e2,e3]=a1 e1 + a2 e2 + a3 e3, (a2,a3) nonzero, "
      "[e4,e5]=b1 e1 and pure rotation coupling (alpha=0): the trace "
      "obstruction never cancels, so only the necessary conditions hold.",
      {{"a1", 1, "coefficient of [e2,e3] on e1"},
       {"a2", 1, "coefficient of [e2,e3] on e2"},
       {"a3", 0, "coefficient of [e2,e3] on e3"},
       {"b1", 1, "coefficient of [e4,e5] on e1"},
       {"beta", 1, "rotation coupling rate"}},
      [](const Params& p) {
        Scalar a2 = get(p, "a2"), a3 = get(p, "a3"), beta = get(p, "beta");
        return make_dim5_case2(get(p, "a1"), a2, a3, get(p, "b1"), 0, 0, 0, 0,
                               beta * a3, 0, -beta * a2);
      },
      [](const Params& p) {
        ExpectedFlags e;
        e.g_unimodular = (get(p, "a2") == 0 && get(p, "a3") == 0);
        finish(e);
        return e;
      },
      {ps({{"a1", 1}, {"a2", 1}, {"a3", 0}, {"b1", 1}, {"beta", 1}}),
       ps({{"a1", 0}, {"a2", 0}, {"a3", 1}, {"b1", 2}, {"beta", Scalar(1, 2)}})},
      [](const Params& p) {
        return get(p, "a2") != 0 || get(p, "a3") != 0;
      }});

  entries.push_back(CatalogEntry{
      "dim5.case2.family3",
      "Branch with [e2,e3]=a1 e1 + a2 e2 + a3 e3, (a2,a3) nonzero, "
      "[e4,e5]=gamma [e2,e3] and coupling alpha=1/2: the trace obstruction "
      "never cancels, so only the necessary conditions hold.",
      {{"a1", 1, "coefficient of [e2,e3] on e1"},
       {"a2", 1, "coefficient of [e2,e3] on e2"},
       {"a3", 0, "coefficient of [e2,e3] on e3"},
       {"beta", 1, "rotation coupling rate"},
       {"gamma", 1, "scale of [e4,e5] against [e2,e3]"}},
      [](const Params& p) {
        Scalar a1 = get(p, "a1"), a2 = get(p, "a2"), a3 = get(p, "a3");
        Scalar beta = get(p, "beta"), gamma = get(p, "gamma");
        return make_dim5_case2(a1, a2, a3, gamma * a1, gamma * a2, gamma * a3,
                               0, a3 / 2, beta * a3, -a2 / 2, -beta * a2);
      },
      [](const Params& p) {
        ExpectedFlags e;
        e.g_unimodular = (get(p, "a2") == 0 && get(p, "a3") == 0);
        finish(e);
        return e;
      },
      {ps({{"a1", 1}, {"a2", 1}, {"a3", 0}, {"beta", 1}, {"gamma", 1}}),
       ps({{"a1", 0}, {"a2", 2}, {"a3", 1}, {"beta", Scalar(1, 2)}, {"gamma", -1}})},
      [](const Params& p) {
        return get(p, "a2") != 0 || get(p, "a3") != 0;
      }});

  // dim5.case4.* entries: dual with four-dimensional derived ideal, fully
  // deformable throughout. Expected flags here were computed with this
  // library's exact checks.
  entries.push_back(CatalogEntry{
      "dim5.case4.generic",
      "Rates 1 and lambda distinct in absolute value: the primal is the "
      "central extension [e2,e3]=a e1, [e4,e5]=b e1. Fully deformable.",
      {{"lambda", 2, "second rotation rate, not 0, 1 or -1"},
       {"a", 1, "coefficient of [e2,e3] on e1"},
       {"b", 1, "coefficient of [e4,e5] on e1"}},
      [](const Params& p) {
        return make_dim5_case4(get(p, "lambda"),
                               {{{2, 3}, get(p, "a")}, {{4, 5}, get(p, "b")}});
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"lambda", 2}, {"a", 1}, {"b", 1}}),
       ps({{"lambda", 3}, {"a", Scalar(1, 2)}, {"b", -1}}),
       ps({{"lambda", Scalar(1, 2)}, {"a", 1}, {"b", 0}})},
      [](const Params& p) {
        Scalar l = get(p, "lambda");
        return l != 0 && l != 1 && l != -1;
      }});

  entries.push_back(CatalogEntry{
      "dim5.case4.lambda1",
      "Equal rates (lambda=1) admit the extra mixed terms [e2,e4]=b e1, "
      "[e2,e5]=c e1, [e3,e4]=-c e1, [e3,e5]=b e1. Fully deformable.",
      {{"a", 1, "coefficient of [e2,e3] on e1"},
       {"b", 1, "mixed coefficient"},
       {"c", 0, "mixed coefficient"},
       {"d", 1, "coefficient of [e4,e5] on e1"}},
      [](const Params& p) {
        Scalar b = get(p, "b"), c = get(p, "c");
        return make_dim5_case4(
            1, {{{2, 3}, get(p, "a")},
                {{2, 4}, b},
                {{2, 5}, c},
                {{3, 4}, -c},
                {{3, 5}, b},
                {{4, 5}, get(p, "d")}});
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"a", 1}, {"b", 1}, {"c", 0}, {"d", 1}}),
       ps({{"a", Scalar(1, 2)}, {"b", 0}, {"c", 1}, {"d", -1}})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "dim5.case4.lambda-1",
      "Opposite rates (lambda=-1) admit the extra mixed terms [e2,e4]=b e1, "
      "[e2,e5]=c e1, [e3,e4]=c e1, [e3,e5]=-b e1. Fully deformable.",
      {{"a", 1, "coefficient of [e2,e3] on e1"},
       {"b", 1, "mixed coefficient"},
       {"c", 0, "mixed coefficient"},
       {"d", 1, "coefficient of [e4,e5] on e1"}},
      [](const Params& p) {
        Scalar b = get(p, "b"), c = get(p, "c");
        return make_dim5_case4(
            -1, {{{2, 3}, get(p, "a")},
                 {{2, 4}, b},
                 {{2, 5}, c},
                 {{3, 4}, c},
                 {{3, 5}, -b},
                 {{4, 5}, get(p, "d")}});
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"a", 1}, {"b", 0}, {"c", 1}, {"d", 1}}),
       ps({{"a", 2}, {"b", 1}, {"c", Scalar(1, 2)}, {"d", 0}})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "heisenberg.h1.rotation",
      "Rank-one Heisenberg algebra with the central cocycle of the rotation "
      "J x1 = a y1, J y1 = -a x1 and the Euclidean metric. Deformable for "
      "every rate.",
      {{"a", 1, "rotation rate of J on the (x1,y1) plane"}},
      [](const Params& p) -> CatalogInstance {
        Scalar a = get(p, "a");
        Matrix J(3, 3);
        J(1, 0) = a;
        J(0, 1) = -a;
        return make_heisenberg(1, J, euclid(3));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"a", 1}}), ps({{"a", Scalar(1, 2)}}), ps({{"a", 0}})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "heisenberg.h2.block",
      "Rank-two Heisenberg algebra with J rotating the (x1,y1) plane at "
      "rate a and the (x2,y2) plane at rate b. The fourth-order condition "
      "holds blockwise, so every rate pair is deformable.",
      {{"a", 1, "rotation rate on the (x1,y1) plane"},
       {"b", 1, "rotation rate on the (x2,y2) plane"}},
      [](const Params& p) -> CatalogInstance {
        Scalar a = get(p, "a"), b = get(p, "b");
        Matrix J(5, 5);
        J(1, 0) = a;
        J(0, 1) = -a;
        J(3, 2) = b;
        J(2, 3) = -b;
        return make_heisenberg(2, J, euclid(5));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"a", 1}, {"b", 1}}), ps({{"a", 1}, {"b", Scalar(1, 2)}}),
       ps({{"a", 2}, {"b", 0}})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "heisenberg.h2.planemix",
      "Rank-two Heisenberg algebra with J x1 = y2, J y2 = -x1 mixing the "
      "symplectic planes. Flatness and the modular condition survive, but "
      "the fourth-order condition fails, so the metacurvature obstructs "
      "deformability.",
      {},
      [](const Params&) -> CatalogInstance {
        Matrix J(5, 5);
        J(3, 0) = 1;   // J x1 = y2
        J(0, 3) = -1;  // J y2 = -x1
        return make_heisenberg(2, J, euclid(5));
      },
      [](const Params&) {
        ExpectedFlags e;
        e.metaflat = false;
        finish(e);
        return e;
      },
      {ps({})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "triangular.su2",
      "su(2) with the bi-invariant Euclidean metric and the coboundary "
      "cocycle of r = r12 e1^e2 + r13 e1^e3 + r23 e2^e3. The bracket [r,r] "
      "is ad-invariant, so the dual is always a Lie algebra, but every "
      "nonzero r breaks flatness, the modular condition and dual "
      "unimodularity.",
      {{"r12", 0, "coefficient of r on e1^e2"},
       {"r13", 0, "coefficient of r on e1^e3"},
       {"r23", 0, "coefficient of r on e2^e3"}},
      [](const Params& p) -> CatalogInstance {
        LieAlgebra L = su2();
        MultiVector r(3, 2, Space::Primal);
        r.add_term({1, 2}, get(p, "r12"));
        r.add_term({1, 3}, get(p, "r13"));
        r.add_term({2, 3}, get(p, "r23"));
        return {L, coboundary_cocycle(L, r), euclid(3)};
      },
      [](const Params& p) {
        bool zero = get(p, "r12") == 0 && get(p, "r13") == 0 &&
                    get(p, "r23") == 0;
        ExpectedFlags e;
        e.flat = zero;
        e.metaflat = zero;
        e.dual_unimodular = zero;
        e.modular_condition = zero;
        finish(e);
        return e;
      },
      {ps({{"r12", 0}, {"r13", 0}, {"r23", 0}}),
       ps({{"r12", 1}, {"r13", 0}, {"r23", 0}}),
       ps({{"r12", 0}, {"r13", Scalar(1, 2)}, {"r23", -1}}),
       ps({{"r12", -2}, {"r13", 1}, {"r23", 2}})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "linear.milnor3",
      "Linear structure of the Euclidean motion-type algebra [e1,e2]=lambda "
      "e3, [e1,e3]=-lambda e2 on its dual vector space. The algebra carries "
      "the rotation decomposition, so the structure is deformable.",
      {{"lambda", 1, "rotation rate, nonzero"}},
      [](const Params& p) -> CatalogInstance {
        Scalar lambda = get(p, "lambda");
        LieAlgebra L = LieAlgebra::abelian(3);
        L.add_bracket_term(1, 2, 3, lambda);
        L.add_bracket_term(1, 3, 2, -lambda);
        return make_linear(L, euclid(3));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"lambda", 1}}), ps({{"lambda", 2}})},
      [](const Params& p) { return get(p, "lambda") != 0; }});

  entries.push_back(CatalogEntry{
      "linear.su2",
      "Linear structure of su(2) on its dual vector space with the "
      "Euclidean metric: every adjoint map is skew, so the skew subalgebra "
      "is everything and is not abelian. Flatness fails and the structure "
      "is not deformable.",
      {},
      [](const Params&) { return make_linear(su2(), euclid(3)); },
      [](const Params&) {
        ExpectedFlags e;
        e.flat = false;
        e.metaflat = false;
        finish(e);
        return e;
      },
      {ps({})},
      [](const Params&) { return true; }});

  entries.push_back(CatalogEntry{
      "linear.abelian",
      "Linear structure of the abelian algebra of dimension n: the zero "
      "Poisson structure, deformable for trivial reasons.",
      {{"n", 3, "dimension, an integer between 1 and 8"}},
      [](const Params& p) -> CatalogInstance {
        int n = static_cast<int>(numerator(get(p, "n")).convert_to<long>());
        return make_linear(LieAlgebra::abelian(n), euclid(n));
      },
      [](const Params&) {
        ExpectedFlags e;
        finish(e);
        return e;
      },
      {ps({{"n", 2}}), ps({{"n", 5}})},
      [](const Params& p) {
        Scalar n = get(p, "n");
        return denominator(n) == 1 && n >= 1 && n <= 8;
      }});

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw UnknownEntryError("unknown catalog entry \"" + name + "\"");
}

Params fill_params(const CatalogEntry& entry, const Params& overrides) {
  Params p;
  for (const auto& spec : entry.parameters) p[spec.name] = spec.default_value;
  for (const auto& [k, v] : overrides) {
    if (p.find(k) == p.end())
      throw InputError("unknown parameter \"" + k + "\" for entry " + entry.name);
    p[k] = v;
  }
  if (entry.constraints_ok && !entry.constraints_ok(p))
    throw InputError("parameter constraints violated for entry " + entry.name);
  return p;
}

bool flags_match(const ExpectedFlags& expected, const HawkinsReport& actual) {
  return expected.jacobi_ok == actual.jacobi_ok &&
         expected.cocycle_ok == actual.cocycle_ok &&
         expected.dual_jacobi_ok == actual.dual_jacobi_ok &&
         expected.flat == actual.flat && expected.metaflat == actual.metaflat &&
         expected.g_unimodular == actual.g_unimodular &&
         expected.dual_unimodular == actual.dual_unimodular &&
         expected.modular_condition == actual.modular_condition &&
         expected.strongly_compatible == actual.strongly_compatible;
}

namespace {

struct GridFamily {
  std::vector<std::string> param_names;
  std::function<CatalogInstance(const Params&)> builder;
  std::function<bool(const Params&)> predicate;  // may be empty
};

GridFamily grid_family(const std::string& family) {
  if (family == "dim3")
    return {{"a", "b"},
            [](const Params& p) { return make_dim3(get(p, "a"), get(p, "b"), 1); },
            [](const Params& p) { return get(p, "b") == 0; }};
  if (family == "dim4")
    return {{"a", "b", "c", "d", "e"},
            [](const Params& p) {
              return make_dim4(get(p, "a"), get(p, "b"), get(p, "c"),
                               get(p, "d"), get(p, "e"), 1);
            },
            [](const Params& p) {
              Scalar a = get(p, "a"), b = get(p, "b"), c = get(p, "c"),
                     d = get(p, "d");
              bool jacobi = (a == 0 && b == 0) || (c == 0 && d == 0);
              return jacobi && c == 0;
            }};
  if (family == "dim5.case2")
    return {{"a1", "a2", "a3", "b1", "b2", "b3", "A", "B", "C", "D", "E"},
            [](const Params& p) {
              return make_dim5_case2(get(p, "a1"), get(p, "a2"), get(p, "a3"),
                                     get(p, "b1"), get(p, "b2"), get(p, "b3"),
                                     get(p, "A"), get(p, "B"), get(p, "C"),
                                     get(p, "D"), get(p, "E"));
            },
            nullptr};
  throw UnknownEntryError("unknown classification family \"" + family + "\"");
}

}  // namespace

GridResult grid_classify(const std::string& family,
                         const std::vector<GridAxis>& axes) {
  GridFamily fam = grid_family(family);
  for (const auto& axis : axes) {
    bool known = false;
    for (const auto& n : fam.param_names) known = known || (n == axis.name);
    if (!known)
      throw InputError("unknown parameter \"" + axis.name + "\" for family " +
                       family);
    if (axis.step <= 0) throw InputError("grid step must be positive");
    if (axis.hi < axis.lo) throw InputError("empty grid range");
  }

  std::vector<std::vector<Scalar>> values;
  for (const auto& axis : axes) {
    std::vector<Scalar> v;
    for (Scalar x = axis.lo; x <= axis.hi; x += axis.step) v.push_back(x);
    values.push_back(std::move(v));
  }

  GridResult result;
  result.has_predicate = static_cast<bool>(fam.predicate);
  std::vector<size_t> idx(axes.size(), 0);
  while (true) {
    Params p;
    for (const auto& n : fam.param_names) p[n] = 0;
    for (size_t k = 0; k < axes.size(); ++k) p[axes[k].name] = values[k][idx[k]];

    GridPoint point;
    point.params = p;
    CatalogInstance inst = fam.builder(p);
    point.report = analyze(inst.algebra, inst.cocycle, inst.metric);
    const HawkinsReport& r = point.report;
    point.admissible = r.jacobi_ok && r.cocycle_ok && r.dual_jacobi_ok &&
                       r.flat && r.metaflat && r.modular_condition &&
                       r.dual_unimodular;
    if (fam.predicate) {
      point.predicted = fam.predicate(p);
      if (point.predicted != point.admissible) result.mismatches.push_back(p);
    }
    if (point.admissible) ++result.admissible_count;
    result.points.push_back(std::move(point));

    // Odometer increment, last axis fastest.
    size_t k = axes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < values[k].size()) break;
      idx[k] = 0;
      if (k == 0) return result;
    }
    if (axes.empty()) return result;
  }
}

}  // namespace plie
