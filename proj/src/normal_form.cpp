#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "plie/errors.hpp"
#include "plie/metric.hpp"

// The double-precision machinery lives outside namespace plie on purpose:
// inside it, overload resolution for Eigen expressions would have to test
// convertibility of Eigen types to Scalar, and that instantiation does not
// survive boost::multiprecision's constructor constraints.
namespace {

using DVec = Eigen::VectorXd;
using DMat = Eigen::MatrixXd;

DVec to_double(const plie::Vec& v) {
  DVec r(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    r[static_cast<Eigen::Index>(i)] = v[i].convert_to<double>();
  return r;
}

DMat to_double(const plie::Matrix& m) {
  DMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).convert_to<double>();
  return r;
}

// Structure constants as a flat double tensor for fast bracketing.
struct DoubleBracket {
  int n;
  std::vector<double> c;  // c[(i*n + j)*n + k]

  explicit DoubleBracket(const plie::LieAlgebra& L)
      : n(L.dim), c(static_cast<size_t>(n) * n * n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          c[(static_cast<size_t>(i) * n + j) * n + k] =
              L.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)]
                  .convert_to<double>();
  }

  DVec apply(const DVec& x, const DVec& y) const {
    DVec r = DVec::Zero(n);
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j] == 0.0) continue;
        double f = x[i] * y[j];
        for (int k = 0; k < n; ++k) r[k] += f * c[(static_cast<size_t>(i) * n + j) * n + k];
      }
    }
    return r;
  }
};

// Gram-Schmidt with respect to the bilinear form gd.
std::vector<DVec> orthonormalize(const std::vector<DVec>& rows, const DMat& gd) {
  std::vector<DVec> out;
  for (DVec v : rows) {
    for (const DVec& u : out) v -= (u.dot(gd * v)) * u;
    double norm = std::sqrt(v.dot(gd * v));
    if (norm < 1e-12) continue;  // exact input rows are independent; this is defensive
    out.push_back(v / norm);
  }
  return out;
}

const int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                       43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
                       103, 107, 109, 113, 127, 131, 137, 139, 149, 151};

plie::NormalForm run_normal_form(const plie::LieAlgebra& L,
                                 const plie::InnerProduct& m,
                                 const plie::MilnorDecomposition& milnor,
                                 double tol) {
  plie::NormalForm nf;
  nf.tolerance = tol;
  nf.p = milnor.S.dim();
  const int dd = milnor.derived.dim();
  if (dd % 2 != 0)
    throw plie::FailedToConvergeError("derived ideal has odd dimension", 0.0);
  nf.r = dd / 2;

  const DMat gd = to_double(m.gram);
  const DoubleBracket br(L);

  std::vector<DVec> s_rows, d_rows;
  for (const plie::Vec& v : milnor.S.basis) s_rows.push_back(to_double(v));
  for (const plie::Vec& v : milnor.derived.basis) d_rows.push_back(to_double(v));
  std::vector<DVec> e_frame = orthonormalize(s_rows, gd);
  std::vector<DVec> d_frame = orthonormalize(d_rows, gd);
  if (static_cast<int>(e_frame.size()) != nf.p ||
      static_cast<int>(d_frame.size()) != dd)
    throw plie::FailedToConvergeError("orthonormalization lost rank", 0.0);

  for (const DVec& e : e_frame)
    nf.e_basis.emplace_back(e.data(), e.data() + e.size());

  if (nf.r == 0) {
    nf.ell = 0;
    nf.residual = 0.0;
    return nf;
  }

  // ad_{e_k} restricted to the derived ideal, in d_frame coordinates. These
  // are commuting skew matrices; any orthonormal frame splitting them into
  // common invariant 2-planes realizes the rotation form.
  std::vector<DMat> a_mats;
  for (int k = 0; k < nf.p; ++k) {
    DMat a(dd, dd);
    for (int bcol = 0; bcol < dd; ++bcol) {
      DVec image = br.apply(e_frame[static_cast<size_t>(k)], d_frame[static_cast<size_t>(bcol)]);
      for (int arow = 0; arow < dd; ++arow)
        a(arow, bcol) = d_frame[static_cast<size_t>(arow)].dot(gd * image);
    }
    a_mats.push_back(std::move(a));
  }

  double best_residual = -1.0;
  const int attempts = 5;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    // A generic combination separates the invariant planes; distinct square
    // roots of primes keep rationally related rates from cancelling.
    DMat combo = DMat::Zero(dd, dd);
    for (int k = 0; k < nf.p; ++k) {
      size_t pidx = static_cast<size_t>(attempt * nf.p + k) % (sizeof(kPrimes) / sizeof(int));
      combo += std::sqrt(static_cast<double>(kPrimes[pidx])) * a_mats[static_cast<size_t>(k)];
    }
    Eigen::RealSchur<DMat> schur(combo);
    if (schur.info() != Eigen::Success) continue;
    const DMat q = schur.matrixU();

    // Candidate frame in ambient coordinates.
    std::vector<DVec> f_frame;
    for (int col = 0; col < dd; ++col) {
      DVec f = DVec::Zero(L.dim);
      for (int arow = 0; arow < dd; ++arow) f += q(arow, col) * d_frame[static_cast<size_t>(arow)];
      f_frame.push_back(std::move(f));
    }

    DMat lambda(nf.p, nf.r);
    for (int k = 0; k < nf.p; ++k)
      for (int j = 0; j < nf.r; ++j) {
        DVec image = br.apply(e_frame[static_cast<size_t>(k)], f_frame[static_cast<size_t>(2 * j)]);
        lambda(k, j) = f_frame[static_cast<size_t>(2 * j + 1)].dot(gd * image);
      }

    // Reconstruction residual in the metric norm.
    double residual = 0.0;
    for (int k = 0; k < nf.p; ++k)
      for (int j = 0; j < nf.r; ++j) {
        DVec r1 = br.apply(e_frame[static_cast<size_t>(k)], f_frame[static_cast<size_t>(2 * j)]) -
                  lambda(k, j) * f_frame[static_cast<size_t>(2 * j + 1)];
        DVec r2 = br.apply(e_frame[static_cast<size_t>(k)], f_frame[static_cast<size_t>(2 * j + 1)]) +
                  lambda(k, j) * f_frame[static_cast<size_t>(2 * j)];
        residual = std::max(residual, std::sqrt(r1.dot(gd * r1)));
        residual = std::max(residual, std::sqrt(r2.dot(gd * r2)));
      }

    if (best_residual < 0.0 || residual < best_residual) best_residual = residual;
    if (residual > tol) continue;

    for (const DVec& f : f_frame)
      nf.f_basis.emplace_back(f.data(), f.data() + f.size());
    nf.lambda_matrix.assign(static_cast<size_t>(nf.p), std::vector<double>(static_cast<size_t>(nf.r)));
    for (int k = 0; k < nf.p; ++k)
      for (int j = 0; j < nf.r; ++j) nf.lambda_matrix[static_cast<size_t>(k)][static_cast<size_t>(j)] = lambda(k, j);
    Eigen::JacobiSVD<DMat> svd(lambda);
    svd.setThreshold(tol);
    nf.ell = static_cast<int>(svd.rank());
    nf.residual = residual;
    return nf;
  }

  throw plie::FailedToConvergeError("no block frame met the tolerance",
                                    best_residual < 0.0 ? 0.0 : best_residual);
}

}  // namespace

namespace plie {

NormalForm milnor_normal_form(const LieAlgebra& L, const InnerProduct& m,
                              double tol) {
  MilnorDecomposition milnor = milnor_check(L, m);
  if (!milnor.is_milnor)
    throw NotMilnorError("normal form requires the Milnor structure");
  return run_normal_form(L, m, milnor, tol);
}

}  // namespace plie
