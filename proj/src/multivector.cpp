#include "plie/multivector.hpp"

#include <algorithm>
#include <sstream>

#include "plie/errors.hpp"

namespace plie {

Space opposite(Space s) {
  return s == Space::Primal ? Space::Dual : Space::Primal;
}

namespace {

// Sorts the tuple in place; returns the permutation sign, or 0 when an index
// repeats. Insertion sort: the input degree never exceeds the dimension.
int sort_sign(IndexTuple& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i) {
    int v = t[i];
    size_t j = i;
    while (j > 0 && t[j - 1] > v) {
      t[j] = t[j - 1];
      --j;
      sign = -sign;
    }
    t[j] = v;
  }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) return 0;
  return sign;
}

void check_compatible(const MultiVector& a, const MultiVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("multivector dimensions differ");
  if (a.space() != b.space())
    throw TagMismatchError("primal/dual tags differ");
  if (a.degree() != b.degree())
    throw DegreeError("multivector degrees differ");
}

}  // namespace

MultiVector::MultiVector(int dim, int degree, Space space)
    : dim_(dim), degree_(degree), space_(space) {
  if (dim < 0) throw DimensionMismatchError("negative dimension");
  // Degrees above dim are allowed: those powers are zero and every add_term
  // on them collapses (any tuple of that length repeats an index).
  if (degree < 0) throw DegreeError("negative degree");
}

MultiVector MultiVector::basis(int dim, Space space, const IndexTuple& indices) {
  MultiVector m(dim, static_cast<int>(indices.size()), space);
  m.add_term(indices, 1);
  return m;
}

Scalar MultiVector::coeff(const IndexTuple& key) const {
  auto it = coords_.find(key);
  return it == coords_.end() ? Scalar(0) : it->second;
}

Scalar MultiVector::component(const IndexTuple& indices) const {
  IndexTuple key = indices;
  int sign = sort_sign(key);
  if (sign == 0) return 0;
  return Scalar(sign) * coeff(key);
}

MultiVector& MultiVector::add_term(const IndexTuple& indices, const Scalar& c) {
  if (static_cast<int>(indices.size()) != degree_)
    throw DegreeError("term degree differs from multivector degree");
  for (int i : indices)
    if (i < 1 || i > dim_)
      throw DimensionMismatchError("basis index out of range");
  if (c == 0) return *this;
  IndexTuple key = indices;
  int sign = sort_sign(key);
  if (sign == 0) return *this;
  Scalar& slot = coords_[key];
  slot += Scalar(sign) * c;
  if (slot == 0) coords_.erase(key);
  return *this;
}

MultiVector MultiVector::operator-() const {
  MultiVector r = *this;
  for (auto& [key, c] : r.coords_) c = -c;
  return r;
}

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
  check_compatible(a, b);
  MultiVector r = a;
  for (const auto& [key, c] : b.coords()) r.add_term(key, c);
  return r;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) {
  check_compatible(a, b);
  MultiVector r = a;
  for (const auto& [key, c] : b.coords()) r.add_term(key, -c);
  return r;
}

MultiVector operator*(const Scalar& c, const MultiVector& a) {
  MultiVector r(a.dim(), a.degree(), a.space());
  if (c == 0) return r;
  for (const auto& [key, x] : a.coords()) r.add_term(key, c * x);
  return r;
}

MultiVector vec_to_mv(const Vec& v, Space space) {
  MultiVector m(static_cast<int>(v.size()), 1, space);
  for (size_t i = 0; i < v.size(); ++i)
    m.add_term({static_cast<int>(i) + 1}, v[i]);
  return m;
}

Vec mv_to_vec(const MultiVector& m) {
  if (m.degree() != 1) throw DegreeError("mv_to_vec needs degree 1");
  Vec v = zero_vec(m.dim());
  for (const auto& [key, c] : m.coords()) v[static_cast<size_t>(key[0] - 1)] = c;
  return v;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("multivector dimensions differ");
  if (a.space() != b.space())
    throw TagMismatchError("wedge factors carry different tags");
  if (a.degree() + b.degree() > a.dim())
    throw DegreeError("wedge degree exceeds the dimension");
  MultiVector r(a.dim(), a.degree() + b.degree(), a.space());
  for (const auto& [ka, ca] : a.coords())
    for (const auto& [kb, cb] : b.coords()) {
      IndexTuple key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      r.add_term(key, ca * cb);
    }
  return r;
}

Scalar pairing(const MultiVector& omega, const MultiVector& a) {
  if (omega.space() != Space::Dual || a.space() != Space::Primal)
    throw TagMismatchError("pairing needs a dual form and a primal vector");
  if (omega.dim() != a.dim())
    throw DimensionMismatchError("multivector dimensions differ");
  if (omega.degree() != a.degree())
    throw DegreeError("pairing degrees differ");
  // Dual e_I* and primal e_J pair to delta_IJ on canonical keys.
  Scalar total = 0;
  const auto& small = omega.coords().size() <= a.coords().size()
                          ? omega.coords()
                          : a.coords();
  const MultiVector& other = omega.coords().size() <= a.coords().size() ? a : omega;
  for (const auto& [key, c] : small) total += c * other.coeff(key);
  return total;
}

MultiVector interior(const MultiVector& x, const MultiVector& omega) {
  if (x.dim() != omega.dim())
    throw DimensionMismatchError("multivector dimensions differ");
  if (x.space() != opposite(omega.space()))
    throw TagMismatchError("interior product needs opposite tags");
  int out_degree = std::max(omega.degree() - x.degree(), 0);
  MultiVector r(omega.dim(), out_degree, omega.space());
  if (x.degree() > omega.degree()) return r;
  for (const auto& [p, cx] : x.coords())
    for (const auto& [q, cw] : omega.coords()) {
      // Contract only when p is a subset of q; the sign is the inversion
      // parity of p followed by the complement, relative to sorted q.
      IndexTuple rest;
      size_t pi = 0;
      bool subset = true;
      for (int idx : q) {
        if (pi < p.size() && p[pi] == idx) {
          ++pi;
        } else {
          rest.push_back(idx);
        }
      }
      subset = (pi == p.size());
      if (!subset) continue;
      IndexTuple concat = p;
      concat.insert(concat.end(), rest.begin(), rest.end());
      int inversions = 0;
      for (size_t i = 0; i < concat.size(); ++i)
        for (size_t j = i + 1; j < concat.size(); ++j)
          if (concat[i] > concat[j]) ++inversions;
      Scalar sign = (inversions % 2 == 0) ? 1 : -1;
      r.add_term(rest, sign * cx * cw);
    }
  return r;
}

MultiVector extend_derivation(const Matrix& a, int k, const MultiVector& m) {
  if (a.rows() != m.dim() || a.cols() != m.dim())
    throw DimensionMismatchError("derivation matrix has wrong size");
  if (k != m.degree())
    throw DegreeError("derivation degree differs from argument degree");
  MultiVector r(m.dim(), m.degree(), m.space());
  for (const auto& [key, c] : m.coords())
    for (size_t t = 0; t < key.size(); ++t)
      for (int s = 1; s <= m.dim(); ++s) {
        const Scalar& entry = a(s - 1, key[t] - 1);
        if (entry == 0) continue;
        IndexTuple replaced = key;
        replaced[t] = s;
        r.add_term(replaced, c * entry);
      }
  return r;
}

std::string to_string(const MultiVector& m, const std::vector<std::string>& labels) {
  auto name = [&](int i) {
    std::string base = (i <= static_cast<int>(labels.size()) && !labels.empty())
                           ? labels[static_cast<size_t>(i - 1)]
                           : "e" + std::to_string(i);
    if (m.space() == Space::Dual) base += "*";
    return base;
  };
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : m.coords()) {
    Scalar mag = c < 0 ? Scalar(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << scalar_to_string(mag);
    if (!key.empty()) {
      out << " ";
      for (size_t i = 0; i < key.size(); ++i) {
        if (i > 0) out << "^";
        out << name(key[i]);
      }
    }
  }
  return out.str();
}

}  // namespace plie
