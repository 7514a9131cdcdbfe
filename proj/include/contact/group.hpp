#pragma once

#include <map>
#include <vector>

#include "contact/algebra.hpp"
#include "contact/errors.hpp"
#include "contact/matrix.hpp"

namespace contact {

/// An invertible matrix whose conjugation preserves the algebra.
struct GroupElement {
  GMatrix m;
  const GradedContactAlgebra* alg = nullptr;

  GroupElement() = default;
  GroupElement(GMatrix mat, const GradedContactAlgebra* a) : m(std::move(mat)), alg(a) {}

  static GroupElement identity(const GradedContactAlgebra& alg) {
    return {GMatrix::identity(alg.matrix_size()), &alg};
  }

  GroupElement inverse() const {
    auto inv = try_inverse(m);
    if (!inv) throw Error("group element is singular");
    return {std::move(*inv), alg};
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.alg != b.alg || a.alg == nullptr) throw AlgebraMismatch("elements of different algebras");
    return {a.m * b.m, a.alg};
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.alg == b.alg && a.m == b.m;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

/// Conjugation gXg^{-1}; throws if the result leaves the algebra.
inline AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
  if (g.alg != x.alg || g.alg == nullptr) throw AlgebraMismatch("elements of different algebras");
  GMatrix res = g.m * x.m * inverse(g.m);
  if (!g.alg->contains(res))
    throw Error("conjugation by this matrix does not preserve the algebra");
  return {std::move(res), g.alg};
}

/// Matrix of Ad(g) on the full basis (column b = coefficients of g e_b g^{-1}).
inline QMatrix adjoint_matrix(const GroupElement& g) {
  const GradedContactAlgebra& alg = *g.alg;
  GMatrix ginv = inverse(g.m);
  QMatrix ad(alg.dim(), alg.dim());
  for (int b = 0; b < alg.dim(); ++b) {
    auto c = alg.try_decompose(g.m * alg.basis_matrix(b) * ginv);
    if (!c) throw Error("conjugation by this matrix does not preserve the algebra");
    for (int a = 0; a < alg.dim(); ++a) ad(a, b) = (*c)[a];
  }
  return ad;
}

/// A group element modulo the center: equality means equal adjoint actions.
struct ProjectiveGroupElement {
  GroupElement representative;

  ProjectiveGroupElement() = default;
  explicit ProjectiveGroupElement(GroupElement rep) : representative(std::move(rep)) {}

  bool is_identity() const {
    return adjoint_matrix(representative) == QMatrix::identity(representative.alg->dim());
  }

  friend bool operator==(const ProjectiveGroupElement& a, const ProjectiveGroupElement& b) {
    if (a.representative.alg != b.representative.alg) return false;
    return adjoint_matrix(a.representative) == adjoint_matrix(b.representative);
  }
  friend bool operator!=(const ProjectiveGroupElement& a, const ProjectiveGroupElement& b) {
    return !(a == b);
  }
};

/// Coordinates of a class in g/p: one g_-2 coefficient plus g_-1 coefficients,
/// taken over the algebra's basis of those degrees.
struct QuotientVector {
  Rational xi2;
  std::vector<Rational> xi1;
  const GradedContactAlgebra* alg = nullptr;

  static QuotientVector zero(const GradedContactAlgebra& alg) {
    QuotientVector v;
    v.xi2 = 0;
    v.xi1.assign(alg.dim_of_degree(-1), Rational(0));
    v.alg = &alg;
    return v;
  }

  QuotientVector operator-() const {
    QuotientVector r = *this;
    r.xi2 = -r.xi2;
    for (auto& c : r.xi1) c = -c;
    return r;
  }
  friend bool operator==(const QuotientVector& a, const QuotientVector& b) {
    return a.alg == b.alg && a.xi2 == b.xi2 && a.xi1 == b.xi1;
  }
  friend bool operator!=(const QuotientVector& a, const QuotientVector& b) { return !(a == b); }
};

/// Class of X in g/p (drops all components of degree >= 0).
inline QuotientVector project_to_quotient(const AlgebraElement& x) {
  const GradedContactAlgebra& alg = *x.alg;
  std::vector<Rational> c = alg.decompose(x.m);
  QuotientVector v = QuotientVector::zero(alg);
  v.xi2 = c[alg.degree_indices(-2)[0]];
  const auto& m1 = alg.degree_indices(-1);
  for (std::size_t k = 0; k < m1.size(); ++k) v.xi1[k] = c[m1[k]];
  return v;
}

/// The canonical lift of a quotient class into g_-2 + g_-1.
inline AlgebraElement lift_quotient(const QuotientVector& v) {
  const GradedContactAlgebra& alg = *v.alg;
  std::vector<Rational> c(alg.dim(), Rational(0));
  c[alg.degree_indices(-2)[0]] = v.xi2;
  const auto& m1 = alg.degree_indices(-1);
  for (std::size_t k = 0; k < m1.size(); ++k) c[m1[k]] = v.xi1[k];
  return alg.element_from_coeffs(c);
}

namespace detail {
inline bool degrees_within(const AlgebraElement& z, int lo, int hi) {
  for (const auto& [deg, part] : grade_decompose(z))
    if (deg < lo || deg > hi) return false;
  return true;
}
}  // namespace detail

/// Exact exponential of a nilpotent-part element (degrees {1,2} or {-2,-1});
/// the power series terminates because such matrices are nilpotent.
inline GroupElement exp_nilpotent(const AlgebraElement& z) {
  if (z.alg == nullptr) throw AlgebraMismatch("element has no algebra");
  if (!detail::degrees_within(z, 1, 2) && !detail::degrees_within(z, -2, -1))
    throw NotNilpotentPart("exponent must lie entirely in degrees {1,2} or {-2,-1}");
  int n = z.alg->matrix_size();
  GMatrix sum = GMatrix::identity(n);
  GMatrix term = GMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    term = term * z.m * Gaussian(Rational(1, k));  // term = z^k / k!
    if (term.is_zero()) break;
    sum += term;
  }
  return {std::move(sum), z.alg};
}

/// Action of g on g/p: lift, conjugate, project. Well defined for g in the
/// parabolic (filtration-preserving) subgroup.
inline QuotientVector underline_adjoint(const GroupElement& g, const QuotientVector& v) {
  if (g.alg != v.alg || g.alg == nullptr) throw AlgebraMismatch("elements of different algebras");
  return project_to_quotient(adjoint(g, lift_quotient(v)));
}

/// g0 * exp(Z1) * exp(Z2).
inline GroupElement assemble(const GroupElement& g0, const AlgebraElement& z1,
                             const AlgebraElement& z2) {
  return g0 * exp_nilpotent(z1) * exp_nilpotent(z2);
}

/// True iff Ad(g) maps each filtration step g^i = (sum of degrees >= i) into itself.
inline bool preserves_filtration(const GroupElement& g) {
  const GradedContactAlgebra& alg = *g.alg;
  QMatrix ad;
  try {
    ad = adjoint_matrix(g);
  } catch (const Error&) {
    return false;
  }
  for (int b = 0; b < alg.dim(); ++b)
    for (int a = 0; a < alg.dim(); ++a)
      if (ad(a, b) != 0 && alg.degree(a) < alg.degree(b)) return false;
  return true;
}

struct ParabolicFactorization {
  GroupElement g0;      // grading-preserving (weight-block-diagonal)
  AlgebraElement z1;    // in g_1
  AlgebraElement z2;    // in g_2
};

/// Unique factorization g = g0 exp(Z1) exp(Z2) of a filtration-preserving g.
inline ParabolicFactorization factorize_parabolic(const GroupElement& g) {
  const GradedContactAlgebra& alg = *g.alg;
  if (!preserves_filtration(g)) throw NotInParabolic("element does not preserve the filtration");
  int n = alg.matrix_size();
  const auto& w = alg.weights();
  GMatrix d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w[i] == w[j]) d(i, j) = g.m(i, j);
  auto dinv = try_inverse(d);
  if (!dinv) throw NotInParabolic("grading-diagonal part is singular");
  GMatrix u = *dinv * g.m;  // unipotent: I + (strictly positive weight part)
  GMatrix x = u - GMatrix::identity(n);
  // log(I + x) = sum (-1)^{k+1} x^k / k, terminating by nilpotency
  GMatrix z(n, n);
  GMatrix pw = GMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    pw = pw * x;
    if (pw.is_zero()) break;
    z += pw * Gaussian(Rational(k % 2 ? 1 : -1, k));
  }
  AlgebraElement zel(z, &alg);
  auto parts = grade_decompose(zel);
  AlgebraElement z1 = alg.zero(), z2 = alg.zero();
  for (const auto& [deg, part] : parts) {
    if (deg == 1)
      z1 = part;
    else if (deg == 2)
      z2 = part;
    else
      throw NotInParabolic("unipotent logarithm has components outside degrees {1,2}");
  }
  return {GroupElement(std::move(d), &alg), std::move(z1), std::move(z2)};
}

}  // namespace contact
