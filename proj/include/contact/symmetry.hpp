#pragma once

#include <vector>

#include "contact/algebra.hpp"
#include "contact/group.hpp"

namespace contact {

/// Candidate symmetry at the origin of the homogeneous model:
/// the group element g0 * exp(Z1) * exp(Z2).
struct SymmetryCandidate {
  ProjectiveGroupElement g0;  // grading-preserving
  AlgebraElement z1;          // in g_1
  AlgebraElement z2;          // in g_2

  GroupElement assemble() const {
    return contact::assemble(g0.representative, z1, z2);
  }
};

/// The unique (mod center) grading-preserving element acting as -id on g_-1.
///
/// Solves the linear system g X + X g = 0 over weight-block-diagonal matrices
/// for every basis X of g_-1, verifies the solution space is one projective
/// point, and checks the defining properties (-id on g_-1, +id on g_-2,
/// conjugation preserves the algebra).
inline ProjectiveGroupElement find_minus_identity(const GradedContactAlgebra& alg) {
  int n = alg.matrix_size();
  const auto& w = alg.weights();
  // unknown entries: (i,j) with w_i == w_j; the system g X + X g = 0 is
  // complex-linear, so one Gaussian unknown per entry covers all families
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w[i] == w[j]) slots.emplace_back(i, j);
  int ncols = static_cast<int>(slots.size());

  const auto& m1 = alg.degree_indices(-1);
  // each matrix equation gX + Xg = 0 contributes n*n entry equations
  std::vector<std::vector<Gaussian>> rows;
  for (int bi : m1) {
    const GMatrix& x = alg.basis_matrix(bi);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Gaussian> row(ncols);
        bool nonzero = false;
        for (int s = 0; s < ncols; ++s) {
          auto [a, b] = slots[s];
          Gaussian coeff{};
          if (a == i) coeff += x(b, j);  // (g x)(i,j) term g(i,b) x(b,j)
          if (b == j) coeff += x(i, a);  // (x g)(i,j) term x(i,a) g(a,j)
          if (coeff.is_zero()) continue;
          nonzero = true;
          row[s] += coeff;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  GMatrix sys(static_cast<int>(rows.size()), ncols);
  for (int r = 0; r < sys.rows(); ++r)
    for (int c = 0; c < ncols; ++c) sys(r, c) = rows[r][c];
  auto sols = nullspace(sys);
  if (sols.empty()) throw NotFound("no grading-preserving element acts as -id on g_-1");

  auto to_matrix = [&](const std::vector<Gaussian>& v) {
    GMatrix g(n, n);
    for (int s = 0; s < ncols; ++s) g(slots[s].first, slots[s].second) = v[s];
    return g;
  };

  // uniqueness mod center: every solution is a scalar multiple of the first
  GMatrix rep = to_matrix(sols[0]);
  for (std::size_t k = 1; k < sols.size(); ++k) {
    GMatrix other = to_matrix(sols[k]);
    Gaussian lambda{};
    for (int i = 0; i < n && lambda.is_zero(); ++i)
      for (int j = 0; j < n && lambda.is_zero(); ++j)
        if (!rep(i, j).is_zero()) lambda = other(i, j) / rep(i, j);
    if (lambda.is_zero() || other != rep * lambda)
      throw NotFound("the -id action on g_-1 is not unique mod center");
  }

  GroupElement g0(std::move(rep), &alg);
  if (!try_inverse(g0.m)) throw NotFound("the -id candidate is singular");
  // defining properties, re-checked
  for (int bi : alg.degree_indices(-1))
    if (adjoint(g0, alg.basis_element(bi)) != -alg.basis_element(bi))
      throw NotFound("candidate does not act as -id on g_-1");
  for (int bi : alg.degree_indices(-2))
    if (adjoint(g0, alg.basis_element(bi)) != alg.basis_element(bi))
      throw NotFound("candidate does not act as +id on g_-2");
  return ProjectiveGroupElement(std::move(g0));
}

/// True iff the inverse of g0 exp(Z1) exp(Z2) acts as -id on the g_-1 part of g/p.
inline bool is_symmetry(const GradedContactAlgebra& alg, const SymmetryCandidate& cand) {
  GroupElement ginv = cand.assemble().inverse();
  for (std::size_t k = 0; k < alg.degree_indices(-1).size(); ++k) {
    QuotientVector v = QuotientVector::zero(alg);
    v.xi1[k] = 1;
    QuotientVector image;
    try {
      image = underline_adjoint(ginv, v);
    } catch (const Error&) {
      return false;
    }
    if (image != -v) return false;
  }
  return true;
}

/// The matrix square of the candidate; equals exp(2 Z2) mod center.
inline GroupElement symmetry_square(const GradedContactAlgebra& alg,
                                    const SymmetryCandidate& cand) {
  if (!is_symmetry(alg, cand)) throw NotASymmetry("candidate fails the symmetry condition");
  GroupElement g = cand.assemble();
  return g * g;
}

/// True iff the candidate squares to the identity mod center (<=> Z2 = 0).
inline bool is_involutive(const GradedContactAlgebra& alg, const SymmetryCandidate& cand) {
  return ProjectiveGroupElement(symmetry_square(alg, cand)).is_identity();
}

/// Closed-form involutivity test for the explicitly parameterized symmetry
/// matrices (-1, -V, c; 0, I, W; 0, 0, -1):
///   SL: c = -1/2 V.W;   SU: c = 1/2 Z I' Z* (with W = -I'Z*).
/// Agrees with is_involutive(factorize_parabolic(raw)) on the whole family.
inline bool involutive_closed_form(const GradedContactAlgebra& alg, const GroupElement& raw) {
  Family fam = alg.spec().family;
  if (fam != Family::SL && fam != Family::SU)
    throw UnsupportedFamily("closed form available only for SL and SU");
  int n = alg.matrix_size();
  const GMatrix& g = raw.m;
  // corner shape checks of the parameterization
  if (g(0, 0) != Gaussian(-1) || g(n - 1, n - 1) != Gaussian(-1))
    throw Error("matrix is not in the symmetry parameterization");
  Gaussian corner = g(0, n - 1);
  // accumulate V.W (SL) or Z I' Z* (SU) from the off-diagonal blocks
  Gaussian dot{};
  for (int k = 1; k < n - 1; ++k) {
    if (fam == Family::SL) {
      // top row carries -V, last column carries W
      dot += Gaussian(-g(0, k) * g(k, n - 1));
    } else {
      // top row carries -Z; Z I' Z* = sum_k s_k |Z_k|^2 with s_k the form signs
      Gaussian zk = -g(0, k);
      Rational sign(k <= alg.spec().p ? 1 : -1);
      dot += Gaussian(zk * conj(zk) * Gaussian(sign));
    }
  }
  if (fam == Family::SL) return corner == Gaussian(Gaussian(Rational(-1, 2)) * dot);
  return corner == Gaussian(Gaussian(Rational(1, 2)) * dot);
}

/// h g h^{-1}: the same symmetry transported to the point h.origin.
inline GroupElement transport_symmetry(const SymmetryCandidate& cand, const GroupElement& h) {
  GroupElement g = cand.assemble();
  return h * g * h.inverse();
}

}  // namespace contact
