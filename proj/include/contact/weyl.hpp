#pragma once

#include <optional>
#include <vector>

#include "contact/algebra.hpp"
#include "contact/group.hpp"

namespace contact {

/// Image (xi_-2, xi_-1) of a tangent vector under a frame isomorphism: a
/// coefficient on the g_-2 basis vector plus an element of g_-1.
struct GradedVector {
  Rational xi2;
  AlgebraElement xi1;

  AlgebraElement xi2_element() const {
    const GradedContactAlgebra& alg = *xi1.alg;
    std::vector<Rational> c(alg.dim(), Rational(0));
    c[alg.degree_indices(-2)[0]] = xi2;
    return alg.element_from_coeffs(c);
  }

  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return a.xi2 == b.xi2 && a.xi1 == b.xi1;
  }
  friend bool operator!=(const GradedVector& a, const GradedVector& b) { return !(a == b); }
};

/// Data (U1, U2) in g_1 x g_2 relating two frames at a point.
struct FrameChange {
  AlgebraElement u1;
  AlgebraElement u2;
};

/// Frame change on graded vectors: (xi_-2, xi_-1 - [U1, xi_-2]).
inline GradedVector soldering_change(const AlgebraElement& u1, const GradedVector& v) {
  return {v.xi2, v.xi1 - bracket(u1, v.xi2_element())};
}

/// The connection-change operator 1/2 [U1,[U1,xi_-2]] - [U2,xi_-2] - [U1,xi_-1].
inline AlgebraElement connection_change_operator(const FrameChange& fc, const GradedVector& v) {
  AlgebraElement x2 = v.xi2_element();
  return Rational(1, 2) * bracket(fc.u1, bracket(fc.u1, x2)) - bracket(fc.u2, x2) -
         bracket(fc.u1, v.xi1);
}

/// The correction -1/2 U1 that turns a frame into an almost-invariant one.
inline AlgebraElement almost_invariant_correction(const AlgebraElement& u1) {
  return Rational(-1, 2) * u1;
}

/// The group identity behind the correction:
/// exp(U1) exp(U2) exp(-1/2 U1) = exp(1/2 U1) exp(U2), as exact matrices.
inline bool almost_invariant_identity_holds(const AlgebraElement& u1, const AlgebraElement& u2) {
  GroupElement lhs =
      exp_nilpotent(u1) * exp_nilpotent(u2) * exp_nilpotent(almost_invariant_correction(u1));
  GroupElement rhs = exp_nilpotent(Rational(1, 2) * u1) * exp_nilpotent(u2);
  return lhs == rhs;
}

/// For nonzero Z2 in g_2, the element X in g_-2 with [Z2, X] = E.
inline std::pair<AlgebraElement, bool> grading_element_pairing(const GradedContactAlgebra& alg,
                                                               const AlgebraElement& z2) {
  if (z2.is_zero()) throw ZeroInput("Z2 must be nonzero");
  for (const auto& [deg, part] : grade_decompose(z2))
    if (deg != 2) throw DegreeMismatch("Z2 must lie in g_2");
  AlgebraElement low = alg.basis_element(alg.degree_indices(-2)[0]);
  // [Z2, low] = kappa * E with kappa != 0 (the bracket g_2 x g_-2 spans E)
  std::vector<Rational> c = alg.decompose(bracket(z2, low).m);
  // extract kappa against E's coefficients
  std::vector<Rational> e = alg.decompose(alg.grading_matrix());
  Rational kappa;
  for (int b = 0; b < alg.dim(); ++b)
    if (e[b] != 0) {
      kappa = Rational(c[b] / e[b]);
      break;
    }
  if (kappa == 0) throw ConstructionFailure("[Z2, g_-2] does not reach the grading element");
  AlgebraElement x = Rational(1 / kappa) * low;
  bool check = bracket(z2, x) == alg.grading_element();
  return {x, check};
}

/// A graded tensor: element of a tensor product of copies of g and g*, with
/// dense coefficients over basis tuples (dual slots indexed by the dual basis).
class GradedTensor {
 public:
  GradedTensor(const GradedContactAlgebra& alg, std::vector<bool> dual_slots)
      : alg_(&alg), dual_(std::move(dual_slots)) {
    std::size_t total = 1;
    for (std::size_t s = 0; s < dual_.size(); ++s) total *= alg.dim();
    coeff_.assign(total, Rational(0));
  }

  const GradedContactAlgebra& algebra() const { return *alg_; }
  int slots() const { return static_cast<int>(dual_.size()); }
  bool dual(int s) const { return dual_[s]; }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  Rational& at(const std::vector<int>& idx) { return coeff_[flatten(idx)]; }
  const Rational& at(const std::vector<int>& idx) const { return coeff_[flatten(idx)]; }

  bool is_zero() const {
    for (const auto& c : coeff_)
      if (c != 0) return false;
    return true;
  }

  /// Homogeneity of a basis tuple: degree on g slots, minus degree on g* slots.
  int tuple_homogeneity(const std::vector<int>& idx) const {
    int l = 0;
    for (int s = 0; s < slots(); ++s) l += dual_[s] ? -alg_->degree(idx[s]) : alg_->degree(idx[s]);
    return l;
  }

  /// The common homogeneity of all nonzero components, if one exists.
  std::optional<int> homogeneity() const {
    std::optional<int> hom;
    std::vector<int> idx(slots(), 0);
    for (std::size_t flat = 0; flat < coeff_.size(); ++flat) {
      if (coeff_[flat] != 0) {
        int l = tuple_homogeneity(unflatten(flat));
        if (hom && *hom != l) return std::nullopt;
        hom = l;
      }
    }
    return hom;
  }

  GradedTensor operator-() const {
    GradedTensor r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
  }
  GradedTensor& operator+=(const GradedTensor& o) {
    check_shape(o);
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
    return *this;
  }
  GradedTensor& operator-=(const GradedTensor& o) {
    check_shape(o);
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
    return *this;
  }
  GradedTensor& operator*=(const Rational& s) {
    for (auto& c : coeff_) c *= s;
    return *this;
  }
  friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
  friend GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
  friend GradedTensor operator*(const Rational& s, GradedTensor t) { return t *= s; }
  friend bool operator==(const GradedTensor& a, const GradedTensor& b) {
    return a.alg_ == b.alg_ && a.dual_ == b.dual_ && a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const GradedTensor& a, const GradedTensor& b) { return !(a == b); }

  friend GradedTensor tensor_product(const GradedTensor& a, const GradedTensor& b) {
    if (a.alg_ != b.alg_) throw AlgebraMismatch("tensors over different algebras");
    std::vector<bool> slots = a.dual_;
    slots.insert(slots.end(), b.dual_.begin(), b.dual_.end());
    GradedTensor r(*a.alg_, slots);
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
      if (a.coeff_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeff_.size(); ++j)
        if (b.coeff_[j] != 0)
          r.coeff_[i * b.coeff_.size() + j] = Rational(a.coeff_[i] * b.coeff_[j]);
    }
    return r;
  }

  std::vector<int> unflatten(std::size_t flat) const {
    std::vector<int> idx(slots());
    for (int s = slots() - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(flat % alg_->dim());
      flat /= alg_->dim();
    }
    return idx;
  }

 private:
  std::size_t flatten(const std::vector<int>& idx) const {
    std::size_t flat = 0;
    for (int s = 0; s < slots(); ++s) flat = flat * alg_->dim() + idx[s];
    return flat;
  }
  void check_shape(const GradedTensor& o) const {
    if (alg_ != o.alg_ || dual_ != o.dual_) throw AlgebraMismatch("tensor shapes differ");
  }

  const GradedContactAlgebra* alg_;
  std::vector<bool> dual_;
  std::vector<Rational> coeff_;
};

/// Matrix of ad(A) on the basis: column b holds the coefficients of [A, e_b].
inline QMatrix ad_matrix(const AlgebraElement& a) {
  const GradedContactAlgebra& alg = *a.alg;
  QMatrix m(alg.dim(), alg.dim());
  for (int b = 0; b < alg.dim(); ++b) {
    std::vector<Rational> c = alg.decompose(bracket(a, alg.basis_element(b)).m);
    for (int r = 0; r < alg.dim(); ++r) m(r, b) = c[r];
  }
  return m;
}

/// Derivation action of A on a tensor: ad(A) on g slots, minus the transpose
/// of ad(A) on g* slots.
inline GradedTensor bullet_action(const AlgebraElement& a, const GradedTensor& t) {
  const GradedContactAlgebra& alg = t.algebra();
  if (a.alg != &alg) throw AlgebraMismatch("elements of different algebras");
  QMatrix ad = ad_matrix(a);
  GradedTensor out(alg, [&] {
    std::vector<bool> d;
    for (int s = 0; s < t.slots(); ++s) d.push_back(t.dual(s));
    return d;
  }());
  int dim = alg.dim();
  const auto& coeff = t.coefficients();
  for (std::size_t flat = 0; flat < coeff.size(); ++flat) {
    if (coeff[flat] == 0) continue;
    std::vector<int> idx = t.unflatten(flat);
    for (int s = 0; s < t.slots(); ++s) {
      std::vector<int> jdx = idx;
      for (int r = 0; r < dim; ++r) {
        Rational w = t.dual(s) ? Rational(-ad(idx[s], r)) : ad(r, idx[s]);
        if (w == 0) continue;
        jdx[s] = r;
        out.at(jdx) += Rational(w * coeff[flat]);
      }
    }
  }
  return out;
}

/// The companion element X in g_-1 and the coefficient c with [X, U1] = c * E;
/// c != 0 is the obstruction to two distinct involutive symmetries.
inline std::pair<AlgebraElement, Rational> obstruction_pairing(const GradedContactAlgebra& alg,
                                                               const AlgebraElement& u1) {
  Family fam = alg.spec().family;
  if (fam != Family::SL && fam != Family::SU)
    throw UnsupportedFamily("obstruction pairing available only for SL and SU");
  for (const auto& [deg, part] : grade_decompose(u1))
    if (deg != 1) throw DegreeMismatch("U1 must lie in g_1");
  int n = alg.matrix_size();
  GMatrix x(n, n);
  if (fam == Family::SL) {
    // U1 carries row S at (0, k) and column T at (k, n-1); the companion
    // carries T in the first column and S in the last row
    for (int k = 1; k < n - 1; ++k) {
      x(k, 0) = u1.m(k, n - 1);      // T_k
      x(n - 1, k) = u1.m(0, k);      // S_k
    }
  } else {
    // U1 carries row S at (0, k); the companion column is I'S*, its last row -S
    for (int k = 1; k < n - 1; ++k) {
      Rational sign(k <= alg.spec().p ? 1 : -1);
      x(k, 0) = Gaussian(conj(u1.m(0, k)) * Gaussian(sign));
      x(n - 1, k) = -u1.m(0, k);
    }
  }
  AlgebraElement companion(x, &alg);
  if (!alg.contains(x)) throw ConstructionFailure("companion element left the algebra");
  AlgebraElement br = bracket(companion, u1);
  // br = c * E exactly
  std::vector<Rational> c = alg.decompose(br.m);
  std::vector<Rational> e = alg.decompose(alg.grading_matrix());
  Rational coeff;
  for (int b = 0; b < alg.dim(); ++b)
    if (e[b] != 0) {
      coeff = Rational(c[b] / e[b]);
      break;
    }
  if (br != coeff * alg.grading_element())
    throw ConstructionFailure("[X, U1] is not a multiple of the grading element");
  return {companion, coeff};
}

/// The compatible almost-complex / product structure J on g_-1: +1/-1 on the
/// two split halves for SL, the parameter rotation X -> -iX for SU.
inline AlgebraElement levi_rotation(const GradedContactAlgebra& alg, const AlgebraElement& xi) {
  Family fam = alg.spec().family;
  int n = alg.matrix_size();
  if (fam == Family::SL) {
    std::vector<Rational> c = alg.decompose(xi.m);
    for (int b = 0; b < alg.dim(); ++b) {
      if (c[b] == 0) continue;
      if (alg.degree(b) != -1) throw DegreeMismatch("argument must lie in g_-1");
      if (alg.side(b) == 'R') c[b] = -c[b];
    }
    return alg.element_from_coeffs(c);
  }
  if (fam == Family::SU) {
    for (const auto& [deg, part] : grade_decompose(xi))
      if (deg != -1) throw DegreeMismatch("argument must lie in g_-1");
    GMatrix out(n, n);
    Gaussian minus_i(Rational(0), Rational(-1));
    for (int k = 1; k < n - 1; ++k) {
      Gaussian param(minus_i * xi.m(k, 0));
      Rational sign(k <= alg.spec().p ? 1 : -1);
      out(k, 0) = param;
      out(n - 1, k) = Gaussian(Gaussian(-conj(param)) * Gaussian(sign));
    }
    if (!alg.contains(out)) throw ConstructionFailure("rotated element left the algebra");
    return {std::move(out), &alg};
  }
  throw UnsupportedFamily("rotation available only for SL and SU");
}

/// The pseudometric g(xi, eta): the g_-2 coefficient of [xi, J eta].
inline Rational levi_pseudometric(const GradedContactAlgebra& alg, const AlgebraElement& xi,
                                  const AlgebraElement& eta) {
  AlgebraElement br = bracket(xi, levi_rotation(alg, eta));
  std::vector<Rational> c = alg.decompose(br.m);
  return c[alg.degree_indices(-2)[0]];
}

enum class UniquenessVerdict { OBSTRUCTED, UNDECIDED };

/// OBSTRUCTED iff the obstruction coefficient is nonzero; cross-checked
/// against the pseudometric criterion (g(u_R, u_L) != 0 for SL, g(u, u) != 0
/// for SU, where u dualizes U1 through the trace pairing and the metric).
inline UniquenessVerdict uniqueness_verdict(const GradedContactAlgebra& alg,
                                            const AlgebraElement& u1) {
  auto [companion, coeff] = obstruction_pairing(alg, u1);
  bool obstructed = coeff != 0;

  // dualize U1: find u in g_-1 with g(u, xi) = Re tr(U1 xi) for all xi in g_-1
  const auto& m1 = alg.degree_indices(-1);
  int r = static_cast<int>(m1.size());
  QMatrix gram(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      gram(a, b) = levi_pseudometric(alg, alg.basis_element(m1[a]), alg.basis_element(m1[b]));
  std::vector<Rational> alpha(r);
  for (int b = 0; b < r; ++b) alpha[b] = trace_pairing(u1, alg.basis_element(m1[b]));
  auto sol = LinearSolver<Rational>(gram).solve(alpha);
  if (!sol) throw ConstructionFailure("pseudometric is degenerate");
  std::vector<Rational> ucoeff(alg.dim(), Rational(0));
  for (int a = 0; a < r; ++a) ucoeff[m1[a]] = (*sol)[a];
  AlgebraElement u = alg.element_from_coeffs(ucoeff);

  bool metric_obstructed;
  if (alg.spec().family == Family::SL) {
    std::vector<Rational> ul(alg.dim(), Rational(0)), ur(alg.dim(), Rational(0));
    for (int a = 0; a < r; ++a)
      (alg.side(m1[a]) == 'L' ? ul : ur)[m1[a]] = (*sol)[a];
    metric_obstructed = levi_pseudometric(alg, alg.element_from_coeffs(ur),
                                          alg.element_from_coeffs(ul)) != 0;
  } else {
    metric_obstructed = levi_pseudometric(alg, u, u) != 0;
  }
  if (metric_obstructed != obstructed)
    throw ConstructionFailure("obstruction coefficient and pseudometric criterion disagree");
  return obstructed ? UniquenessVerdict::OBSTRUCTED : UniquenessVerdict::UNDECIDED;
}

}  // namespace contact
