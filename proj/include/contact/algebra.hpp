#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "contact/errors.hpp"
#include "contact/matrix.hpp"
#include "contact/numeric.hpp"

namespace contact {

enum class Family { SL, SU, SP, SO };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SU: return "su";
    case Family::SP: return "sp";
    case Family::SO: return "so";
  }
  return "?";
}

/// Which algebra to build: sl(n+2,R), su(p+1,q+1), sp(2n+2,R), so(p+2,q+2).
struct AlgebraSpec {
  Family family = Family::SL;
  int n = 0;  // SL, SP
  int p = 0, q = 0;  // SU, SO

  /// Parses "sl:n=2", "su:p=1,q=1", "sp:n=1", "so:p=1,q=1".
  static AlgebraSpec parse(const std::string& text);

  std::string to_string() const {
    switch (family) {
      case Family::SL: return "sl:n=" + std::to_string(n);
      case Family::SP: return "sp:n=" + std::to_string(n);
      case Family::SU: return "su:p=" + std::to_string(p) + ",q=" + std::to_string(q);
      case Family::SO: return "so:p=" + std::to_string(p) + ",q=" + std::to_string(q);
    }
    return "?";
  }

  void validate() const {
    switch (family) {
      case Family::SL:
        if (n < 1) throw InvalidSpec("sl requires n >= 1");
        break;
      case Family::SP:
        if (n < 1) throw InvalidSpec("sp requires n >= 1");
        break;
      case Family::SU:
        if (p < 0 || q < 0 || p + q < 1) throw InvalidSpec("su requires p,q >= 0 and p+q >= 1");
        break;
      case Family::SO:
        if (p < 0 || q < 0 || p + q < 1) throw InvalidSpec("so requires p,q >= 0 and p+q >= 1");
        break;
    }
  }

  bool complex_entries() const { return family == Family::SU; }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.family == b.family && a.n == b.n && a.p == b.p && a.q == b.q;
  }
};

inline AlgebraSpec AlgebraSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidSpec("expected family:params, got '" + text + "'");
  std::string fam = text.substr(0, colon);
  AlgebraSpec spec;
  if (fam == "sl")
    spec.family = Family::SL;
  else if (fam == "su")
    spec.family = Family::SU;
  else if (fam == "sp")
    spec.family = Family::SP;
  else if (fam == "so")
    spec.family = Family::SO;
  else
    throw InvalidSpec("unknown family '" + fam + "'");
  std::map<std::string, int> kv;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidSpec("expected key=value in '" + text + "'");
    try {
      std::size_t used = 0;
      int value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw InvalidSpec("bad integer in '" + text + "'");
      if (!kv.emplace(item.substr(0, eq), value).second)
        throw InvalidSpec("duplicate key in '" + text + "'");
    } catch (const InvalidSpec&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidSpec("bad integer in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  auto need = [&](std::initializer_list<std::string> keys) {
    if (kv.size() != keys.size()) throw InvalidSpec("wrong parameters in '" + text + "'");
    for (const auto& k : keys)
      if (!kv.count(k)) throw InvalidSpec("missing parameter '" + k + "' in '" + text + "'");
  };
  if (spec.family == Family::SL || spec.family == Family::SP) {
    need({"n"});
    spec.n = kv["n"];
  } else {
    need({"p", "q"});
    spec.p = kv["p"];
    spec.q = kv["q"];
  }
  spec.validate();
  return spec;
}

class GradedContactAlgebra;

/// An element of a graded algebra: a matrix plus a pointer to its owner.
/// The owning algebra must outlive its elements.
struct AlgebraElement {
  GMatrix m;
  const GradedContactAlgebra* alg = nullptr;

  AlgebraElement() = default;
  AlgebraElement(GMatrix mat, const GradedContactAlgebra* a) : m(std::move(mat)), alg(a) {}

  bool is_zero() const { return m.is_zero(); }

  AlgebraElement operator-() const { return {-m, alg}; }
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.alg != b.alg) throw AlgebraMismatch("elements of different algebras");
    return {a.m + b.m, a.alg};
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.alg != b.alg) throw AlgebraMismatch("elements of different algebras");
    return {a.m - b.m, a.alg};
  }
  friend AlgebraElement operator*(const Rational& s, const AlgebraElement& x) {
    return {x.m * Gaussian(s), x.alg};
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.alg == b.alg && a.m == b.m;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }
};

/// Per-axiom verification outcome; `counterexample` holds the basis indices of
/// the first failure found (empty when everything passes).
struct VerificationReport {
  bool g_minus2_one_dimensional = false;
  bool degree_dims_balanced = false;     // dim g1 == dim g-1 and dim g2 == 1
  bool grading_element_acts = false;     // [E, X] = (deg X) * X on the basis
  bool brackets_graded = false;          // structure constants reproduce brackets, degree-additively
  bool levi_bracket_nondegenerate = false;
  bool g2_bracket_spans_grading_element = false;
  bool jacobi_identity = false;
  bool trace_pairing_graded = false;     // <g_i,g_j> = 0 unless i+j=0, nondegenerate at i=1,2
  std::string failed_check;
  std::vector<int> counterexample;

  bool all_ok() const {
    return g_minus2_one_dimensional && degree_dims_balanced && grading_element_acts &&
           brackets_graded && levi_bracket_nondegenerate && g2_bracket_spans_grading_element &&
           jacobi_identity && trace_pairing_graded;
  }
};

/// A contact-graded real simple Lie algebra realized by matrices.
///
/// Basis ordering: degrees ascending -2..2; inside a degree, matrix entries in
/// row-major order (real coordinate before imaginary for the unitary family).
/// For SL the degree +-1 bases fall into the two isotropic halves: the vectors
/// supported in the first column / first row come first (side 'L'), those in
/// the last row / last column after them (side 'R').
class GradedContactAlgebra {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  int matrix_size() const { return N_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int degree(int idx) const { return degs_[idx]; }
  const std::vector<int>& degrees() const { return degs_; }
  const std::vector<int>& weights() const { return weights_; }

  const GMatrix& basis_matrix(int idx) const { return basis_[idx]; }
  AlgebraElement basis_element(int idx) const { return {basis_[idx], this}; }
  AlgebraElement zero() const { return {GMatrix(N_, N_), this}; }

  const std::vector<int>& degree_indices(int deg) const { return by_degree_.at(deg); }
  int dim_of_degree(int deg) const { return static_cast<int>(by_degree_.at(deg).size()); }

  /// 'L' / 'R' for the split halves of the SL degree +-1 bases, '\0' otherwise.
  char side(int idx) const { return side_[idx]; }

  AlgebraElement grading_element() const { return {E_, this}; }
  const GMatrix& grading_matrix() const { return E_; }

  bool contains(const GMatrix& m) const { return try_decompose(m).has_value(); }

  /// Coefficients over the full basis; throws if m is outside the algebra.
  std::vector<Rational> decompose(const GMatrix& m) const {
    auto c = try_decompose(m);
    if (!c) throw Error("matrix does not lie in the algebra " + spec_.to_string());
    return *c;
  }

  std::optional<std::vector<Rational>> try_decompose(const GMatrix& m) const {
    if (m.rows() != N_ || m.cols() != N_) return std::nullopt;
    std::vector<Rational> v(ncoord_);
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j) {
        const Gaussian& z = m(i, j);
        if (ncomp_ == 1 && z.im != 0) return std::nullopt;
        v[coord(i, j, 0)] = z.re;
        if (ncomp_ == 2) v[coord(i, j, 1)] = z.im;
      }
    return solver_->solve(v);
  }

  AlgebraElement element_from_coeffs(const std::vector<Rational>& c) const {
    GMatrix m(N_, N_);
    for (int b = 0; b < dim(); ++b) {
      if (c[b] == 0) continue;
      m += basis_[b] * Gaussian(c[b]);
    }
    return {std::move(m), this};
  }

  /// Coefficients of [e_a, e_b] over the basis.
  const std::vector<Rational>& structure_constants(int a, int b) const {
    return sc_[a * dim() + b];
  }

  /// Test hook: a copy whose stored constant c[a][b][c] has been zeroed, so the
  /// bracket-consistency check of verify_contact_grading must fail on it.
  GradedContactAlgebra with_zeroed_structure_constant(int a, int b, int c) const {
    GradedContactAlgebra copy(*this);
    copy.solver_ = solver_;  // shared, immutable
    copy.sc_[a * dim() + b][c] = 0;
    return copy;
  }

 private:
  GradedContactAlgebra() = default;
  friend GradedContactAlgebra build_algebra(const AlgebraSpec& spec);

  int coord(int i, int j, int comp) const { return (i * N_ + j) * ncomp_ + comp; }

  AlgebraSpec spec_;
  int N_ = 0;       // matrix size
  int ncomp_ = 1;   // real coordinates per entry (2 for SU)
  int ncoord_ = 0;  // N*N*ncomp
  std::vector<int> weights_;
  std::vector<GMatrix> basis_;
  std::vector<int> degs_;
  std::vector<char> side_;
  std::map<int, std::vector<int>> by_degree_;
  GMatrix E_;
  std::vector<std::vector<Rational>> sc_;  // [a*dim+b] -> coefficients
  std::shared_ptr<const LinearSolver<Rational>> solver_;  // coords -> basis coefficients
};

inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.alg != y.alg || x.alg == nullptr) throw AlgebraMismatch("elements of different algebras");
  return {x.m * y.m - y.m * x.m, x.alg};
}

/// Real part of tr(XY) -- the invariant pairing used throughout.
inline Rational trace_pairing(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.alg != y.alg || x.alg == nullptr) throw AlgebraMismatch("elements of different algebras");
  return Gaussian((x.m * y.m).trace()).re;
}

/// Splits X into its homogeneous components; only nonzero degrees appear.
inline std::map<int, AlgebraElement> grade_decompose(const AlgebraElement& x) {
  if (x.alg == nullptr) throw AlgebraMismatch("element has no algebra");
  const GradedContactAlgebra& alg = *x.alg;
  std::vector<Rational> c = alg.decompose(x.m);
  std::map<int, std::vector<Rational>> per_deg;
  for (int b = 0; b < alg.dim(); ++b) {
    if (c[b] == 0) continue;
    auto& v = per_deg[alg.degree(b)];
    if (v.empty()) v.assign(alg.dim(), Rational(0));
    v[b] = c[b];
  }
  std::map<int, AlgebraElement> out;
  for (auto& [deg, v] : per_deg) out.emplace(deg, alg.element_from_coeffs(v));
  return out;
}

inline GradedContactAlgebra build_algebra(const AlgebraSpec& spec) {
  spec.validate();
  GradedContactAlgebra alg;
  alg.spec_ = spec;

  // Matrix size, diagonal weights, and the defining constraint equations.
  int N = 0;
  std::vector<int> w;
  GMatrix form;  // bilinear/Hermitian form for SU/SP/SO
  switch (spec.family) {
    case Family::SL:
      N = spec.n + 2;
      w.assign(N, 0);
      w.front() = 1;
      w.back() = -1;
      break;
    case Family::SU: {
      N = spec.p + spec.q + 2;
      w.assign(N, 0);
      w.front() = 1;
      w.back() = -1;
      form = GMatrix(N, N);
      form(0, N - 1) = Gaussian(1);
      form(N - 1, 0) = Gaussian(1);
      for (int k = 0; k < spec.p + spec.q; ++k)
        form(1 + k, 1 + k) = Gaussian(k < spec.p ? 1 : -1);
      break;
    }
    case Family::SP: {
      N = 2 * spec.n + 2;
      w.assign(N, 0);
      w.front() = 1;
      w.back() = -1;
      form = GMatrix(N, N);
      form(0, N - 1) = Gaussian(1);
      form(N - 1, 0) = Gaussian(-1);
      for (int k = 0; k < spec.n; ++k) {
        form(1 + k, 1 + spec.n + k) = Gaussian(1);
        form(1 + spec.n + k, 1 + k) = Gaussian(-1);
      }
      break;
    }
    case Family::SO: {
      int m = spec.p + spec.q;
      N = m + 4;
      w.assign(N, 0);
      w[0] = w[1] = 1;
      w[N - 2] = w[N - 1] = -1;
      form = GMatrix(N, N);
      form(0, N - 1) = Gaussian(1);
      form(N - 1, 0) = Gaussian(1);
      form(1, N - 2) = Gaussian(1);
      form(N - 2, 1) = Gaussian(1);
      for (int k = 0; k < m; ++k) form(2 + k, 2 + k) = Gaussian(k < spec.p ? 1 : -1);
      break;
    }
  }
  alg.N_ = N;
  alg.weights_ = w;
  alg.ncomp_ = spec.complex_entries() ? 2 : 1;
  alg.ncoord_ = N * N * alg.ncomp_;
  auto cidx = [&](int i, int j, int c) { return (i * N + j) * alg.ncomp_ + c; };

  // Assemble the linear constraint rows over real entry-coordinates.
  std::vector<std::vector<Rational>> eqs;
  auto push_if_nonzero = [&](std::vector<Rational>&& eq) {
    for (const Rational& x : eq)
      if (x != 0) {
        eqs.push_back(std::move(eq));
        return;
      }
  };
  if (spec.family == Family::SL) {
    std::vector<Rational> eq(alg.ncoord_);
    for (int i = 0; i < N; ++i) eq[cidx(i, i, 0)] = 1;
    eqs.push_back(std::move(eq));
  } else if (spec.family == Family::SP || spec.family == Family::SO) {
    // X^T S + S X = 0, entrywise: sum_k X[k][i] S[k][j] + S[i][k] X[k][j] = 0
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        std::vector<Rational> eq(alg.ncoord_);
        for (int k = 0; k < N; ++k) {
          if (!form(k, j).is_zero()) eq[cidx(k, i, 0)] += form(k, j).re;
          if (!form(i, k).is_zero()) eq[cidx(k, j, 0)] += form(i, k).re;
        }
        push_if_nonzero(std::move(eq));
      }
  } else {  // SU: X* H + H X = 0 (complex rows real-linearized) and tr X = 0
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        std::vector<Rational> eqr(alg.ncoord_), eqi(alg.ncoord_);
        for (int k = 0; k < N; ++k) {
          const Gaussian& h1 = form(k, j);  // conj(X[k][i]) * h1
          if (!h1.is_zero()) {
            eqr[cidx(k, i, 0)] += h1.re;
            eqr[cidx(k, i, 1)] += h1.im;
            eqi[cidx(k, i, 0)] += h1.im;
            eqi[cidx(k, i, 1)] -= h1.re;
          }
          const Gaussian& h2 = form(i, k);  // h2 * X[k][j]
          if (!h2.is_zero()) {
            eqr[cidx(k, j, 0)] += h2.re;
            eqr[cidx(k, j, 1)] -= h2.im;
            eqi[cidx(k, j, 0)] += h2.im;
            eqi[cidx(k, j, 1)] += h2.re;
          }
        }
        push_if_nonzero(std::move(eqr));
        push_if_nonzero(std::move(eqi));
      }
    std::vector<Rational> eqr(alg.ncoord_), eqi(alg.ncoord_);
    for (int i = 0; i < N; ++i) {
      eqr[cidx(i, i, 0)] = 1;
      eqi[cidx(i, i, 1)] = 1;
    }
    eqs.push_back(std::move(eqr));
    eqs.push_back(std::move(eqi));
  }

  // The constraints are ad(E)-invariant, so the solution space splits by the
  // weight class w_i - w_j of the entries; solve each class independently.
  for (int deg = -2; deg <= 2; ++deg) {
    std::vector<int> idxs;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (w[i] - w[j] == deg)
          for (int c = 0; c < alg.ncomp_; ++c) idxs.push_back(cidx(i, j, c));
    QMatrix sub(static_cast<int>(eqs.size()), static_cast<int>(idxs.size()));
    for (int r = 0; r < sub.rows(); ++r)
      for (int c = 0; c < sub.cols(); ++c) sub(r, c) = eqs[r][idxs[c]];
    for (const auto& nv : nullspace(sub)) {
      GMatrix m(N, N);
      for (std::size_t t = 0; t < idxs.size(); ++t) {
        if (nv[t] == 0) continue;
        int flat = idxs[t] / alg.ncomp_;
        int comp = idxs[t] % alg.ncomp_;
        Gaussian& z = m(flat / N, flat % N);
        if (comp == 0)
          z.re += nv[t];
        else
          z.im += nv[t];
      }
      alg.basis_.push_back(std::move(m));
      alg.degs_.push_back(deg);
    }
    alg.by_degree_[deg] = {};
  }
  int dim = static_cast<int>(alg.basis_.size());
  for (int b = 0; b < dim; ++b) alg.by_degree_[alg.degs_[b]].push_back(b);

  // L/R halves of the SL degree +-1 bases: each basis vector is a single entry
  // E_ij; the first column and first row carry one half, the last row/column
  // the other.
  alg.side_.assign(dim, '\0');
  if (spec.family == Family::SL) {
    for (int b = 0; b < dim; ++b) {
      if (alg.degs_[b] != 1 && alg.degs_[b] != -1) continue;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if (!alg.basis_[b](i, j).is_zero())
            alg.side_[b] = (j == 0 || i == 0) ? 'L' : 'R';
    }
  }

  // Grading element: diagonal of weights.
  alg.E_ = GMatrix(N, N);
  for (int i = 0; i < N; ++i) alg.E_(i, i) = Gaussian(Rational(w[i]));

  // Decomposition solver over coordinates x basis columns.
  QMatrix bmat(alg.ncoord_, dim);
  for (int b = 0; b < dim; ++b)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const Gaussian& z = alg.basis_[b](i, j);
        bmat(cidx(i, j, 0), b) = z.re;
        if (alg.ncomp_ == 2) bmat(cidx(i, j, 1), b) = z.im;
      }
  alg.solver_ = std::make_shared<LinearSolver<Rational>>(bmat);
  if (alg.solver_->rank() != dim)
    throw ConstructionFailure("basis of " + spec.to_string() + " is linearly dependent");

  // Structure constants.
  alg.sc_.resize(static_cast<std::size_t>(dim) * dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      GMatrix comm = alg.basis_[a] * alg.basis_[b] - alg.basis_[b] * alg.basis_[a];
      auto c = alg.try_decompose(comm);
      if (!c) throw ConstructionFailure("bracket left the algebra " + spec.to_string());
      alg.sc_[a * dim + b] = *c;
      std::vector<Rational> neg(dim);
      for (int t = 0; t < dim; ++t) neg[t] = -(*c)[t];
      alg.sc_[b * dim + a] = std::move(neg);
    }
  return alg;
}

/// Checks every contact-grading axiom; failures are report entries, never throws.
inline VerificationReport verify_contact_grading(const GradedContactAlgebra& alg) {
  VerificationReport rep;
  int dim = alg.dim();
  auto fail = [&](const std::string& check, std::vector<int> ce) {
    if (rep.failed_check.empty()) {
      rep.failed_check = check;
      rep.counterexample = std::move(ce);
    }
  };

  rep.g_minus2_one_dimensional = alg.dim_of_degree(-2) == 1;
  if (!rep.g_minus2_one_dimensional) fail("g_minus2_one_dimensional", {});
  rep.degree_dims_balanced =
      alg.dim_of_degree(1) == alg.dim_of_degree(-1) && alg.dim_of_degree(2) == 1;
  if (!rep.degree_dims_balanced) fail("degree_dims_balanced", {});

  // [E, X] = (deg X) * X on every basis vector.
  rep.grading_element_acts = true;
  const GMatrix& E = alg.grading_matrix();
  for (int b = 0; b < dim && rep.grading_element_acts; ++b) {
    GMatrix lhs = E * alg.basis_matrix(b) - alg.basis_matrix(b) * E;
    if (lhs != alg.basis_matrix(b) * Gaussian(Rational(alg.degree(b)))) {
      rep.grading_element_acts = false;
      fail("grading_element_acts", {b});
    }
  }

  // Stored constants reproduce the matrix brackets and respect the grading.
  rep.brackets_graded = true;
  for (int a = 0; a < dim && rep.brackets_graded; ++a)
    for (int b = 0; b < dim && rep.brackets_graded; ++b) {
      const auto& c = alg.structure_constants(a, b);
      GMatrix sum(alg.matrix_size(), alg.matrix_size());
      for (int t = 0; t < dim; ++t) {
        if (c[t] == 0) continue;
        if (alg.degree(t) != alg.degree(a) + alg.degree(b)) {
          rep.brackets_graded = false;
          fail("brackets_graded", {a, b, t});
        }
        sum += alg.basis_matrix(t) * Gaussian(c[t]);
      }
      GMatrix comm = alg.basis_matrix(a) * alg.basis_matrix(b) -
                     alg.basis_matrix(b) * alg.basis_matrix(a);
      if (sum != comm) {
        rep.brackets_graded = false;
        fail("brackets_graded", {a, b});
      }
    }

  // Non-degeneracy of g_-1 x g_-1 -> g_-2 (coefficient on the g_-2 basis).
  {
    const auto& m1 = alg.degree_indices(-1);
    int g2idx = alg.degree_indices(-2)[0];
    QMatrix gram(static_cast<int>(m1.size()), static_cast<int>(m1.size()));
    for (std::size_t a = 0; a < m1.size(); ++a)
      for (std::size_t b = 0; b < m1.size(); ++b)
        gram(static_cast<int>(a), static_cast<int>(b)) =
            alg.structure_constants(m1[a], m1[b])[g2idx];
    rep.levi_bracket_nondegenerate = rank(gram) == gram.rows();
    if (!rep.levi_bracket_nondegenerate) fail("levi_bracket_nondegenerate", {});
  }

  // [g_-2, g_2] spans E.
  {
    int lo = alg.degree_indices(-2)[0];
    int hi = alg.degree_indices(2)[0];
    GMatrix comm = alg.basis_matrix(lo) * alg.basis_matrix(hi) -
                   alg.basis_matrix(hi) * alg.basis_matrix(lo);
    rep.g2_bracket_spans_grading_element = false;
    if (!comm.is_zero()) {
      // comm must be a nonzero rational multiple of E
      Gaussian lam;
      for (int i = 0; i < alg.matrix_size() && lam.is_zero(); ++i)
        if (!alg.grading_matrix()(i, i).is_zero())
          lam = comm(i, i) / alg.grading_matrix()(i, i);
      rep.g2_bracket_spans_grading_element =
          !lam.is_zero() && comm == alg.grading_matrix() * lam;
    }
    if (!rep.g2_bracket_spans_grading_element)
      fail("g2_bracket_spans_grading_element", {lo, hi});
  }

  // Jacobi on basis triples a < b < c (the rest follow by antisymmetry).
  rep.jacobi_identity = true;
  for (int a = 0; a < dim && rep.jacobi_identity; ++a)
    for (int b = a + 1; b < dim && rep.jacobi_identity; ++b)
      for (int c = b + 1; c < dim && rep.jacobi_identity; ++c) {
        std::vector<Rational> acc(dim);
        auto add_term = [&](int x, int y, int z) {
          // [e_x, [e_y, e_z]]
          const auto& inner = alg.structure_constants(y, z);
          for (int t = 0; t < dim; ++t) {
            if (inner[t] == 0) continue;
            const auto& outer = alg.structure_constants(x, t);
            for (int s = 0; s < dim; ++s)
              if (outer[s] != 0) acc[s] += Rational(inner[t] * outer[s]);
          }
        };
        add_term(a, b, c);
        add_term(b, c, a);
        add_term(c, a, b);
        for (int s = 0; s < dim; ++s)
          if (acc[s] != 0) {
            rep.jacobi_identity = false;
            fail("jacobi_identity", {a, b, c});
            break;
          }
      }

  // Trace pairing: block off-diagonal zero, nondegenerate on g_i x g_-i, i=1,2.
  rep.trace_pairing_graded = true;
  for (int a = 0; a < dim && rep.trace_pairing_graded; ++a)
    for (int b = 0; b < dim; ++b) {
      Rational t = Gaussian((alg.basis_matrix(a) * alg.basis_matrix(b)).trace()).re;
      if (alg.degree(a) + alg.degree(b) != 0 && t != 0) {
        rep.trace_pairing_graded = false;
        fail("trace_pairing_graded", {a, b});
        break;
      }
    }
  for (int i = 1; i <= 2 && rep.trace_pairing_graded; ++i) {
    const auto& up = alg.degree_indices(i);
    const auto& dn = alg.degree_indices(-i);
    QMatrix gram(static_cast<int>(up.size()), static_cast<int>(dn.size()));
    for (std::size_t a = 0; a < up.size(); ++a)
      for (std::size_t b = 0; b < dn.size(); ++b)
        gram(static_cast<int>(a), static_cast<int>(b)) =
            Gaussian((alg.basis_matrix(up[a]) * alg.basis_matrix(dn[b])).trace()).re;
    if (rank(gram) != gram.rows()) {
      rep.trace_pairing_graded = false;
      fail("trace_pairing_graded", {i});
    }
  }
  return rep;
}

}  // namespace contact
