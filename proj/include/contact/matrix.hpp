#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "contact/errors.hpp"
#include "contact/numeric.hpp"

namespace contact {

/// Dense matrix over an exact field (Rational or Gaussian).
template <class F>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  F& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const F& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const F& x : a_)
      if (!contact::is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

  DenseMatrix operator-() const {
    DenseMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
  }
  DenseMatrix& operator+=(const DenseMatrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  DenseMatrix& operator*=(const F& s) {
    for (F& x : a_) x *= s;
    return *this;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const F& s) { return a *= s; }
  friend DenseMatrix operator*(const F& s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.cols_ == b.rows_);
    DenseMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (contact::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (contact::is_zero(b(k, j))) continue;
          c(i, j) += F(aik * b(k, j));
        }
      }
    return c;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix conj_transpose() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
    return t;
  }

  F trace() const {
    assert(rows_ == cols_);
    F t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  std::vector<F> operator*(const std::vector<F>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<F> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!contact::is_zero((*this)(i, j))) r[i] += F((*this)(i, j) * v[j]);
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<F> a_;
};

using QMatrix = DenseMatrix<Rational>;
using GMatrix = DenseMatrix<Gaussian>;

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<int> rref(DenseMatrix<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
    F inv = F(1) / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= F(f * m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(DenseMatrix<F> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of the right nullspace, one vector per free column.
template <class F>
std::vector<std::vector<F>> nullspace(DenseMatrix<F> m) {
  int cols = m.cols();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<F> v(cols);
    v[fc] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<DenseMatrix<F>> try_inverse(const DenseMatrix<F>& m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  DenseMatrix<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
  DenseMatrix<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class F>
DenseMatrix<F> inverse(const DenseMatrix<F>& m) {
  auto inv = try_inverse(m);
  if (!inv) throw Error("matrix not invertible");
  return *inv;
}

/// Solves A x = v repeatedly against a fixed A: precomputes rref of [A | I].
template <class F>
class LinearSolver {
 public:
  explicit LinearSolver(const DenseMatrix<F>& a) : rows_(a.rows()), cols_(a.cols()) {
    DenseMatrix<F> aug(rows_, cols_ + rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = a(i, j);
      aug(i, cols_ + i) = F(1);
    }
    pivots_ = rref(aug);
    // drop pivots that landed in the identity block (rank-deficient rows)
    while (!pivots_.empty() && pivots_.back() >= cols_) pivots_.pop_back();
    red_ = std::move(aug);
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

  /// A solution with free variables set to zero, or nullopt if inconsistent.
  std::optional<std::vector<F>> solve(const std::vector<F>& v) const {
    assert(static_cast<int>(v.size()) == rows_);
    std::vector<F> x(cols_);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      F w{};
      for (int i = 0; i < rows_; ++i)
        if (!is_zero(v[i])) w += F(red_(static_cast<int>(r), cols_ + i) * v[i]);
      x[pivots_[r]] = w;
    }
    // consistency: rows past the rank must annihilate v
    for (int r = rank(); r < rows_; ++r) {
      F w{};
      for (int i = 0; i < rows_; ++i)
        if (!is_zero(v[i])) w += F(red_(r, cols_ + i) * v[i]);
      if (!is_zero(w)) return std::nullopt;
    }
    return x;
  }

 private:
  int rows_, cols_;
  DenseMatrix<F> red_;
  std::vector<int> pivots_;
};

/// Signature (positive, negative, zero inertia) of a symmetric rational matrix,
/// by exact congruence diagonalization.
inline std::tuple<int, int, int> signature(QMatrix m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  int pos = 0, neg = 0, zero = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m(i, i) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // all remaining diagonal entries vanish; create one from an off-diagonal pair
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j)
          if (!done[j] && m(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
      }
      if (a < 0) {
        zero = n - pos - neg;
        break;
      }
      for (int j = 0; j < n; ++j) m(a, j) += m(b, j);
      for (int i = 0; i < n; ++i) m(i, a) += m(i, b);
      p = a;
    }
    Rational d = m(p, p);
    if (d > 0)
      ++pos;
    else
      ++neg;
    for (int i = 0; i < n; ++i) {
      if (i == p || done[i] || m(i, p) == 0) continue;
      Rational f(m(i, p) / d);
      for (int j = 0; j < n; ++j) m(i, j) -= Rational(f * m(p, j));
      for (int j = 0; j < n; ++j) m(j, i) -= Rational(f * m(j, p));
    }
    done[p] = true;
  }
  return {pos, neg, zero};
}

}  // namespace contact
