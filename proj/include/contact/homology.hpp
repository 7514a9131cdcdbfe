#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "contact/algebra.hpp"
#include "contact/group.hpp"

namespace contact {

/// One harmonic component: homogeneity, type label (i, j, k) with i >= j the
/// argument degrees and k minus the value degree, and its dimension.
struct HarmonicEntry {
  int homogeneity = 0;
  std::array<int, 3> type{};
  int dim = 0;

  friend bool operator==(const HarmonicEntry& a, const HarmonicEntry& b) {
    return a.homogeneity == b.homogeneity && a.type == b.type && a.dim == b.dim;
  }
};

struct HarmonicReport {
  std::vector<HarmonicEntry> entries;  // sorted by (homogeneity, type)
};

/// An alternating 2-cochain on g_- with values in g, stored as coefficients
/// over ordered pairs (x < y) of the g_- basis times the full basis.
struct Cochain2 {
  const GradedContactAlgebra* alg = nullptr;
  std::vector<std::vector<Rational>> coeff;  // [pair index][basis index]

  bool is_zero() const {
    for (const auto& row : coeff)
      for (const auto& c : row)
        if (c != 0) return false;
    return true;
  }
  Cochain2 operator-() const {
    Cochain2 r = *this;
    for (auto& row : r.coeff)
      for (auto& c : row) c = -c;
    return r;
  }
  friend bool operator==(const Cochain2& a, const Cochain2& b) {
    return a.alg == b.alg && a.coeff == b.coeff;
  }
  friend bool operator!=(const Cochain2& a, const Cochain2& b) { return !(a == b); }
};

/// The chain complex Lambda^k p_+ (x) g for k = 1,2,3 with its homology
/// boundary, plus the cochain-side differential used to cut out harmonic
/// representatives.
class ChainComplex {
 public:
  struct Item {
    std::vector<int> combo;  // strictly increasing positions into plus()
    int value = 0;           // full-basis index
  };

  explicit ChainComplex(const GradedContactAlgebra& alg) : alg_(&alg) {
    for (int b = 0; b < alg.dim(); ++b) {
      if (alg.degree(b) > 0) plus_.push_back(b);
      if (alg.degree(b) < 0) minus_.push_back(b);
    }
    for (int k = 1; k <= 3; ++k) build_chain_basis(k);
    d2_ = boundary_matrix(2);
    d3_ = boundary_matrix(3);
    build_pairs();
    // Gram of the pairing p_+ x g_-  ->  dual-basis coefficients
    int r = static_cast<int>(plus_.size());
    gram_ = QMatrix(r, r);
    for (int a = 0; a < r; ++a)
      for (int x = 0; x < r; ++x)
        gram_(a, x) =
            Gaussian((alg.basis_matrix(plus_[a]) * alg.basis_matrix(minus_[x])).trace()).re;
    if (rank(gram_) != r) throw ConstructionFailure("p_+ x g_- trace pairing is degenerate");
  }

  const GradedContactAlgebra& algebra() const { return *alg_; }
  const std::vector<int>& plus() const { return plus_; }
  const std::vector<int>& minus() const { return minus_; }
  int chain_dim(int k) const { return static_cast<int>(basis(k).size()); }
  const std::vector<Item>& basis(int k) const {
    if (k < 1 || k > 3) throw DegreeMismatch("chain degree must be 1, 2 or 3");
    return bases_[k - 1];
  }
  const std::vector<std::pair<int, int>>& minus_pairs() const { return pairs_; }
  int pair_index(int x, int y) const { return pair_index_.at({std::min(x, y), std::max(x, y)}); }

  /// Total homogeneity of a chain basis item (argument degrees counted
  /// positively, value degree as-is).
  int item_homogeneity(const Item& it) const {
    int l = alg_->degree(it.value);
    for (int a : it.combo) l += alg_->degree(plus_[a]);
    return l;
  }

  /// Type label of a 2-chain item: argument degrees sorted descending, then
  /// minus the value degree.
  std::array<int, 3> item_type(const Item& it) const {
    int d0 = alg_->degree(plus_[it.combo[0]]);
    int d1 = alg_->degree(plus_[it.combo[1]]);
    return {std::max(d0, d1), std::min(d0, d1), -alg_->degree(it.value)};
  }

  const QMatrix& d(int k) const {
    if (k == 2) return d2_;
    if (k == 3) return d3_;
    throw DegreeMismatch("boundary defined for chain degrees 2 and 3");
  }

  /// Applies the boundary to a coefficient vector of C_k, k in {2,3}.
  std::vector<Rational> boundary(int k, const std::vector<Rational>& chain) const {
    const QMatrix& m = d(k);
    if (static_cast<int>(chain.size()) != m.cols())
      throw DegreeMismatch("chain coefficient count does not match C_" + std::to_string(k));
    return m * chain;
  }

  /// Converts 2-chain coefficients to Cochain2 coefficients through the dual
  /// pairing: the item (a<b, v) evaluates on (xi_x, xi_y) with coefficient
  /// G[a][x] G[b][y] - G[a][y] G[b][x].
  Cochain2 chain_to_cochain(const std::vector<Rational>& chain) const {
    Cochain2 c;
    c.alg = alg_;
    c.coeff.assign(pairs_.size(), std::vector<Rational>(alg_->dim(), Rational(0)));
    const auto& b2 = basis(2);
    for (std::size_t i = 0; i < b2.size(); ++i) {
      if (chain[i] == 0) continue;
      int a = b2[i].combo[0], b = b2[i].combo[1];
      for (std::size_t pidx = 0; pidx < pairs_.size(); ++pidx) {
        auto [x, y] = pairs_[pidx];
        Rational cf(gram_(a, x) * gram_(b, y) - gram_(a, y) * gram_(b, x));
        if (cf != 0) c.coeff[pidx][b2[i].value] += Rational(cf * chain[i]);
      }
    }
    return c;
  }

  /// Cochain basis element: pair (x<y) of g_- positions, full-basis value v.
  Cochain2 basis_cochain(int x, int y, int v) const {
    Cochain2 c;
    c.alg = alg_;
    c.coeff.assign(pairs_.size(), std::vector<Rational>(alg_->dim(), Rational(0)));
    c.coeff[pair_index(x, y)][v] = 1;
    return c;
  }

  /// Homogeneity of the cochain basis slot ((x,y), v).
  int cochain_homogeneity(int pidx, int v) const {
    auto [x, y] = pairs_[pidx];
    return -alg_->degree(minus_[x]) - alg_->degree(minus_[y]) + alg_->degree(v);
  }

  std::array<int, 3> cochain_type(int pidx, int v) const {
    auto [x, y] = pairs_[pidx];
    int i = -alg_->degree(minus_[x]);
    int j = -alg_->degree(minus_[y]);
    return {std::max(i, j), std::min(i, j), -alg_->degree(v)};
  }

  /// Chevalley-Eilenberg differential C^2(g_-, g) -> C^3(g_-, g) applied to a
  /// single cochain basis column; returns sparse (triple-cochain row, value).
  /// Row index: triple index t * dim + value, triples enumerated by triples().
  std::vector<std::pair<int, Rational>> cochain_differential_column(int pidx, int v) const {
    auto [x, y] = pairs_[pidx];
    int dim = alg_->dim();
    std::map<int, Rational> acc;
    int nm = static_cast<int>(minus_.size());
    // term 1: (dc)(trip) += (-1)^i [X_i, c(omit_i)] where omit_i == (x,y)
    for (int m = 0; m < nm; ++m) {
      if (m == x || m == y) continue;
      std::array<int, 3> trip = {x, y, m};
      std::sort(trip.begin(), trip.end());
      int i = static_cast<int>(std::find(trip.begin(), trip.end(), m) - trip.begin());
      const auto& coefs = alg_->structure_constants(minus_[m], v);
      int ti = triple_index(trip[0], trip[1], trip[2]);
      for (int wv = 0; wv < dim; ++wv)
        if (coefs[wv] != 0) acc[ti * dim + wv] += Rational(Rational(i % 2 ? -1 : 1) * coefs[wv]);
    }
    // term 2: (dc)(trip) += (-1)^{i+j} c([X_i, X_j], X_k)
    for (int kk : {x, y}) {
      int other = (kk == x) ? y : x;
      for (int pa = 0; pa < nm; ++pa)
        for (int pb = pa + 1; pb < nm; ++pb) {
          if (pa == kk || pb == kk) continue;
          const auto& coefs = alg_->structure_constants(minus_[pa], minus_[pb]);
          Rational cf = coefs[minus_[other]];
          if (cf == 0) continue;
          std::array<int, 3> trip = {pa, pb, kk};
          std::sort(trip.begin(), trip.end());
          int i = static_cast<int>(std::find(trip.begin(), trip.end(), pa) - trip.begin());
          int j = static_cast<int>(std::find(trip.begin(), trip.end(), pb) - trip.begin());
          Rational s((other < kk) ? 1 : -1);  // antisymmetry of the (x,y) slot
          int ti = triple_index(trip[0], trip[1], trip[2]);
          acc[ti * dim + v] += Rational(Rational((i + j) % 2 ? -1 : 1) * Rational(cf * s));
        }
    }
    std::vector<std::pair<int, Rational>> out;
    for (auto& [row, val] : acc)
      if (val != 0) out.emplace_back(row, val);
    return out;
  }

  const std::vector<std::array<int, 3>>& triples() const { return triples_; }
  int triple_index(int a, int b, int c) const { return triple_index_.at({a, b, c}); }
  const QMatrix& trace_gram() const { return gram_; }

 private:
  void build_chain_basis(int k) {
    auto& out = bases_[k - 1];
    int np = static_cast<int>(plus_.size());
    std::vector<int> combo(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == k) {
        for (int v = 0; v < alg_->dim(); ++v) out.push_back({combo, v});
        return;
      }
      for (int a = start; a < np; ++a) {
        combo[depth] = a;
        rec(a + 1, depth + 1);
      }
    };
    rec(0, 0);
  }

  void build_pairs() {
    int nm = static_cast<int>(minus_.size());
    for (int x = 0; x < nm; ++x)
      for (int y = x + 1; y < nm; ++y) {
        pair_index_[{x, y}] = static_cast<int>(pairs_.size());
        pairs_.emplace_back(x, y);
      }
    for (int a = 0; a < nm; ++a)
      for (int b = a + 1; b < nm; ++b)
        for (int c = b + 1; c < nm; ++c) {
          triple_index_[{a, b, c}] = static_cast<int>(triples_.size());
          triples_.push_back({a, b, c});
        }
  }

  /// Standard Lie algebra homology boundary of p_+ with coefficients in g,
  /// with signs fixed so that boundary(2) o boundary(3) = 0.
  QMatrix boundary_matrix(int k) const {
    const auto& bk = basis(k);
    const auto& bkm1 = basis(k - 1);
    std::map<std::pair<std::vector<int>, int>, int> index;
    for (std::size_t i = 0; i < bkm1.size(); ++i)
      index[{bkm1[i].combo, bkm1[i].value}] = static_cast<int>(i);
    QMatrix m(static_cast<int>(bkm1.size()), static_cast<int>(bk.size()));
    int dim = alg_->dim();
    for (std::size_t col = 0; col < bk.size(); ++col) {
      const auto& [combo, v] = bk[col];
      // term 1: omit one factor, bracket it into the value
      for (std::size_t pos = 0; pos < combo.size(); ++pos) {
        int a = combo[pos];
        std::vector<int> rest;
        for (int x : combo)
          if (x != a) rest.push_back(x);
        const auto& coefs = alg_->structure_constants(plus_[a], v);
        Rational sign((pos + 1) % 2 ? -1 : 1);  // (-1)^(pos+1)
        for (int t = 0; t < dim; ++t)
          if (coefs[t] != 0)
            m(index.at({rest, t}), static_cast<int>(col)) += Rational(sign * coefs[t]);
      }
      // term 2: bracket two factors together
      for (std::size_t pi = 0; pi < combo.size(); ++pi)
        for (std::size_t pj = pi + 1; pj < combo.size(); ++pj) {
          int a = combo[pi], b = combo[pj];
          std::vector<int> rest;
          for (int x : combo)
            if (x != a && x != b) rest.push_back(x);
          const auto& coefs = alg_->structure_constants(plus_[a], plus_[b]);
          for (int t = 0; t < dim; ++t) {
            if (coefs[t] == 0) continue;
            // locate the bracket component inside p_+
            int ap = -1;
            for (std::size_t s = 0; s < plus_.size(); ++s)
              if (plus_[s] == t) ap = static_cast<int>(s);
            if (ap < 0) throw ConstructionFailure("p_+ bracket left p_+");
            if (std::find(rest.begin(), rest.end(), ap) != rest.end()) continue;
            std::vector<int> merged = rest;
            merged.push_back(ap);
            std::sort(merged.begin(), merged.end());
            int swaps = 0;  // sign of sorting ap to the front position
            for (int x : rest)
              if (x < ap) ++swaps;
            Rational sign(((pi + pj + swaps) % 2) ? -1 : 1);
            m(index.at({merged, v}), static_cast<int>(col)) += Rational(sign * coefs[t]);
          }
        }
    }
    return m;
  }

  const GradedContactAlgebra* alg_;
  std::vector<int> plus_, minus_;
  std::array<std::vector<Item>, 3> bases_;
  QMatrix d2_, d3_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::pair<int, int>, int> pair_index_;
  std::vector<std::array<int, 3>> triples_;
  std::map<std::array<int, 3>, int> triple_index_;
  QMatrix gram_;
};

/// Harmonic components ker d2 / im d3 per homogeneity and type. Dimensions are
/// computed twice (quotient ranks vs. an explicit representative space) and
/// cross-checked.
inline HarmonicReport harmonic_space(const GradedContactAlgebra& alg) {
  ChainComplex cx(alg);
  const auto& b1 = cx.basis(1);
  const auto& b2 = cx.basis(2);
  const auto& b3 = cx.basis(3);
  const QMatrix& d2 = cx.d(2);
  const QMatrix& d3 = cx.d(3);
  int dim = alg.dim();

  std::map<int, std::vector<int>> blocks1, blocks2, blocks3;
  for (std::size_t i = 0; i < b1.size(); ++i) blocks1[cx.item_homogeneity(b1[i])].push_back(int(i));
  for (std::size_t i = 0; i < b2.size(); ++i) blocks2[cx.item_homogeneity(b2[i])].push_back(int(i));
  for (std::size_t i = 0; i < b3.size(); ++i) blocks3[cx.item_homogeneity(b3[i])].push_back(int(i));

  HarmonicReport report;
  for (const auto& [l, cols2] : blocks2) {
    const auto& rows1 = blocks1.count(l) ? blocks1.at(l) : std::vector<int>{};
    const auto& cols3 = blocks3.count(l) ? blocks3.at(l) : std::vector<int>{};
    QMatrix sub2(static_cast<int>(rows1.size()), static_cast<int>(cols2.size()));
    for (std::size_t r = 0; r < rows1.size(); ++r)
      for (std::size_t c = 0; c < cols2.size(); ++c) sub2(int(r), int(c)) = d2(rows1[r], cols2[c]);
    QMatrix sub3(static_cast<int>(cols2.size()), static_cast<int>(cols3.size()));
    for (std::size_t r = 0; r < cols2.size(); ++r)
      for (std::size_t c = 0; c < cols3.size(); ++c) sub3(int(r), int(c)) = d3(cols2[r], cols3[c]);
    int nul = static_cast<int>(cols2.size()) - rank(sub2);
    int q = nul - rank(sub3);
    if (q == 0) continue;

    // representative space: ker d2 intersected with ker(cochain differential o
    // chain->cochain conversion); its dimension must reproduce q
    std::vector<std::map<int, Rational>> prodcols(cols2.size());
    for (std::size_t ci = 0; ci < cols2.size(); ++ci) {
      std::vector<Rational> unit(b2.size(), Rational(0));
      unit[cols2[ci]] = 1;
      Cochain2 coc = cx.chain_to_cochain(unit);
      for (std::size_t pidx = 0; pidx < cx.minus_pairs().size(); ++pidx)
        for (int v = 0; v < dim; ++v) {
          if (coc.coeff[pidx][v] == 0) continue;
          for (auto& [row, val] :
               cx.cochain_differential_column(static_cast<int>(pidx), v))
            prodcols[ci][row] += Rational(val * coc.coeff[pidx][v]);
        }
      for (auto it = prodcols[ci].begin(); it != prodcols[ci].end();)
        it = (it->second == 0) ? prodcols[ci].erase(it) : std::next(it);
    }
    std::vector<int> rows_used;
    {
      std::map<int, int> seen;
      for (const auto& pc : prodcols)
        for (const auto& [row, val] : pc)
          if (!seen.count(row)) {
            seen[row] = 1;
            rows_used.push_back(row);
          }
      std::sort(rows_used.begin(), rows_used.end());
    }
    QMatrix comb(sub2.rows() + static_cast<int>(rows_used.size()), sub2.cols());
    for (int r = 0; r < sub2.rows(); ++r)
      for (int c = 0; c < sub2.cols(); ++c) comb(r, c) = sub2(r, c);
    for (std::size_t rr = 0; rr < rows_used.size(); ++rr)
      for (std::size_t ci = 0; ci < cols2.size(); ++ci) {
        auto it = prodcols[ci].find(rows_used[rr]);
        if (it != prodcols[ci].end()) comb(sub2.rows() + int(rr), int(ci)) = it->second;
      }
    if (static_cast<int>(nullspace(comb).size()) != q)
      throw ConstructionFailure("harmonic representative space does not match quotient rank");

    // split by type: intersect with each type component by pinning the others
    std::vector<std::array<int, 3>> types;
    for (int c : cols2) {
      auto t = cx.item_type(b2[c]);
      if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
    }
    std::sort(types.begin(), types.end());
    int total = 0;
    for (const auto& t : types) {
      std::vector<int> other;
      for (std::size_t ci = 0; ci < cols2.size(); ++ci)
        if (cx.item_type(b2[cols2[ci]]) != t) other.push_back(int(ci));
      QMatrix comb2(comb.rows() + static_cast<int>(other.size()), comb.cols());
      for (int r = 0; r < comb.rows(); ++r)
        for (int c = 0; c < comb.cols(); ++c) comb2(r, c) = comb(r, c);
      for (std::size_t o = 0; o < other.size(); ++o)
        comb2(comb.rows() + int(o), other[o]) = 1;
      int tdim = static_cast<int>(nullspace(comb2).size());
      if (tdim > 0) {
        report.entries.push_back({l, t, tdim});
        total += tdim;
      }
    }
    if (total != q)
      throw ConstructionFailure("harmonic type split does not exhaust the quotient");
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const HarmonicEntry& a, const HarmonicEntry& b) {
              return std::tie(a.homogeneity, a.type) < std::tie(b.homogeneity, b.type);
            });
  return report;
}

/// Action of a grading-preserving g0 on a 2-cochain:
/// (g0 . c)(X, Y) = Ad(g0)^{-1} c(Ad(g0) X, Ad(g0) Y).
inline Cochain2 g0_action(const ProjectiveGroupElement& g0, const ChainComplex& cx,
                          const Cochain2& c) {
  const GradedContactAlgebra& alg = cx.algebra();
  QMatrix ad = adjoint_matrix(g0.representative);
  QMatrix adinv = adjoint_matrix(g0.representative.inverse());
  const auto& minus = cx.minus();
  int nm = static_cast<int>(minus.size());
  int dim = alg.dim();
  // restriction of Ad to g_- (grading-preserving, so it stays there)
  QMatrix a(nm, nm);
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) a(x, y) = ad(minus[x], minus[y]);
  Cochain2 out;
  out.alg = &alg;
  out.coeff.assign(cx.minus_pairs().size(), std::vector<Rational>(dim, Rational(0)));
  for (std::size_t pidx = 0; pidx < cx.minus_pairs().size(); ++pidx) {
    auto [x, y] = cx.minus_pairs()[pidx];
    // c(A e_x, A e_y) expanded over pairs, then Ad^{-1} on the value
    for (std::size_t qidx = 0; qidx < cx.minus_pairs().size(); ++qidx) {
      auto [xp, yp] = cx.minus_pairs()[qidx];
      Rational w(a(xp, x) * a(yp, y) - a(xp, y) * a(yp, x));
      if (w == 0) continue;
      for (int v = 0; v < dim; ++v) {
        if (c.coeff[qidx][v] == 0) continue;
        Rational scale(w * c.coeff[qidx][v]);
        for (int vp = 0; vp < dim; ++vp)
          if (adinv(vp, v) != 0) out.coeff[pidx][vp] += Rational(scale * adinv(vp, v));
      }
    }
  }
  return out;
}

/// True iff the action of exp(Z), Z in p_+, fixes the component of c in c's
/// own homogeneity (the action shifts everything else strictly upward).
inline bool p_plus_action_triviality(const AlgebraElement& z, const ChainComplex& cx,
                                     const Cochain2& c) {
  const GradedContactAlgebra& alg = cx.algebra();
  if (!z.is_zero())
    for (const auto& [deg, part] : grade_decompose(z))
      if (deg <= 0) throw NotNilpotentPart("Z must lie in p_+");
  // homogeneity of c (must be homogeneous)
  std::optional<int> hom;
  for (std::size_t pidx = 0; pidx < cx.minus_pairs().size(); ++pidx)
    for (int v = 0; v < alg.dim(); ++v) {
      if (c.coeff[pidx][v] == 0) continue;
      int l = cx.cochain_homogeneity(static_cast<int>(pidx), v);
      if (hom && *hom != l) throw DegreeMismatch("cochain is not homogeneous");
      hom = l;
    }
  if (!hom) return true;  // zero cochain

  GroupElement g = exp_nilpotent(z);
  GroupElement ginv = g.inverse();
  QMatrix ad = adjoint_matrix(g);
  const auto& minus = cx.minus();
  int nm = static_cast<int>(minus.size());
  int dim = alg.dim();
  // class of Ad(g^{-1}) e_x in g/p, expanded over the g_- basis
  QMatrix aq(nm, nm);
  {
    QMatrix adi = adjoint_matrix(ginv);
    for (int x = 0; x < nm; ++x)
      for (int y = 0; y < nm; ++y) aq(x, y) = adi(minus[x], minus[y]);
  }
  Cochain2 moved;
  moved.alg = &alg;
  moved.coeff.assign(cx.minus_pairs().size(), std::vector<Rational>(dim, Rational(0)));
  for (std::size_t pidx = 0; pidx < cx.minus_pairs().size(); ++pidx) {
    auto [x, y] = cx.minus_pairs()[pidx];
    for (std::size_t qidx = 0; qidx < cx.minus_pairs().size(); ++qidx) {
      auto [xp, yp] = cx.minus_pairs()[qidx];
      Rational w(aq(xp, x) * aq(yp, y) - aq(xp, y) * aq(yp, x));
      if (w == 0) continue;
      for (int v = 0; v < dim; ++v) {
        if (c.coeff[qidx][v] == 0) continue;
        Rational scale(w * c.coeff[qidx][v]);
        for (int vp = 0; vp < dim; ++vp)
          if (ad(vp, v) != 0) moved.coeff[pidx][vp] += Rational(scale * ad(vp, v));
      }
    }
  }
  // compare the homogeneity-*hom components
  for (std::size_t pidx = 0; pidx < cx.minus_pairs().size(); ++pidx)
    for (int v = 0; v < dim; ++v) {
      if (cx.cochain_homogeneity(static_cast<int>(pidx), v) != *hom) continue;
      if (moved.coeff[pidx][v] != c.coeff[pidx][v]) return false;
    }
  return true;
}

}  // namespace contact
