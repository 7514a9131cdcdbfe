#include <catch2/catch_amalgamated.hpp>

#include "contact/homology.hpp"
#include "contact/sampling.hpp"
#include "contact/symmetry.hpp"

using namespace contact;

TEST_CASE("the boundary squares to zero") {
  for (const char* s : {"sl:n=1", "sl:n=2", "su:p=1,q=0", "sp:n=1"}) {
    auto alg = build_algebra(AlgebraSpec::parse(s));
    ChainComplex cx(alg);
    INFO(s);
    CHECK((cx.d(2) * cx.d(3)).is_zero());
    CHECK(cx.d(2).rows() == cx.chain_dim(1));
    CHECK(cx.d(2).cols() == cx.chain_dim(2));
    CHECK(cx.d(3).cols() == cx.chain_dim(3));
  }
}

TEST_CASE("boundary rejects mismatched coefficient vectors") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  ChainComplex cx(alg);
  CHECK_THROWS_AS(cx.boundary(2, std::vector<Rational>(3)), DegreeMismatch);
  CHECK_THROWS_AS(cx.d(1), DegreeMismatch);
  CHECK_THROWS_AS(cx.basis(4), DegreeMismatch);
}

TEST_CASE("homogeneity and type labels are consistent") {
  auto alg = build_algebra(AlgebraSpec::parse("sp:n=1"));
  ChainComplex cx(alg);
  // cochain side: homogeneity l = i + j + (value degree), type = (i, j, -value degree)
  for (std::size_t pidx = 0; pidx < cx.minus_pairs().size(); ++pidx)
    for (int v = 0; v < alg.dim(); ++v) {
      auto t = cx.cochain_type(static_cast<int>(pidx), v);
      CHECK(cx.cochain_homogeneity(static_cast<int>(pidx), v) == t[0] + t[1] - t[2]);
      CHECK(t[0] >= t[1]);
    }
  // chain side
  for (const auto& it : cx.basis(2)) {
    auto t = cx.item_type(it);
    CHECK(cx.item_homogeneity(it) ==
          alg.degree(cx.plus()[it.combo[0]]) + alg.degree(cx.plus()[it.combo[1]]) +
              alg.degree(it.value));
    CHECK(t[0] >= t[1]);
  }
}

TEST_CASE("harmonic components of the smallest algebras") {
  {
    auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
    auto rep = harmonic_space(alg);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].homogeneity == 4);
    CHECK(rep.entries[0].type == std::array<int, 3>{2, 1, -1});
    CHECK(rep.entries[0].dim == 2);
  }
  {
    auto alg = build_algebra(AlgebraSpec::parse("sp:n=1"));
    auto rep = harmonic_space(alg);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].homogeneity == 3);
    CHECK(rep.entries[0].type == std::array<int, 3>{2, 1, 0});
    CHECK(rep.entries[0].dim == 4);
  }
  {
    auto alg = build_algebra(AlgebraSpec::parse("sl:n=2"));
    auto rep = harmonic_space(alg);
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].homogeneity == 1);
    CHECK(rep.entries[0].type == std::array<int, 3>{1, 1, 1});
    CHECK(rep.entries[1].homogeneity == 2);
    CHECK(rep.entries[1].type == std::array<int, 3>{1, 1, 0});
  }
}

TEST_CASE("sign of the minus-identity action per curvature type") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  ChainComplex cx(alg);
  ProjectiveGroupElement g0 = find_minus_identity(alg);
  int nm = static_cast<int>(cx.minus().size());
  int checked = 0;
  for (int x = 0; x < nm; ++x)
    for (int y = x + 1; y < nm; ++y)
      for (int v = 0; v < alg.dim(); ++v) {
        auto type = cx.cochain_type(cx.pair_index(x, y), v);
        int expect = 0;
        if (type == std::array<int, 3>{1, 1, 1})
          expect = -1;
        else if (type == std::array<int, 3>{1, 1, 0} || type == std::array<int, 3>{2, 1, -1})
          expect = 1;
        if (expect == 0) continue;
        Cochain2 c = cx.basis_cochain(x, y, v);
        CHECK(g0_action(g0, cx, c) == (expect == 1 ? c : -c));
        ++checked;
      }
  CHECK(checked > 0);
}

TEST_CASE("the action of the nilpotent radical fixes leading terms") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  ChainComplex cx(alg);
  Sampler smp(31);
  int nm = static_cast<int>(cx.minus().size());
  for (int t = 0; t < 5; ++t) {
    AlgebraElement z = smp.algebra_element(alg, 1) + smp.algebra_element(alg, 2);
    // a random cochain of fixed homogeneity
    Cochain2 c;
    c.alg = &alg;
    c.coeff.assign(cx.minus_pairs().size(), std::vector<Rational>(alg.dim(), Rational(0)));
    for (std::size_t pidx = 0; pidx < cx.minus_pairs().size(); ++pidx)
      for (int v = 0; v < alg.dim(); ++v)
        if (cx.cochain_homogeneity(static_cast<int>(pidx), v) == 2)
          c.coeff[pidx][v] = smp.small_rational();
    CHECK(p_plus_action_triviality(z, cx, c));
  }
  // arguments outside p_+ are rejected
  CHECK_THROWS_AS(
      p_plus_action_triviality(smp.nonzero_algebra_element(alg, 0), cx,
                               cx.basis_cochain(0, 1, 0)),
      NotNilpotentPart);
  // non-homogeneous cochains are rejected
  Cochain2 mixed = cx.basis_cochain(0, 1, 0);
  bool added = false;
  for (std::size_t pidx = 0; pidx < cx.minus_pairs().size() && !added; ++pidx)
    for (int v = 0; v < alg.dim() && !added; ++v)
      if (cx.cochain_homogeneity(static_cast<int>(pidx), v) !=
          cx.cochain_homogeneity(0, 0)) {
        mixed.coeff[pidx][v] = 1;
        added = true;
      }
  REQUIRE(added);
  CHECK_THROWS_AS(p_plus_action_triviality(smp.nonzero_algebra_element(alg, 1), cx, mixed),
                  DegreeMismatch);
}
