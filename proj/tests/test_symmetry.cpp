#include <catch2/catch_amalgamated.hpp>

#include "contact/sampling.hpp"
#include "contact/symmetry.hpp"

using namespace contact;

namespace {
ProjectiveGroupElement corner_matrix(const GradedContactAlgebra& alg) {
  int n = alg.matrix_size();
  GMatrix g = GMatrix::identity(n);
  g(0, 0) = Gaussian(-1);
  g(n - 1, n - 1) = Gaussian(-1);
  return ProjectiveGroupElement(GroupElement(std::move(g), &alg));
}
}  // namespace

TEST_CASE("the minus-identity element exists and acts by the right signs") {
  for (const char* s : {"sl:n=1", "sl:n=2", "su:p=1,q=0", "su:p=1,q=1", "sp:n=1",
                        "so:p=1,q=1"}) {
    auto alg = build_algebra(AlgebraSpec::parse(s));
    INFO(s);
    ProjectiveGroupElement g0 = find_minus_identity(alg);
    for (int b : alg.degree_indices(-1))
      CHECK(adjoint(g0.representative, alg.basis_element(b)) == -alg.basis_element(b));
    for (int b : alg.degree_indices(-2))
      CHECK(adjoint(g0.representative, alg.basis_element(b)) == alg.basis_element(b));
    if (alg.spec().family == Family::SL || alg.spec().family == Family::SU)
      CHECK(g0 == corner_matrix(alg));
  }
}

TEST_CASE("symmetry acceptance and rejection") {
  for (const char* s : {"sl:n=1", "su:p=1,q=0", "sp:n=1", "so:p=1,q=1"}) {
    auto alg = build_algebra(AlgebraSpec::parse(s));
    ProjectiveGroupElement g0 = find_minus_identity(alg);
    QMatrix ad0 = adjoint_matrix(g0.representative);
    Sampler smp(21);
    INFO(s);
    for (int t = 0; t < 10; ++t) {
      AlgebraElement z1 = smp.algebra_element(alg, 1);
      AlgebraElement z2 = smp.algebra_element(alg, 2);
      CHECK(is_symmetry(alg, {g0, z1, z2}));
      GroupElement h = smp.grading_preserving_element(alg);
      if (adjoint_matrix(h) != ad0)
        CHECK(!is_symmetry(alg, {ProjectiveGroupElement(h), z1, z2}));
    }
    CHECK(!is_symmetry(alg, {ProjectiveGroupElement(GroupElement::identity(alg)), alg.zero(),
                             alg.zero()}));
  }
}

TEST_CASE("the square of a symmetry is exp(2 Z2) mod center") {
  for (const char* s : {"sl:n=1", "su:p=1,q=1", "sp:n=1"}) {
    auto alg = build_algebra(AlgebraSpec::parse(s));
    ProjectiveGroupElement g0 = find_minus_identity(alg);
    Sampler smp(23);
    INFO(s);
    for (int t = 0; t < 10; ++t) {
      AlgebraElement z1 = smp.algebra_element(alg, 1);
      AlgebraElement z2 = smp.algebra_element(alg, 2);
      SymmetryCandidate cand{g0, z1, z2};
      GroupElement sq = symmetry_square(alg, cand);
      CHECK(ProjectiveGroupElement(sq) ==
            ProjectiveGroupElement(exp_nilpotent(Rational(2) * z2)));
      CHECK(is_involutive(alg, cand) == z2.is_zero());
    }
  }
}

TEST_CASE("symmetry_square rejects non-symmetries") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  SymmetryCandidate bad{ProjectiveGroupElement(GroupElement::identity(alg)), alg.zero(),
                        alg.zero()};
  CHECK_THROWS_AS(symmetry_square(alg, bad), NotASymmetry);
}

TEST_CASE("closed-form involutivity matches the factorization route") {
  // special linear: corner = -1/2 V.W
  {
    auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
    int n = alg.matrix_size();
    for (int v = -1; v <= 1; ++v)
      for (int w = -1; w <= 1; ++w)
        for (int c2 = -2; c2 <= 2; ++c2) {
          GMatrix raw = GMatrix::identity(n);
          raw(0, 0) = Gaussian(-1);
          raw(n - 1, n - 1) = Gaussian(-1);
          raw(0, 1) = Gaussian(-v);
          raw(1, n - 1) = Gaussian(w);
          raw(0, n - 1) = Gaussian(make_rational(c2, 2));
          GroupElement g(raw, &alg);
          auto f = factorize_parabolic(g);
          SymmetryCandidate cand{ProjectiveGroupElement(f.g0), f.z1, f.z2};
          bool via_square = is_symmetry(alg, cand) && is_involutive(alg, cand);
          CHECK(via_square == involutive_closed_form(alg, g));
          CHECK(via_square == (make_rational(c2, 2) == make_rational(-v * w, 2)));
        }
  }
  // unitary: corner = 1/2 Z I' Z* on the group locus
  {
    auto alg = build_algebra(AlgebraSpec::parse("su:p=1,q=0"));
    int n = alg.matrix_size();
    for (int zr = -1; zr <= 1; ++zr)
      for (int zi = -1; zi <= 1; ++zi)
        for (int t = -1; t <= 1; ++t) {
          Gaussian z{Rational(zr), Rational(zi)};
          GMatrix raw = GMatrix::identity(n);
          raw(0, 0) = Gaussian(-1);
          raw(n - 1, n - 1) = Gaussian(-1);
          raw(0, 1) = -z;
          raw(1, n - 1) = -conj(z);
          Rational zz = Gaussian(z * conj(z)).re;
          raw(0, n - 1) = Gaussian(Rational(zz / 2), Rational(t));
          GroupElement g(raw, &alg);
          REQUIRE(preserves_filtration(g));
          auto f = factorize_parabolic(g);
          SymmetryCandidate cand{ProjectiveGroupElement(f.g0), f.z1, f.z2};
          bool via_square = is_symmetry(alg, cand) && is_involutive(alg, cand);
          CHECK(via_square == involutive_closed_form(alg, g));
          CHECK(via_square == (t == 0));
        }
  }
  auto sp = build_algebra(AlgebraSpec::parse("sp:n=1"));
  CHECK_THROWS_AS(involutive_closed_form(sp, GroupElement::identity(sp)), UnsupportedFamily);
}

TEST_CASE("transported symmetries keep their order") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  ProjectiveGroupElement g0 = find_minus_identity(alg);
  Sampler smp(29);
  SymmetryCandidate cand{g0, smp.algebra_element(alg, 1), alg.zero()};
  REQUIRE(is_involutive(alg, cand));
  CHECK(transport_symmetry(cand, GroupElement::identity(alg)) == cand.assemble());
  for (int t = 0; t < 5; ++t) {
    GroupElement h = smp.group_element(alg);
    GroupElement moved = transport_symmetry(cand, h);
    CHECK(ProjectiveGroupElement(moved * moved).is_identity());
  }
}
