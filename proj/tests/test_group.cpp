#include <catch2/catch_amalgamated.hpp>

#include "contact/group.hpp"
#include "contact/sampling.hpp"

using namespace contact;

TEST_CASE("nilpotent exponential inverts by negation") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=2"));
  Sampler smp(3);
  for (int t = 0; t < 10; ++t) {
    AlgebraElement z = smp.algebra_element(alg, 1) + smp.algebra_element(alg, 2);
    GroupElement g = exp_nilpotent(z);
    CHECK(g * exp_nilpotent(-z) == GroupElement::identity(alg));
  }
  CHECK_THROWS_AS(exp_nilpotent(smp.nonzero_algebra_element(alg, 0)), NotNilpotentPart);
  // mixing positive and negative degrees is rejected too
  AlgebraElement mixed = smp.nonzero_algebra_element(alg, 1) + smp.nonzero_algebra_element(alg, -1);
  CHECK_THROWS_AS(exp_nilpotent(mixed), NotNilpotentPart);
}

TEST_CASE("conjugation is a Lie algebra automorphism") {
  auto alg = build_algebra(AlgebraSpec::parse("su:p=1,q=1"));
  Sampler smp(5);
  for (int t = 0; t < 5; ++t) {
    GroupElement g = smp.group_element(alg);
    AlgebraElement x = smp.algebra_element(alg);
    AlgebraElement y = smp.algebra_element(alg);
    CHECK(adjoint(g, bracket(x, y)) == bracket(adjoint(g, x), adjoint(g, y)));
  }
}

TEST_CASE("projective equality quotients by scalars") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  Sampler smp(7);
  GroupElement g = smp.group_element(alg);
  GroupElement scaled{g.m * Gaussian(Rational(-3)), &alg};
  CHECK(ProjectiveGroupElement(g) == ProjectiveGroupElement(scaled));
  GroupElement h = smp.group_element(alg);
  if (adjoint_matrix(g) != adjoint_matrix(h))
    CHECK(ProjectiveGroupElement(g) != ProjectiveGroupElement(h));
  CHECK(ProjectiveGroupElement(GroupElement::identity(alg)).is_identity());
}

TEST_CASE("quotient projection and lift round trip") {
  auto alg = build_algebra(AlgebraSpec::parse("sp:n=1"));
  Sampler smp(9);
  for (int t = 0; t < 10; ++t) {
    AlgebraElement x = smp.algebra_element(alg, -1) + smp.algebra_element(alg, -2);
    QuotientVector v = project_to_quotient(x);
    CHECK(lift_quotient(v) == x);
    // degrees >= 0 vanish in the quotient
    QuotientVector w = project_to_quotient(x + smp.algebra_element(alg, 0));
    CHECK(w == v);
  }
}

TEST_CASE("parabolic factorization recovers the assembled parts") {
  for (const char* s : {"sl:n=2", "su:p=1,q=0", "sp:n=1", "so:p=1,q=1"}) {
    auto alg = build_algebra(AlgebraSpec::parse(s));
    Sampler smp(13);
    for (int t = 0; t < 5; ++t) {
      GroupElement g0 = smp.grading_preserving_element(alg);
      AlgebraElement z1 = smp.algebra_element(alg, 1);
      AlgebraElement z2 = smp.algebra_element(alg, 2);
      GroupElement g = assemble(g0, z1, z2);
      REQUIRE(preserves_filtration(g));
      ParabolicFactorization f = factorize_parabolic(g);
      INFO(s);
      CHECK(f.g0 == g0);
      CHECK(f.z1 == z1);
      CHECK(f.z2 == z2);
    }
  }
}

TEST_CASE("elements outside the parabolic are rejected") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  Sampler smp(15);
  AlgebraElement zneg = smp.nonzero_algebra_element(alg, -1);
  GroupElement g = exp_nilpotent(zneg);
  CHECK(!preserves_filtration(g));
  CHECK_THROWS_AS(factorize_parabolic(g), NotInParabolic);
}

TEST_CASE("quotient action of the unipotent part is unipotent") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  Sampler smp(17);
  AlgebraElement z2 = smp.algebra_element(alg, 2);
  GroupElement g = exp_nilpotent(z2);
  // exp(g_2) acts trivially on the g_-1 classes' g_-1 part and shifts g_-2
  QuotientVector v = QuotientVector::zero(alg);
  v.xi1[0] = 1;
  QuotientVector img = underline_adjoint(g, v);
  CHECK(img.xi1 == v.xi1);
}
