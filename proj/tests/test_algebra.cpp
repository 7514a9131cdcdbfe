#include <catch2/catch_amalgamated.hpp>

#include "contact/algebra.hpp"
#include "contact/sampling.hpp"

using namespace contact;

TEST_CASE("algebra spec parsing") {
  CHECK(AlgebraSpec::parse("sl:n=2").to_string() == "sl:n=2");
  CHECK(AlgebraSpec::parse("su:p=1,q=1").to_string() == "su:p=1,q=1");
  CHECK(AlgebraSpec::parse("sp:n=1").to_string() == "sp:n=1");
  CHECK(AlgebraSpec::parse("so:p=1,q=1").to_string() == "so:p=1,q=1");
  CHECK(AlgebraSpec::parse("su:p=2,q=0").family == Family::SU);

  CHECK_THROWS_AS(AlgebraSpec::parse("sl:n=0"), InvalidSpec);
  CHECK_THROWS_AS(AlgebraSpec::parse("xx:n=1"), InvalidSpec);
  CHECK_THROWS_AS(AlgebraSpec::parse("sl"), InvalidSpec);
  CHECK_THROWS_AS(AlgebraSpec::parse("sl:m=1"), InvalidSpec);
  CHECK_THROWS_AS(AlgebraSpec::parse("su:p=1"), InvalidSpec);
  CHECK_THROWS_AS(AlgebraSpec::parse("su:p=0,q=0"), InvalidSpec);
  CHECK_THROWS_AS(AlgebraSpec::parse("sl:n=1,n=2"), InvalidSpec);
  CHECK_THROWS_AS(AlgebraSpec::parse("sl:n=abc"), InvalidSpec);
}

TEST_CASE("expected dimensions per family") {
  struct Row {
    const char* spec;
    int total, dm1;
  };
  // total dimension and dim g_-1 of the realized algebra
  for (const Row& r : {Row{"sl:n=1", 8, 2}, Row{"sl:n=2", 15, 4}, Row{"sp:n=1", 10, 2},
                       Row{"su:p=1,q=0", 8, 2}, Row{"su:p=1,q=1", 15, 4},
                       Row{"so:p=1,q=1", 15, 4}}) {
    auto alg = build_algebra(AlgebraSpec::parse(r.spec));
    INFO(r.spec);
    CHECK(alg.dim() == r.total);
    CHECK(alg.dim_of_degree(-2) == 1);
    CHECK(alg.dim_of_degree(2) == 1);
    CHECK(alg.dim_of_degree(-1) == r.dm1);
    CHECK(alg.dim_of_degree(1) == r.dm1);
  }
}

TEST_CASE("grading axioms verify for every family") {
  for (const char* s : {"sl:n=1", "sl:n=2", "su:p=1,q=0", "su:p=1,q=1", "sp:n=1",
                        "so:p=1,q=1"}) {
    auto alg = build_algebra(AlgebraSpec::parse(s));
    auto rep = verify_contact_grading(alg);
    INFO(s << " first failure: " << rep.failed_check);
    CHECK(rep.all_ok());
  }
}

TEST_CASE("corrupted structure constants are detected") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=1"));
  // find a nonzero constant to zero out
  int za = -1, zb = -1, zc = -1;
  for (int a = 0; a < alg.dim() && za < 0; ++a)
    for (int b = 0; b < alg.dim() && za < 0; ++b)
      for (int c = 0; c < alg.dim(); ++c)
        if (alg.structure_constants(a, b)[c] != 0) {
          za = a;
          zb = b;
          zc = c;
          break;
        }
  REQUIRE(za >= 0);
  auto bad = alg.with_zeroed_structure_constant(za, zb, zc);
  auto rep = verify_contact_grading(bad);
  CHECK(!rep.brackets_graded);
  CHECK(!rep.all_ok());
}

TEST_CASE("bracket respects the grading") {
  for (const char* s : {"sl:n=2", "su:p=1,q=1", "sp:n=1", "so:p=1,q=1"}) {
    auto alg = build_algebra(AlgebraSpec::parse(s));
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = 0; b < alg.dim(); ++b) {
        AlgebraElement br = bracket(alg.basis_element(a), alg.basis_element(b));
        if (br.is_zero()) continue;
        auto parts = grade_decompose(br);
        REQUIRE(parts.size() == 1);
        CHECK(parts.begin()->first == alg.degree(a) + alg.degree(b));
      }
  }
}

TEST_CASE("grading element acts by the degree") {
  auto alg = build_algebra(AlgebraSpec::parse("su:p=1,q=1"));
  AlgebraElement e = alg.grading_element();
  for (int b = 0; b < alg.dim(); ++b)
    CHECK(bracket(e, alg.basis_element(b)) == Rational(alg.degree(b)) * alg.basis_element(b));
}

TEST_CASE("decomposition round trips and rejects outsiders") {
  auto alg = build_algebra(AlgebraSpec::parse("sp:n=1"));
  Sampler smp(11);
  for (int t = 0; t < 20; ++t) {
    AlgebraElement x = smp.algebra_element(alg);
    CHECK(alg.element_from_coeffs(alg.decompose(x.m)) == x);
  }
  // a matrix outside sp(4, R): a single diagonal unit
  GMatrix out(alg.matrix_size(), alg.matrix_size());
  out(0, 0) = Gaussian(1);
  CHECK(!alg.contains(out));
  CHECK_THROWS_AS(alg.decompose(out), Error);
}

TEST_CASE("trace pairing vanishes off complementary degrees") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=2"));
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b)
      if (alg.degree(a) + alg.degree(b) != 0)
        CHECK(trace_pairing(alg.basis_element(a), alg.basis_element(b)) == 0);
}

TEST_CASE("split halves are marked for the special linear family") {
  auto alg = build_algebra(AlgebraSpec::parse("sl:n=2"));
  int l = 0, r = 0;
  for (int b = 0; b < alg.dim(); ++b) {
    if (alg.side(b) == 'L') ++l;
    if (alg.side(b) == 'R') ++r;
    if (alg.degree(b) != 1 && alg.degree(b) != -1) CHECK(alg.side(b) == '\0');
  }
  CHECK(l == 4);
  CHECK(r == 4);
}
