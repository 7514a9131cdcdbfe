#include <catch2/catch_amalgamated.hpp>

#include "contact/json_io.hpp"

using namespace contact;
using json_io::Json;

TEST_CASE("scalar serialization keeps the explicit denominator") {
  CHECK(json_io::rational_str(make_rational(1, 2)) == "1/2");
  CHECK(json_io::rational_str(Rational(-3)) == "-3/1");
  CHECK(json_io::rational_str(Rational(0)) == "0/1");
  CHECK(json_io::entry_str(Gaussian(make_rational(1, 2), make_rational(-3, 4))) ==
        "1/2-3/4i");
  CHECK(json_io::entry_str(Gaussian(Rational(0), Rational(1))) == "0/1+1/1i");
  // the emitted form parses back exactly
  CHECK(parse_gaussian("1/2-3/4i") == Gaussian(make_rational(1, 2), make_rational(-3, 4)));
  CHECK(parse_gaussian("-3/1") == Gaussian(Rational(-3)));
}

TEST_CASE("matrices serialize as arrays of rational strings") {
  GMatrix m = GMatrix::identity(2);
  m(0, 1) = Gaussian(make_rational(1, 3));
  Json j = json_io::matrix_json(m);
  REQUIRE(j.size() == 2);
  CHECK(j[0][0] == "1/1");
  CHECK(j[0][1] == "1/3");
  CHECK(j[1][0] == "0/1");
}

TEST_CASE("verification reports serialize with one flag per axiom") {
  auto spec = AlgebraSpec::parse("sl:n=1");
  auto alg = build_algebra(spec);
  Json j = json_io::verification_json(spec, verify_contact_grading(alg));
  CHECK(j["algebra"] == "sl:n=1");
  CHECK(j["axioms"].size() == 8);
  for (const auto& [key, val] : j["axioms"].items()) CHECK(val.get<bool>());
  CHECK(j["all_ok"] == true);
  CHECK(j["counterexample"].is_array());
}

TEST_CASE("harmonic reports serialize homogeneity, type and dimension") {
  auto spec = AlgebraSpec::parse("sl:n=1");
  auto alg = build_algebra(spec);
  Json j = json_io::harmonic_json(spec, harmonic_space(alg));
  REQUIRE(j["components"].size() == 1);
  CHECK(j["components"][0]["homogeneity"] == 4);
  CHECK(j["components"][0]["type"] == Json({2, 1, -1}));
  CHECK(j["components"][0]["dim"] == 2);
}

TEST_CASE("serialization is deterministic") {
  auto spec = AlgebraSpec::parse("su:p=1,q=0");
  auto alg = build_algebra(spec);
  Json a = json_io::verification_json(spec, verify_contact_grading(alg));
  Json b = json_io::verification_json(spec, verify_contact_grading(alg));
  CHECK(a.dump() == b.dump());
}
