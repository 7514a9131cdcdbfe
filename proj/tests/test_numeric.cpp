#include <catch2/catch_amalgamated.hpp>

#include "contact/numeric.hpp"

using namespace contact;

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-3, -6) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts n and n/d") {
  CHECK(parse_rational("5") == 5);
  CHECK(parse_rational("-7/14") == make_rational(-1, 2));
  CHECK(parse_rational("0/3") == 0);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("gaussian arithmetic is exact") {
  Gaussian a{Rational(1), Rational(2)};
  Gaussian b{Rational(3), Rational(-1)};
  CHECK(a * b == Gaussian(Rational(5), Rational(5)));
  CHECK(a + b == Gaussian(Rational(4), Rational(1)));
  CHECK(a - a == Gaussian());
  CHECK((a * b) / b == a);
  CHECK(conj(a) == Gaussian(Rational(1), Rational(-2)));
  CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
  CHECK(a * conj(a) == Gaussian(Rational(5)));
  CHECK_THROWS_AS(a / Gaussian(), std::domain_error);
}

TEST_CASE("gaussian string round trip") {
  for (const Gaussian& z : {Gaussian(Rational(0)), Gaussian(make_rational(1, 2)),
                            Gaussian(Rational(0), Rational(-1)),
                            Gaussian(make_rational(-3, 4), make_rational(5, 7)),
                            Gaussian(Rational(2), make_rational(-1, 3))}) {
    CHECK(parse_gaussian(to_string(z)) == z);
  }
  CHECK(to_string(Gaussian(Rational(1), Rational(1))) == "1+1i");
  CHECK(to_string(Gaussian(make_rational(1, 2), make_rational(-1, 2))) == "1/2-1/2i");
}
