#include <catch2/catch_amalgamated.hpp>

#include "contact/matrix.hpp"

using namespace contact;

namespace {
QMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = Rational(rows[i][j]);
  return m;
}
}  // namespace

TEST_CASE("rref finds pivots and rank") {
  QMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(rank(m) == 2);
  auto piv = rref(m);
  CHECK(piv == std::vector<int>{0, 1});
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 0);
  CHECK(m(1, 1) == 1);
}

TEST_CASE("nullspace vectors are annihilated") {
  QMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  auto img = m * ns[0];
  for (const auto& x : img) CHECK(x == 0);
}

TEST_CASE("inverse round trips and rejects singular input") {
  QMatrix m = from_rows({{2, 1}, {1, 1}});
  QMatrix inv = inverse(m);
  CHECK(m * inv == QMatrix::identity(2));
  QMatrix s = from_rows({{1, 2}, {2, 4}});
  CHECK(!try_inverse(s));
  CHECK_THROWS_AS(inverse(s), Error);
}

TEST_CASE("gaussian-entry matrices invert exactly") {
  GMatrix m(2, 2);
  m(0, 0) = Gaussian(Rational(1), Rational(1));
  m(0, 1) = Gaussian(2);
  m(1, 0) = Gaussian(Rational(0), Rational(-1));
  m(1, 1) = Gaussian(Rational(1), Rational(2));
  GMatrix inv = inverse(m);
  CHECK(m * inv == GMatrix::identity(2));
  CHECK(inv * m == GMatrix::identity(2));
}

TEST_CASE("linear solver handles consistent and inconsistent systems") {
  QMatrix a = from_rows({{1, 2}, {2, 4}, {0, 1}});
  LinearSolver<Rational> solver(a);
  CHECK(solver.rank() == 2);
  // v = a * (3, -1)
  std::vector<Rational> v = {Rational(1), Rational(2), Rational(-1)};
  auto x = solver.solve(v);
  REQUIRE(x);
  CHECK(a * *x == v);
  // outside the column space
  CHECK(!solver.solve({Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("signature by congruence diagonalization") {
  CHECK(signature(from_rows({{2, 0, 0}, {0, -3, 0}, {0, 0, 0}})) == std::tuple{1, 1, 1});
  // hyperbolic plane: zero diagonal, handled by the off-diagonal rescue step
  CHECK(signature(from_rows({{0, 1}, {1, 0}})) == std::tuple{1, 1, 0});
  CHECK(signature(from_rows({{1, 2}, {2, 1}})) == std::tuple{1, 1, 0});
  CHECK(signature(from_rows({{2, 1}, {1, 2}})) == std::tuple{2, 0, 0});
}

TEST_CASE("matrix algebra basics") {
  QMatrix a = from_rows({{1, 2}, {3, 4}});
  CHECK(a.trace() == 5);
  CHECK(a.transpose()(0, 1) == 3);
  CHECK((a - a).is_zero());
  CHECK(a + a == Rational(2) * a);
  GMatrix g(1, 2);
  g(0, 0) = Gaussian(Rational(1), Rational(2));
  CHECK(g.conj_transpose()(0, 0) == Gaussian(Rational(1), Rational(-2)));
}
