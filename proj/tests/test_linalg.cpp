#include <catch2/catch_amalgamated.hpp>

#include "symcut/linalg.hpp"

using namespace symcut;

TEST_CASE("rref and rank") {
  RatMat m{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
  Rref r = rref(m);
  CHECK(r.rank() == 2);
  CHECK(rank(RatMat::identity(4)) == 4);
  CHECK(rank(RatMat{{0, 0}, {0, 0}}) == 0);
  CHECK(rank_of_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}) == 2);
  CHECK(linearly_independent({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}));
  CHECK_FALSE(linearly_independent({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}));
}

TEST_CASE("nullspace basis is canonical and correct") {
  RatMat m{{1, 2, 3}, {2, 4, 6}};
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
  CHECK(rank_of_rows(ns) == 2);
  // identity matrix has trivial nullspace; zero matrix has full nullspace
  CHECK(nullspace(RatMat::identity(3)).empty());
  CHECK(nullspace(RatMat{{0, 0}, {0, 0}}).size() == 2);
}

TEST_CASE("solve linear systems") {
  RatMat m{{2, 1}, {1, 3}};
  auto x = solve(m, {Rat(5), Rat(10)});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == RatVec{Rat(5), Rat(10)});
  // inconsistent system
  RatMat s{{1, 1}, {2, 2}};
  CHECK_FALSE(solve(s, {Rat(1), Rat(3)}).has_value());
  // underdetermined but consistent: a particular solution comes back
  auto y = solve(RatMat{{1, 1, 1}}, {Rat(6)});
  REQUIRE(y.has_value());
  CHECK(dot(*y, RatVec{Rat(1), Rat(1), Rat(1)}) == Rat(6));
}

TEST_CASE("inverse and determinant") {
  RatMat m{{2, 1}, {1, 1}};
  RatMat inv = inverse(m);
  CHECK(m * inv == RatMat::identity(2));
  CHECK(inv * m == RatMat::identity(2));
  CHECK(determinant(m) == Rat(1));
  CHECK(determinant(RatMat{{2, 0}, {0, 3}}) == Rat(6));
  CHECK(determinant(RatMat{{1, 2}, {2, 4}}) == Rat(0));
  CHECK_THROWS_AS(inverse(RatMat{{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("span membership") {
  std::vector<RatVec> rows = {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}};
  CHECK(in_span(rows, {Rat(2), Rat(3), Rat(5)}));
  CHECK_FALSE(in_span(rows, {Rat(0), Rat(0), Rat(1)}));
  CHECK(in_span({}, {Rat(0), Rat(0)}));
  CHECK_FALSE(in_span({}, {Rat(1), Rat(0)}));
}

TEST_CASE("matrix products and transpose") {
  RatMat a{{1, 2}, {3, 4}};
  RatMat b{{0, 1}, {1, 0}};
  CHECK(a * b == RatMat{{2, 1}, {4, 3}});
  CHECK(a.transposed() == RatMat{{1, 3}, {2, 4}});
  CHECK(a.apply({Rat(1), Rat(1)}) == RatVec{Rat(3), Rat(7)});
}
