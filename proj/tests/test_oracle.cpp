#include <doctest.h>

#include "pellkit/oracle.hpp"

using namespace pellkit;

TEST_CASE("brute_force scans") {
  const SearchReport r = brute_force(3, 1, 10);
  REQUIRE(r.found.size() == 2);
  CHECK(r.found[0] == PellSolution{2, 1, 1, 1});
  CHECK(r.found[1] == PellSolution{7, 4, 2, 1});
  CHECK(r.exhausted);

  CHECK(brute_force(3, -1, 10000).found.empty());

  const SearchReport r7 = brute_force(7, 4, 10);
  REQUIRE(r7.found.size() == 1);
  CHECK(r7.found[0].x == 16);
  CHECK(r7.found[0].y == 6);

  const SearchReport r5 = brute_force(5, -4, 10);
  REQUIRE(!r5.found.empty());
  CHECK(r5.found[0].x == 1);
  CHECK(r5.found[0].y == 1);

  CHECK_THROWS_AS(brute_force(9, 1, 10), domain_error);
}

TEST_CASE("brute_force entries satisfy their equations and are ordered") {
  for (int d : {2, 3, 5, 8, 13, 14}) {
    for (int rhs : {1, -1, 4, -4}) {
      const SearchReport r = brute_force(d, rhs, 500);
      Int last_y = 0;
      for (const PellSolution& s : r.found) {
        CHECK(is_solution(d, rhs, s.x, s.y));
        CHECK(s.y > last_y);
        last_y = s.y;
      }
    }
  }
}

TEST_CASE("cross_check small grid is clean") {
  CrossCheckGrid grid{5, 3, 3, 4, 1000};
  CHECK(cross_check(grid).empty());
}

TEST_CASE("cross_check empty grid is vacuous") {
  CrossCheckGrid grid{1, 1, 1, 0, 10};
  CHECK(cross_check(grid).empty());
}

TEST_CASE("cross_check output is identical for any jobs count") {
  CrossCheckGrid grid{6, 3, 3, 4, 500};
  const auto serial = cross_check(grid, 1);
  const auto parallel = cross_check(grid, 4);
  CHECK(serial == parallel);
}
