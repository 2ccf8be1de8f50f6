#include <doctest.h>

#include "pellkit/oracle.hpp"
#include "pellkit/pell.hpp"

using namespace pellkit;

TEST_CASE("is_solution") {
  CHECK(is_solution(3, 1, 2, 1));
  CHECK(is_solution(97, 1, 1, 0));  // trivial solution, any d
  CHECK(is_solution(7, 4, 16, 6));
  CHECK_FALSE(is_solution(3, 1, 2, 2));
}

TEST_CASE("fundamental_unit") {
  PellSolution s3 = fundamental_unit(3);
  CHECK(s3.x == 2);
  CHECK(s3.y == 1);

  PellSolution s14 = fundamental_unit(14);
  CHECK(s14.x == 15);
  CHECK(s14.y == 4);

  PellSolution s2 = fundamental_unit(2);  // odd period, index 2m-1
  CHECK(s2.x == 3);
  CHECK(s2.y == 2);

  // d = 61 has a famously large fundamental solution.
  PellSolution s61 = fundamental_unit(61);
  CHECK(s61.x == 1766319049);
  CHECK(s61.y == 226153980);

  CHECK_THROWS_AS(fundamental_unit(25), domain_error);
  CHECK_THROWS_AS(fundamental_unit(1), domain_error);
}

TEST_CASE("fundamental_unit matches brute force for non-square d <= 2000") {
  for (int d = 2; d <= 2000; ++d) {
    if (is_perfect_square(d)) continue;
    const PellSolution fund = fundamental_unit(d);
    REQUIRE(is_solution(d, 1, fund.x, fund.y));
    // The scan up to the fundamental y must find it first.
    if (fund.y <= 100000) {
      const SearchReport scan = brute_force(d, 1, fund.y);
      REQUIRE(scan.found.size() == 1);
      REQUIRE(scan.found.front().x == fund.x);
      REQUIRE(scan.found.front().y == fund.y);
    }
  }
}

TEST_CASE("solve_negative_one") {
  const Solvability v3 = solve_negative_one(3);
  REQUIRE(std::holds_alternative<NoSolution>(v3));
  CHECK(std::get<NoSolution>(v3).reason == NoSolutionReason::kEvenPeriod);

  const Solvability v2 = solve_negative_one(2);
  const PellSolution* s2 = solution_of(v2);
  REQUIRE(s2 != nullptr);
  CHECK(s2->x == 1);
  CHECK(s2->y == 1);

  CHECK(std::holds_alternative<NoSolution>(solve_negative_one(7)));

  // Definitional consistency: NoSolution exactly when the period is even.
  for (int d = 2; d <= 500; ++d) {
    if (is_perfect_square(d)) continue;
    const bool even = cf_expand(d).period_length() % 2 == 0;
    CHECK(std::holds_alternative<NoSolution>(solve_negative_one(d)) == even);
  }
}

TEST_CASE("nth_solution") {
  const PellSolution f3 = fundamental_unit(3);
  CHECK(nth_solution(3, f3, 2) == PellSolution{7, 4, 2, 1});
  CHECK(nth_solution(3, f3, 3) == PellSolution{26, 15, 3, 1});

  const PellSolution f14 = fundamental_unit(14);
  CHECK(nth_solution(14, f14, 2) == PellSolution{449, 120, 2, 1});

  CHECK_THROWS_AS(nth_solution(3, f3, 0), domain_error);
  CHECK_THROWS_AS(nth_solution(5, f3, 1), domain_error);  // wrong d
}

TEST_CASE("binary exponentiation equals a linear compose chain") {
  for (int d : {2, 3, 5, 6, 7, 10, 13, 14, 19, 61}) {
    const PellSolution fund = fundamental_unit(d);
    PellSolution chain = fund;
    for (int n = 2; n <= 20; ++n) {
      chain = compose(chain, fund, d, 1);
      const PellSolution direct = nth_solution(d, fund, n);
      REQUIRE(chain.x == direct.x);
      REQUIRE(chain.y == direct.y);
    }
  }
}

TEST_CASE("solve_four") {
  CHECK(solve_four(3) == PellSolution{4, 2, 1, 4});
  CHECK(solve_four(14) == PellSolution{30, 8, 1, 4});
  // d = 0 (mod 4): (2 x1, y1) from the unit of d/4 = 8, namely (3, 1).
  CHECK(solve_four(32) == PellSolution{6, 1, 1, 4});
  CHECK_THROWS_AS(solve_four(16), domain_error);
  CHECK_THROWS_AS(solve_four(36), domain_error);  // d/4 = 9 square

  for (int d = 2; d <= 500; ++d) {
    if (is_perfect_square(d)) continue;
    if (d % 4 == 0 && is_perfect_square(d / 4)) continue;
    const PellSolution s = solve_four(d);
    REQUIRE(is_solution(d, 4, s.x, s.y));
    if (d % 4 != 0) {
      const PellSolution u = fundamental_unit(d);
      REQUIRE(s.x == 2 * u.x);
      REQUIRE(s.y == 2 * u.y);
    }
  }
}

TEST_CASE("solve_negative_four") {
  // d = 3 (mod 4): equivalence with rhs -1.
  const Solvability v7 = solve_negative_four(7, 100);
  REQUIRE(std::holds_alternative<NoSolution>(v7));
  CHECK(std::get<NoSolution>(v7).reason ==
        NoSolutionReason::kTheorem1Equivalence);

  // d = 2 (mod 4), rhs -1 solvable: doubled solution.
  const Solvability v2 = solve_negative_four(2, 100);
  const PellSolution* s2 = solution_of(v2);
  REQUIRE(s2 != nullptr);
  CHECK(s2->x == 2);
  CHECK(s2->y == 2);

  // d = 0 (mod 4): reduction to d/4.
  const Solvability v32 = solve_negative_four(32, 100);
  REQUIRE(std::holds_alternative<NoSolution>(v32));
  CHECK(std::get<NoSolution>(v32).reason ==
        NoSolutionReason::kReductionToKnownUnsolvable);
  const Solvability v8 = solve_negative_four(8, 100);
  const PellSolution* s8 = solution_of(v8);
  REQUIRE(s8 != nullptr);  // (x/2)^2 - 2 y^2 = -1 with (1, 1) -> (2, 1)
  CHECK(is_solution(8, -4, s8->x, s8->y));

  // d = 1 (mod 4): bounded search.
  const Solvability v5 = solve_negative_four(5, 100);
  const PellSolution* s5 = solution_of(v5);
  REQUIRE(s5 != nullptr);
  CHECK(s5->x == 1);
  CHECK(s5->y == 1);
  const Solvability v21 = solve_negative_four(21, 1000);
  REQUIRE(std::holds_alternative<Undetermined>(v21));
  CHECK(std::get<Undetermined>(v21).searched_bound == 1000);

  CHECK_THROWS_AS(solve_negative_four(36, 100), domain_error);
}

TEST_CASE("compose") {
  const PellSolution seed{4, 2, 1, 4};
  const PellSolution unit{2, 1, 1, 1};
  const PellSolution r = compose(seed, unit, 3, 1);
  CHECK(r.x == 14);
  CHECK(r.y == 8);
  CHECK(r.rhs == 4);

  const PellSolution sq = compose(unit, unit, 3, 1);
  CHECK(sq.x == 7);
  CHECK(sq.y == 4);

  const PellSolution m4 = compose({1, 1, 1, -4}, {9, 4, 1, 1}, 5, 1);
  CHECK(m4.x == 29);
  CHECK(m4.y == 13);

  // Dividing back out with sign = -1.
  const PellSolution back = compose(sq, unit, 3, -1);
  CHECK(back.x == 2);
  CHECK(back.y == 1);

  CHECK_THROWS_AS(compose({2, 1, 1, 1}, {1, 0, 1, 1}, 3, 1), domain_error);
  CHECK_THROWS_AS(compose({3, 1, 1, 1}, {2, 1, 1, 1}, 3, 1), domain_error);
}

TEST_CASE("group law on sampled d") {
  int sampled = 0;
  for (int d = 2; sampled < 50; ++d) {
    if (is_perfect_square(d)) continue;
    ++sampled;
    const PellSolution fund = fundamental_unit(d);
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; i + j <= 12; ++j) {
        const PellSolution a = nth_solution(d, fund, i);
        const PellSolution b = nth_solution(d, fund, j);
        const PellSolution c = compose(a, b, d, 1);
        const PellSolution expect = nth_solution(d, fund, i + j);
        REQUIRE(c.x == expect.x);
        REQUIRE(c.y == expect.y);
        REQUIRE(c.n == i + j);
      }
  }
}
