#include "pellkit/pell.hpp"

#include <algorithm>
#include <utility>

namespace pellkit {

namespace {

void require_valid_d(const Int& d, const char* where) {
  if (d < 2) throw domain_error(std::string(where) + ": d must be >= 2");
  if (is_perfect_square(d))
    throw domain_error(std::string(where) + ": d is a perfect square");
}

// Multiplication in Z[sqrt(d)]: (x1 + y1 sqrt(d)) (x2 + y2 sqrt(d)).
std::pair<Int, Int> ring_mul(const std::pair<Int, Int>& u,
                             const std::pair<Int, Int>& v, const Int& d) {
  return {u.first * v.first + d * u.second * v.second,
          u.first * v.second + u.second * v.first};
}

std::pair<Int, Int> ring_pow(std::pair<Int, Int> base, std::int64_t n,
                             const Int& d) {
  std::pair<Int, Int> acc{1, 0};
  while (n > 0) {
    if (n & 1) acc = ring_mul(acc, base, d);
    base = ring_mul(base, base, d);
    n >>= 1;
  }
  return acc;
}

}  // namespace

std::string_view to_string(NoSolutionReason reason) {
  switch (reason) {
    case NoSolutionReason::kEvenPeriod:
      return "even-period";
    case NoSolutionReason::kTheorem1Equivalence:
      return "theorem-1-equivalence";
    case NoSolutionReason::kTheorem14Parity:
      return "theorem-14-parity";
    case NoSolutionReason::kReductionToKnownUnsolvable:
      return "reduction-to-known-unsolvable";
  }
  return "unknown";
}

bool is_solution(const Int& d, const Int& N, const Int& x, const Int& y) {
  return x * x - d * y * y == N;
}

PellSolution fundamental_unit(const Int& d) {
  require_valid_d(d, "fundamental_unit");
  const SurdExpansion exp = cf_expand(d);
  const std::size_t m = exp.period_length();
  const std::size_t idx = (m % 2 == 0) ? m - 1 : 2 * m - 1;
  auto conv = convergents(exp, idx + 1);
  return {std::move(conv[idx].p), std::move(conv[idx].q), 1, 1};
}

Solvability solve_negative_one(const Int& d) {
  require_valid_d(d, "solve_negative_one");
  const SurdExpansion exp = cf_expand(d);
  const std::size_t m = exp.period_length();
  if (m % 2 == 0) return NoSolution{NoSolutionReason::kEvenPeriod};
  auto conv = convergents(exp, m);
  return PellSolution{std::move(conv[m - 1].p), std::move(conv[m - 1].q), 1, -1};
}

PellSolution nth_solution(const Int& d, const PellSolution& fund,
                          std::int64_t n) {
  if (n < 1) throw domain_error("nth_solution: n must be >= 1");
  if (fund.rhs != 1 || !is_solution(d, 1, fund.x, fund.y))
    throw domain_error("nth_solution: fund is not a unit for this d");
  auto [x, y] = ring_pow({fund.x, fund.y}, n, d);
  return {std::move(x), std::move(y), n, 1};
}

PellSolution solve_four(const Int& d) {
  require_valid_d(d, "solve_four");
  if (d % 4 == 0) {
    const Int quarter = d / 4;
    if (is_perfect_square(quarter))
      throw domain_error("solve_four: d/4 is a perfect square");
    PellSolution u = fundamental_unit(quarter);
    return {2 * u.x, std::move(u.y), 1, 4};
  }
  PellSolution u = fundamental_unit(d);
  return {2 * u.x, 2 * u.y, 1, 4};
}

Solvability solve_negative_four(const Int& d, const Int& search_bound) {
  require_valid_d(d, "solve_negative_four");
  const int residue = Int(d % 4).convert_to<int>();
  if (residue == 2 || residue == 3) {
    const Solvability neg = solve_negative_one(d);
    if (const PellSolution* s = solution_of(neg))
      return PellSolution{2 * s->x, 2 * s->y, 1, -4};
    return NoSolution{NoSolutionReason::kTheorem1Equivalence};
  }
  if (residue == 0) {
    const Int quarter = d / 4;
    if (is_perfect_square(quarter))
      throw domain_error("solve_negative_four: d/4 is a perfect square");
    // x must be even; (x/2)^2 - (d/4) y^2 = -1.
    const Solvability neg = solve_negative_one(quarter);
    if (const PellSolution* s = solution_of(neg))
      return PellSolution{2 * s->x, s->y, 1, -4};
    return NoSolution{NoSolutionReason::kReductionToKnownUnsolvable};
  }
  // d = 1 (mod 4): no general criterion; bounded search over y.
  for (Int y = 1; y <= search_bound; ++y) {
    const Int t = d * y * y - 4;
    if (t >= 0 && is_perfect_square(t)) return PellSolution{isqrt(t), y, 1, -4};
  }
  return Undetermined{search_bound};
}

PellSolution compose(const PellSolution& seed, const PellSolution& unit,
                     const Int& d, int sign) {
  if (sign != 1 && sign != -1) throw domain_error("compose: sign must be +-1");
  if (!is_solution(d, seed.rhs, seed.x, seed.y))
    throw domain_error("compose: seed does not satisfy its equation");
  if (unit.rhs != 1 || !is_solution(d, 1, unit.x, unit.y))
    throw domain_error("compose: unit is not a solution of rhs 1");
  if (unit.x == 1 && unit.y == 0)
    throw domain_error("compose: identity unit rejected");
  Int x = seed.x * unit.x + sign * d * seed.y * unit.y;
  Int y = seed.x * unit.y + sign * seed.y * unit.x;
  if (sign == -1) {
    x = abs(x);
    y = abs(y);
  }
  if (!is_solution(d, seed.rhs, x, y))
    throw domain_error("compose: result failed verification");
  const std::int64_t n =
      std::max<std::int64_t>(1, seed.n + sign * unit.n);
  return {std::move(x), std::move(y), n, seed.rhs};
}

}  // namespace pellkit
