#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "pellkit/bigint.hpp"
#include "pellkit/cf.hpp"

namespace pellkit {

/// A positive solution of x^2 - d*y^2 = rhs. n = 1 marks the
/// fundamental (least positive) solution; n indexes unit powers.
struct PellSolution {
  Int x;
  Int y;
  std::int64_t n = 1;
  int rhs = 1;

  bool operator==(const PellSolution&) const = default;
};

enum class NoSolutionReason {
  kEvenPeriod,                  // period length of sqrt(d) is even
  kTheorem1Equivalence,         // -4 reduces to -1 for d = 2, 3 (mod 4)
  kTheorem14Parity,             // parity argument for d = a^2 b^2 - 2b
  kReductionToKnownUnsolvable,  // d = 0 (mod 4): reduces to -1 over d/4
};

std::string_view to_string(NoSolutionReason reason);

struct NoSolution {
  NoSolutionReason reason;
  bool operator==(const NoSolution&) const = default;
};

struct Undetermined {
  Int searched_bound;
  bool operator==(const Undetermined&) const = default;
};

/// Three-valued solvability verdict.
using Solvability = std::variant<PellSolution, NoSolution, Undetermined>;

inline const PellSolution* solution_of(const Solvability& s) {
  return std::get_if<PellSolution>(&s);
}

/// True iff x^2 - d*y^2 == N exactly.
bool is_solution(const Int& d, const Int& N, const Int& x, const Int& y);

/// Least positive solution of x^2 - d*y^2 = 1: the convergent at index
/// m-1 (m even) or 2m-1 (m odd), m the period length of sqrt(d).
PellSolution fundamental_unit(const Int& d);

/// x^2 - d*y^2 = -1: solvable with (p_{m-1}, q_{m-1}) iff m is odd.
Solvability solve_negative_one(const Int& d);

/// n-th solution from the fundamental unit by binary exponentiation in
/// the ring Z[sqrt(d)]. Rejects n = 0 (the trivial solution (1, 0)).
PellSolution nth_solution(const Int& d, const PellSolution& fund, std::int64_t n);

/// Fundamental solution of x^2 - d*y^2 = 4.
/// d = 0 (mod 4): (2*x1, y1) from the unit of d/4; otherwise (2*x1, 2*y1).
PellSolution solve_four(const Int& d);

/// x^2 - d*y^2 = -4. d = 2, 3 (mod 4): equivalent to rhs -1 (doubled
/// solution). d = 0 (mod 4): reduces to rhs -1 over d/4. d = 1 (mod 4):
/// bounded search over y, Undetermined past the bound.
Solvability solve_negative_four(const Int& d, const Int& search_bound);

/// Combines a solution of x^2 - d*y^2 = N with a unit:
/// (g*r + sign*d*h*s, g*s + sign*h*r). Inputs are checked against their
/// defining equations.
PellSolution compose(const PellSolution& seed, const PellSolution& unit,
                     const Int& d, int sign);

}  // namespace pellkit
