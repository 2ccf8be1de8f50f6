#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pellkit/bigint.hpp"
#include "pellkit/pell.hpp"

namespace pellkit {

/// Result of an exhaustive scan over y = 1 .. y_max.
struct SearchReport {
  Int d;
  Int rhs;
  Int y_max;
  std::vector<PellSolution> found;  // ordered by increasing y
  bool exhausted = true;
};

/// Tests d*y^2 + rhs for a nonnegative perfect square at every
/// y in 1 .. y_max; exact integer arithmetic throughout.
SearchReport brute_force(const Int& d, const Int& rhs, const Int& y_max);

/// Grid bounds for cross_check / the verify command.
struct CrossCheckGrid {
  std::int64_t a_max = 12;
  std::int64_t b_max = 12;
  std::int64_t n_max = 8;
  std::int64_t k_max = 8;
  Int y_bound = 10000;
};

/// One disagreement between two computation routes.
struct Discrepancy {
  std::string where;   // grid coordinates, e.g. "F1 a=2 b=3 rhs=1 n=2"
  std::string detail;  // what disagreed with what

  bool operator==(const Discrepancy&) const = default;
};

/// Recomputes every grid point by independent routes (family closed
/// forms, unit powers, brute force, PQa) and reports mismatches.
/// Deterministic output for any jobs count; empty list means agreement.
std::vector<Discrepancy> cross_check(const CrossCheckGrid& grid,
                                     unsigned jobs = 1);

}  // namespace pellkit
