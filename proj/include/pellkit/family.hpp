#pragma once

#include <cstdint>
#include <vector>

#include "pellkit/bigint.hpp"
#include "pellkit/cf.hpp"
#include "pellkit/pell.hpp"

namespace pellkit {

enum class Family {
  kF1,  // d = a^2 b^2 - b
  kF2,  // d = a^2 b^2 - 2b
};

/// Validated parameters for one of the two d-families.
/// F1 requires a >= 2, F2 requires a >= 3; b >= 1 for both.
struct FamilyParams {
  Family family;
  Int a;
  Int b;
  Int d;

  static FamilyParams make(Family family, const Int& a, const Int& b);

  SurdExpansion closed_form_cf() const;
};

enum class Corollary {
  kD9k2Minus3Rhs1,  // x^2 - (9k^2 - 3) y^2 = 1
  kD9k2Minus3Rhs4,
  kD9k2Minus6Rhs1,  // x^2 - (9k^2 - 6) y^2 = 1
  kD9k2Minus6Rhs4,
};

/// n-th solution of x^2 - d*y^2 = rhs (rhs in {1, -1, 4, -4}) for a
/// family d, via the Lucas-sequence closed forms. Unsolvable right-hand
/// sides come back as NoSolution with the proof tag; F1 rhs = -4 has no
/// closed form and is answered by the generic solver.
Solvability family_solve(const FamilyParams& params, int rhs, std::int64_t n,
                         const Int& search_bound = Int(1000000));

/// Closed-form fundamental solution for rhs in {1, 4}.
PellSolution family_fundamental(const FamilyParams& params, int rhs);

/// The finite continued fraction word [a0; (period)_{n-1}, 1] whose
/// value is x_n / y_n for rhs = 1.
std::vector<Int> nth_quotient_form(const FamilyParams& params, std::int64_t n);

/// n-th solution of the corollary equation, post-verified by substitution.
PellSolution corollary_solve(Corollary which, const Int& k, std::int64_t n);

Int corollary_d(Corollary which, const Int& k);
int corollary_rhs(Corollary which);

}  // namespace pellkit
