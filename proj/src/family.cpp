#include "pellkit/family.hpp"

#include "pellkit/lucas.hpp"

namespace pellkit {

namespace {

PellSolution verified(const Int& d, int rhs, Int x, Int y, std::int64_t n,
                      const char* where) {
  if (!is_solution(d, rhs, x, y))
    throw domain_error(std::string(where) + ": closed form failed verification");
  return {std::move(x), std::move(y), n, rhs};
}

// Lucas parameter k for the unit alpha = x1 + y1 sqrt(d): k = 2*x1, s = -1.
SequenceParams lucas_params(const FamilyParams& p) {
  if (p.family == Family::kF1 && p.b == 1) return {2 * p.a, -1};
  if (p.family == Family::kF1) return {4 * p.a * p.a * p.b - 2, -1};
  return {2 * p.a * p.a * p.b - 2, -1};
}

// Multiplier turning U_n into y_n for rhs = 1.
Int y_scale(const FamilyParams& p) {
  if (p.family == Family::kF1) return p.b == 1 ? Int(1) : 2 * p.a;
  return p.a;
}

}  // namespace

FamilyParams FamilyParams::make(Family family, const Int& a, const Int& b) {
  if (b < 1) throw domain_error("FamilyParams: requires b >= 1");
  if (family == Family::kF1 && a < 2)
    throw domain_error("FamilyParams: family 1 requires a >= 2");
  if (family == Family::kF2 && a < 3)
    throw domain_error("FamilyParams: family 2 requires a >= 3");
  const Int d = family == Family::kF1 ? Int(a * a * b * b - b)
                                      : Int(a * a * b * b - 2 * b);
  if (d < 2) throw domain_error("FamilyParams: d must be >= 2");
  if (is_perfect_square(d))
    throw domain_error("FamilyParams: d is a perfect square");
  return {family, a, b, d};
}

SurdExpansion FamilyParams::closed_form_cf() const {
  return family == Family::kF1 ? family1_cf(a, b) : family2_cf(a, b);
}

Solvability family_solve(const FamilyParams& params, int rhs, std::int64_t n,
                         const Int& search_bound) {
  if (n < 1) throw domain_error("family_solve: n must be >= 1");
  switch (rhs) {
    case 1: {
      const SequenceParams seq = lucas_params(params);
      Int x = v_n(seq, n) / 2;
      Int y = y_scale(params) * u_n(seq, n);
      return verified(params.d, 1, std::move(x), std::move(y), n,
                      "family_solve");
    }
    case 4: {
      const SequenceParams seq = lucas_params(params);
      Int x = v_n(seq, n);
      Int y = 2 * y_scale(params) * u_n(seq, n);
      return verified(params.d, 4, std::move(x), std::move(y), n,
                      "family_solve");
    }
    case -1:
      // Both families have even period length.
      return NoSolution{NoSolutionReason::kEvenPeriod};
    case -4:
      if (params.family == Family::kF2)
        return NoSolution{NoSolutionReason::kTheorem14Parity};
      // F1 has no closed form for rhs = -4; fall back to the generic
      // solver, then lift the fundamental to the n-th solution.
      {
        Solvability verdict = solve_negative_four(params.d, search_bound);
        if (const PellSolution* s = solution_of(verdict); s && n > 1) {
          const PellSolution unit = fundamental_unit(params.d);
          return compose(*s, nth_solution(params.d, unit, n - 1), params.d, 1);
        }
        return verdict;
      }
    default:
      throw domain_error("family_solve: rhs must be one of {1, -1, 4, -4}");
  }
}

PellSolution family_fundamental(const FamilyParams& params, int rhs) {
  const bool f1 = params.family == Family::kF1;
  const Int& a = params.a;
  const Int& b = params.b;
  Int x, y;
  if (rhs == 1) {
    if (f1 && b == 1) {
      x = a;
      y = 1;
    } else if (f1) {
      x = 2 * a * a * b - 1;
      y = 2 * a;
    } else {
      x = a * a * b - 1;
      y = a;
    }
  } else if (rhs == 4) {
    if (f1 && b == 1) {
      x = 2 * a;
      y = 2;
    } else if (f1) {
      x = 4 * a * a * b - 2;
      y = 4 * a;
    } else {
      x = 2 * a * a * b - 2;
      y = 2 * a;
    }
  } else {
    throw domain_error("family_fundamental: rhs must be 1 or 4");
  }
  return verified(params.d, rhs, std::move(x), std::move(y), 1,
                  "family_fundamental");
}

std::vector<Int> nth_quotient_form(const FamilyParams& params, std::int64_t n) {
  if (n < 1) throw domain_error("nth_quotient_form: n must be >= 1");
  const SurdExpansion exp = params.closed_form_cf();
  std::vector<Int> word;
  word.reserve(1 + (n - 1) * exp.period.size() + 1);
  word.push_back(exp.a0);
  for (std::int64_t i = 1; i < n; ++i)
    word.insert(word.end(), exp.period.begin(), exp.period.end());
  // x_n / y_n = p_{nm-1} / q_{nm-1}: the last repetition stops one
  // quotient short of the full period.
  word.insert(word.end(), exp.period.begin(), exp.period.end() - 1);
  return word;
}

Int corollary_d(Corollary which, const Int& k) {
  switch (which) {
    case Corollary::kD9k2Minus3Rhs1:
    case Corollary::kD9k2Minus3Rhs4:
      return 9 * k * k - 3;
    case Corollary::kD9k2Minus6Rhs1:
    case Corollary::kD9k2Minus6Rhs4:
      return 9 * k * k - 6;
  }
  throw domain_error("corollary_d: bad enum");
}

int corollary_rhs(Corollary which) {
  return (which == Corollary::kD9k2Minus3Rhs4 ||
          which == Corollary::kD9k2Minus6Rhs4)
             ? 4
             : 1;
}

PellSolution corollary_solve(Corollary which, const Int& k, std::int64_t n) {
  if (k < 1) throw domain_error("corollary_solve: k must be >= 1");
  if (n < 1) throw domain_error("corollary_solve: n must be >= 1");
  const Int d = corollary_d(which, k);
  if (d < 2 || is_perfect_square(d))
    throw domain_error("corollary_solve: invalid d");
  Int x, y;
  switch (which) {
    case Corollary::kD9k2Minus3Rhs1: {
      SequenceParams seq{12 * k * k - 2, -1};
      x = v_n(seq, n) / 2;
      y = 2 * k * u_n(seq, n);
      break;
    }
    case Corollary::kD9k2Minus3Rhs4: {
      SequenceParams seq{12 * k * k - 2, -1};
      x = v_n(seq, n);
      y = 4 * k * u_n(seq, n);
      break;
    }
    case Corollary::kD9k2Minus6Rhs1: {
      SequenceParams seq{6 * k * k - 2, -1};
      x = v_n(seq, n) / 2;
      y = k * u_n(seq, n);
      break;
    }
    case Corollary::kD9k2Minus6Rhs4: {
      SequenceParams seq{6 * k * k - 2, -1};
      x = v_n(seq, n);
      y = 2 * k * u_n(seq, n);
      break;
    }
  }
  return verified(d, corollary_rhs(which), std::move(x), std::move(y), n,
                  "corollary_solve");
}

}  // namespace pellkit
