#pragma once

#include <cstddef>
#include <vector>

#include "pellkit/bigint.hpp"

namespace pellkit {

/// Periodic continued fraction of sqrt(d): [a0; period...], where the
/// period's last entry is 2*a0 and the tail repeats forever.
struct SurdExpansion {
  Int d;
  Int a0;
  std::vector<Int> period;

  std::size_t period_length() const { return period.size(); }

  /// Partial quotient a_k (k = 0 is a0; k >= 1 cycles through the period).
  const Int& quotient(std::size_t k) const {
    return k == 0 ? a0 : period[(k - 1) % period.size()];
  }

  bool operator==(const SurdExpansion&) const = default;
};

/// Convergent p_k / q_k of a continued fraction.
struct Convergent {
  std::size_t k;
  Int p;
  Int q;

  bool operator==(const Convergent&) const = default;
};

/// PQa expansion of sqrt(d). Requires d >= 2 and non-square.
SurdExpansion cf_expand(const Int& d);

/// First `count` convergents (k = 0 .. count-1) of the expansion,
/// cycling the period beyond the first occurrence.
std::vector<Convergent> convergents(const SurdExpansion& exp, std::size_t count);

/// Evaluates a finite continued fraction word [w0; w1, ..., wn] by the
/// convergent recurrences, returning the final (p, q).
Convergent evaluate_word(const std::vector<Int>& word);

/// Closed-form expansion of sqrt(a^2 b^2 - b):
/// [a-1; 1, 2a-2] when b = 1, [ab-1; 1, 2a-2, 1, 2ab-2] when b > 1.
/// Requires a >= 2, b >= 1.
SurdExpansion family1_cf(const Int& a, const Int& b);

/// Closed-form expansion of sqrt(a^2 b^2 - 2b): [ab-1; 1, a-2, 1, 2ab-2].
/// Requires a >= 3, b >= 1.
SurdExpansion family2_cf(const Int& a, const Int& b);

}  // namespace pellkit
