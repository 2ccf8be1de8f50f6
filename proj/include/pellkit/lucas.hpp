#pragma once

#include <cstdint>
#include <utility>

#include "pellkit/bigint.hpp"

namespace pellkit {

/// Parameters (k, s) of the generalized Fibonacci/Lucas recurrences
/// W_{n+1} = k*W_n + s*W_{n-1}. Requires k != 0, s != 0, k^2 + 4s > 0.
struct SequenceParams {
  Int k;
  Int s;

  SequenceParams(Int k_, Int s_) : k(std::move(k_)), s(std::move(s_)) {
    if (k == 0 || s == 0)
      throw domain_error("SequenceParams: k and s must be non-zero");
    if (discriminant() <= 0)
      throw domain_error("SequenceParams: k^2 + 4s must be positive");
  }

  Int discriminant() const { return k * k + 4 * s; }
};

/// U_n(k, s): U_0 = 0, U_1 = 1, recurrence above. Requires n >= 0.
Int u_n(const SequenceParams& params, std::int64_t n);

/// V_n(k, s): V_0 = 2, V_1 = k.
Int v_n(const SequenceParams& params, std::int64_t n);

/// (V_n, U_n) read off alpha^n = (V_n + U_n sqrt(D)) / 2, computed by
/// binary exponentiation in the half-integer ring — an evaluation of
/// Binet's formulas independent of the recurrences.
std::pair<Int, Int> binet_pair(const SequenceParams& params, std::int64_t n);

}  // namespace pellkit
