#include "pellkit/cf.hpp"

namespace pellkit {

SurdExpansion cf_expand(const Int& d) {
  if (d < 2) throw domain_error("cf_expand: d must be >= 2");
  const Int a0 = isqrt(d);
  if (a0 * a0 == d) throw domain_error("cf_expand: d is a perfect square");

  SurdExpansion out{d, a0, {}};
  // State (P_k, Q_k) with P_0 = 0, Q_0 = 1; the period ends at the
  // first k >= 1 with Q_k = 1 (equivalently a_k = 2*a0 there).
  Int P = 0, Q = 1, a = a0;
  while (true) {
    P = a * Q - P;
    Q = (d - P * P) / Q;
    a = (P + a0) / Q;
    out.period.push_back(a);
    if (Q == 1) break;
  }
  return out;
}

std::vector<Convergent> convergents(const SurdExpansion& exp, std::size_t count) {
  std::vector<Convergent> out;
  out.reserve(count);
  Int p_prev2 = 0, p_prev = 1;  // p_{-2}, p_{-1}
  Int q_prev2 = 1, q_prev = 0;  // q_{-2}, q_{-1}
  for (std::size_t k = 0; k < count; ++k) {
    const Int& a = exp.quotient(k);
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    out.push_back({k, p, q});
    p_prev2 = std::move(p_prev);
    p_prev = std::move(p);
    q_prev2 = std::move(q_prev);
    q_prev = std::move(q);
  }
  return out;
}

Convergent evaluate_word(const std::vector<Int>& word) {
  if (word.empty()) throw domain_error("evaluate_word: empty word");
  Int p_prev2 = 0, p_prev = 1;
  Int q_prev2 = 1, q_prev = 0;
  for (const Int& a : word) {
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    p_prev2 = std::move(p_prev);
    p_prev = std::move(p);
    q_prev2 = std::move(q_prev);
    q_prev = std::move(q);
  }
  return {word.size() - 1, p_prev, q_prev};
}

SurdExpansion family1_cf(const Int& a, const Int& b) {
  if (a < 2) throw domain_error("family1_cf: requires a >= 2");
  if (b < 1) throw domain_error("family1_cf: requires b >= 1");
  const Int d = a * a * b * b - b;
  if (b == 1) return {d, a - 1, {1, 2 * a - 2}};
  return {d, a * b - 1, {1, 2 * a - 2, 1, 2 * a * b - 2}};
}

SurdExpansion family2_cf(const Int& a, const Int& b) {
  if (a < 3) throw domain_error("family2_cf: requires a >= 3");
  if (b < 1) throw domain_error("family2_cf: requires b >= 1");
  const Int d = a * a * b * b - 2 * b;
  return {d, a * b - 1, {1, a - 2, 1, 2 * a * b - 2}};
}

}  // namespace pellkit
