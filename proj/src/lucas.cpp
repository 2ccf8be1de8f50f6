#include "pellkit/lucas.hpp"

namespace pellkit {

namespace {

Int exact_half(Int v, const char* where) {
  if (v % 2 != 0) throw domain_error(std::string(where) + ": odd value");
  return v / 2;
}

}  // namespace

Int u_n(const SequenceParams& params, std::int64_t n) {
  if (n < 0) throw domain_error("u_n: n must be >= 0");
  Int prev = 0, cur = 1;  // U_0, U_1
  if (n == 0) return prev;
  for (std::int64_t i = 1; i < n; ++i) {
    Int next = params.k * cur + params.s * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int v_n(const SequenceParams& params, std::int64_t n) {
  if (n < 0) throw domain_error("v_n: n must be >= 0");
  Int prev = 2, cur = params.k;  // V_0, V_1
  if (n == 0) return prev;
  for (std::int64_t i = 1; i < n; ++i) {
    Int next = params.k * cur + params.s * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::pair<Int, Int> binet_pair(const SequenceParams& params, std::int64_t n) {
  if (n < 0) throw domain_error("binet_pair: n must be >= 0");
  const Int D = params.discriminant();
  // alpha^m alpha^l = ((V_m V_l + D U_m U_l)/2 + ((V_m U_l + U_m V_l)/2) sqrt(D)) / 2;
  // both halves divide exactly.
  auto mul = [&](const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
    return std::pair<Int, Int>{
        exact_half(a.first * b.first + D * a.second * b.second, "binet_pair"),
        exact_half(a.first * b.second + a.second * b.first, "binet_pair")};
  };
  std::pair<Int, Int> acc{2, 0};              // alpha^0
  std::pair<Int, Int> base{params.k, 1};      // alpha^1
  std::int64_t e = n;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

}  // namespace pellkit
