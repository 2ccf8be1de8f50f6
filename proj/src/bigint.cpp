#include "pellkit/bigint.hpp"

#include <cmath>
#include <cstdint>

namespace pellkit {

namespace {

// Hardware sqrt gives a result within 1 ulp for inputs below 2^64;
// fix it up with exact integer comparisons.
std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (r > UINT64_C(0xFFFFFFFF) || r * r > n)) --r;
  while ((r + 1) <= UINT64_C(0xFFFFFFFF) && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Int isqrt(const Int& n) {
  if (n < 0) throw domain_error("isqrt: negative argument");
  if (n <= UINT64_C(0xFFFFFFFFFFFFFFFF)) {
    return Int(isqrt_u64(n.convert_to<std::uint64_t>()));
  }
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  // Squares are 0, 1, 4, or 9 mod 16; rejects 3/4 of inputs cheaply.
  const unsigned r = Int(n & 0xF).convert_to<unsigned>();
  if (r != 0 && r != 1 && r != 4 && r != 9) return false;
  const Int s = isqrt(n);
  return s * s == n;
}

}  // namespace pellkit
