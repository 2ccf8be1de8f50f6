#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pellkit {

using Int = boost::multiprecision::cpp_int;

/// Floor of the square root of a nonnegative integer.
/// Values fitting in 64 bits take a hardware-sqrt fast path.
Int isqrt(const Int& n);

/// True iff an integer r exists with r*r == n.
bool is_perfect_square(const Int& n);

/// Thrown on precondition violations (square d, out-of-range family
/// parameters, and the like).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace pellkit
