#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fqw {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Exact integer/rational arithmetic. All verification is exact; floating
// point appears only in display approximations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an exhaustive enumeration would exceed its configured cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Default bound on exhaustive enumerations (unipotent groups, pattern sets).
inline constexpr i64 kDefaultEnumCap = 10'000'000;

// Hard bound on field size: a dlog table with q entries must fit in memory.
inline constexpr i64 kFieldSizeCap = i64{1} << 20;

inline i64 to_i64_checked(const BigInt& v, const char* what) {
  if (v > BigInt{std::numeric_limits<i64>::max()} ||
      v < BigInt{std::numeric_limits<i64>::min()}) {
    throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
  }
  return static_cast<i64>(v);
}

}  // namespace fqw
