#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace semigroup {

/// Arbitrary-precision signed integer used for every semigroup element.
using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

/// Returns the value if it fits in a signed 64-bit word.
std::optional<std::int64_t> to_int64(const Integer& value);

/// Returns the value as a machine index if it is non-negative and at most `limit`.
std::optional<std::size_t> to_index(const Integer& value, std::size_t limit);

Integer gcd(const Integer& x, const Integer& y);
Integer pow(const Integer& base, unsigned long exponent);

/// Floor division and the matching non-negative remainder for a positive divisor.
Integer floor_div(const Integer& x, const Integer& divisor);
Integer floor_mod(const Integer& x, const Integer& divisor);

/// (b^i - 1)/(b - 1), the base-b repunit with i ones.
Integer repunit(const Integer& b, unsigned long i);

}  // namespace semigroup
