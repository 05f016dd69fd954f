#pragma once

// Exact integer and rational helpers. Everything that can exceed 64 bits
// (binomial sums, 2^m lengths, rate numerators) goes through BigInt.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace eatpc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(unsigned n, unsigned k);

/// Sum of C(m, i) for i in [lo, hi]; zero when the range is empty (lo > hi).
/// Signed bounds so callers can pass m - r - 1 without underflow games.
BigInt binomial_sum(unsigned m, long long lo, long long hi);

BigInt pow2(unsigned e);

std::string to_string(const BigInt& v);

/// Value as int64 when it fits.
std::optional<std::int64_t> to_int64(const BigInt& v);

/// A ratio kept with its original denominator (rates are always "something
/// over n", and the unreduced form is what people compare against).
struct ExactRatio {
  BigInt numerator;
  BigInt denominator{1};

  Rational value() const { return Rational(numerator, denominator); }

  /// "14/256"
  std::string fraction() const;

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.value() == b.value();
  }
};

/// Decimal rendering rounded (half-even) to `significant` significant
/// digits, trailing zeros stripped. Exact whenever the expansion terminates
/// within that many digits.
std::string to_decimal_significant(const Rational& v, unsigned significant = 17);

/// Decimal rendering rounded (half-even) to `places` digits after the point.
std::string to_decimal_fixed(const Rational& v, unsigned places);

}  // namespace eatpc
