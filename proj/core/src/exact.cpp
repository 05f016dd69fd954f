#include "eatpc/exact.hpp"

#include <algorithm>
#include <limits>

namespace eatpc {
namespace {

BigInt pow10(unsigned e) {
  BigInt p = 1;
  for (unsigned i = 0; i < e; ++i) p *= 10;
  return p;
}

// Round-half-even of num / den for num >= 0, den > 0.
BigInt divide_round_even(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  const BigInt twice_rem = 2 * (num % den);
  if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) ++q;
  return q;
}

// q * 10^-scale rendered as a decimal string.
std::string place_point(const BigInt& q, long long scale, bool strip_zeros) {
  std::string s = q.str();
  if (scale <= 0) {
    s.append(static_cast<std::size_t>(-scale), '0');
    return s;
  }
  const auto frac = static_cast<std::size_t>(scale);
  if (s.size() <= frac) s.insert(0, frac + 1 - s.size(), '0');
  s.insert(s.size() - frac, 1, '.');
  if (strip_zeros) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt binomial_sum(unsigned m, long long lo, long long hi) {
  lo = std::max(lo, 0LL);
  hi = std::min(hi, static_cast<long long>(m));
  if (lo > hi) return 0;
  BigInt term = binomial(m, static_cast<unsigned>(lo));
  BigInt sum = term;
  for (long long i = lo; i < hi; ++i) {
    term *= static_cast<unsigned>(m - i);
    term /= static_cast<unsigned>(i + 1);
    sum += term;
  }
  return sum;
}

BigInt pow2(unsigned e) {
  BigInt p = 1;
  p <<= e;
  return p;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return v.convert_to<std::int64_t>();
}

std::string ExactRatio::fraction() const { return numerator.str() + "/" + denominator.str(); }

std::string to_decimal_significant(const Rational& v, unsigned significant) {
  if (v == 0) return "0";
  if (significant == 0) significant = 1;
  const bool negative = v < 0;
  const BigInt a = abs(boost::multiprecision::numerator(v));
  const BigInt d = boost::multiprecision::denominator(v);

  // e = floor(log10(a / d)); the digit-count estimate is off by at most one.
  long long e = static_cast<long long>(a.str().size()) - static_cast<long long>(d.str().size());
  const bool below = e >= 0 ? a < d * pow10(static_cast<unsigned>(e))
                            : a * pow10(static_cast<unsigned>(-e)) < d;
  if (below) --e;

  long long scale = static_cast<long long>(significant) - 1 - e;
  BigInt q = scale >= 0 ? divide_round_even(a * pow10(static_cast<unsigned>(scale)), d)
                        : divide_round_even(a, d * pow10(static_cast<unsigned>(-scale)));
  if (q == pow10(significant)) {
    q /= 10;
    --scale;
  }
  std::string out = place_point(q, scale, true);
  return negative ? "-" + out : out;
}

std::string to_decimal_fixed(const Rational& v, unsigned places) {
  const bool negative = v < 0;
  const BigInt a = abs(boost::multiprecision::numerator(v));
  const BigInt d = boost::multiprecision::denominator(v);
  const BigInt q = divide_round_even(a * pow10(places), d);
  std::string out = place_point(q, places, false);
  return negative && q != 0 ? "-" + out : out;
}

}  // namespace eatpc
