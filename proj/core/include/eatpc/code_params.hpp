#pragma once

#include <string>

#include "eatpc/exact.hpp"

namespace eatpc {

enum class DistanceKind { exact, lower_bound, unknown };

/// Where a parameter record came from.
enum class ParamSource { rm_closed_form, tpc_closed_form, computed, user };

/// [n, k, d] of a classical binary linear code, with rho = n - k.
struct ClassicalCodeParams {
  BigInt n;
  BigInt k;
  BigInt d;
  BigInt rho;
  DistanceKind d_kind = DistanceKind::exact;
  ParamSource source = ParamSource::user;

  /// Validates 0 <= k <= n and d >= 1 (unless d_kind is unknown).
  static ClassicalCodeParams make(BigInt n, BigInt k, BigInt d,
                                  DistanceKind d_kind = DistanceKind::exact,
                                  ParamSource source = ParamSource::user);

  /// "[16,5,8]"
  std::string describe() const;
};

/// [[n, k_logical, >= d_lower; n_e]] of an entanglement-assisted code.
struct EaCodeParams {
  BigInt n;
  BigInt k_logical;
  BigInt d_lower;
  BigInt n_e;

  /// "[[16,0,>=8;6]]"
  std::string describe() const;

  friend bool operator==(const EaCodeParams&, const EaCodeParams&) = default;
};

const char* to_string(ParamSource source);
const char* to_string(DistanceKind kind);

}  // namespace eatpc
