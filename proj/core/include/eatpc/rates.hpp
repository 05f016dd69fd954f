#pragma once

// Exact rate algebra for EA codes and the catalytic-rate analysis of square
// and mixed EA RM tensor-product codes.

#include <string>
#include <utility>

#include "eatpc/code_params.hpp"
#include "eatpc/exact.hpp"
#include "eatpc/reed_muller.hpp"

namespace eatpc {

struct RateReport {
  /// k_logical / n
  ExactRatio ea_rate;
  /// (k_logical / n, n_e / n)
  std::pair<ExactRatio, ExactRatio> tradeoff;
  /// (k_logical - n_e) / n
  ExactRatio catalytic;
  /// k_logical - n_e
  BigInt catalytic_count;
};

/// All three rates over the common denominator n. Throws ValidationError if n <= 0.
RateReport rates(const EaCodeParams& p);

/// n - 2 rho + n_e of the EA RM code. Requires 2r + 1 < m.
BigInt ea_rm_logical_qubits(const RmSpec& spec);

/// Logical qubits of the EA TPC of RM(r1,m1) and RM(r2,m2) from the closed
/// form A1 (A2 + sum_{i=m2-r2}^{m2} C(m2,i)) with A = sum_{i<=r} C(m,i).
/// Requires 2 r_i + 1 <= m_i for both components.
BigInt ea_tpc_logical_qubits(const RmSpec& s1, const RmSpec& s2);

/// 2 A1 A2 - B1 B2 with B = sum_{i=r+1}^{m-r-1} C(m,i): logical qubits
/// minus ebits of the EA RM TPC. Same requirement as above.
BigInt catalytic_count(const RmSpec& s1, const RmSpec& s2);

/// Sign test for the square TPC of RM(r, 2r+s). With a = sum_{u<=r} C(2r+s,u)
/// and b = 2^(2r+s) - 2a, true iff b < 0 or 2a^2 > b^2. Requires r, s >= 1.
bool positive_catalytic_test(unsigned r, unsigned s);

/// Largest s >= 1 for which positive_catalytic_test(r, s) holds, found by
/// scanning upward until the first failure. Requires r >= 1.
unsigned l_of_r(unsigned r);

enum class Region { qrm, ea_tpc_positive_catalytic, ea_tpc_nonpositive_catalytic };

/// "QRM", "EA_TPC_POSITIVE_CATALYTIC", "EA_TPC_NONPOSITIVE_CATALYTIC"
const char* to_string(Region region);

/// QRM when 2r + 1 >= m, positive when 2r + 2 <= m <= 2r + l(r), otherwise
/// non-positive. For r = 0 the sign of the catalytic count decides directly.
Region classify(unsigned r, unsigned m);

struct SuperadditivityReport {
  /// (n1 n2 + ne1 ne2 - 2 rho1 rho2) / (n1 n2)
  ExactRatio tpc_rate;
  /// (n_i + ne_i - 2 rho_i) / n_i
  ExactRatio component1_rate;
  ExactRatio component2_rate;
  /// tpc_rate >= max(component rates)
  bool holds = false;
  /// ne1 < rho1 and ne2 < rho2, where the inequality should be strict
  bool strict_applies = false;
  bool strict_holds = false;
};

SuperadditivityReport superadditivity_check(const ClassicalCodeParams& c1,
                                            const ClassicalCodeParams& c2, const BigInt& ne1,
                                            const BigInt& ne2);

/// n - 2d + 2. Throws ValidationError if d < 1.
BigInt grassl_bound_margin(const BigInt& n, const BigInt& d);

}  // namespace eatpc
