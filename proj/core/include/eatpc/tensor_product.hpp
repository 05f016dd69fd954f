#pragma once

// Classical tensor-product codes (parity check H1 (x) H2) and product codes
// (generator G1 (x) G2), plus their parameter algebra.

#include <cstdint>

#include "eatpc/code_params.hpp"
#include "eatpc/error.hpp"
#include "eatpc/gf2.hpp"

namespace eatpc {

/// Parity check of the TPC: kron(h1, h2).
Gf2Matrix tpc_parity(const Gf2Matrix& h1, const Gf2Matrix& h2);

/// A generator for the TPC, taken as the kernel of its parity check.
Gf2Matrix tpc_generator(const Gf2Matrix& h1, const Gf2Matrix& h2);

/// [n1 n2, n1 n2 - rho1 rho2, min(d1, d2)]
ClassicalCodeParams tpc_params(const ClassicalCodeParams& c1, const ClassicalCodeParams& c2);

/// Generator of the product code: kron(g1, g2).
Gf2Matrix product_generator(const Gf2Matrix& g1, const Gf2Matrix& g2);

struct RmTpcContainmentReport {
  /// RM(r1,m1) (x) RM(r2,m2) lies inside RM(r1 + r2, m1 + m2).
  bool product_in_rm = false;
  /// RM(r, m1 + m2) lies inside RM(min(r,m1),m1) (x) RM(min(r,m2),m2).
  bool rm_in_product = false;
  /// Set when one component is (0,0); then the first inclusion is an equality.
  bool product_equals_rm = false;
};

/// Row-space checks of the two RM / product-code inclusions. Requires
/// r < m1 + m2 and m1 + m2 <= max_total_m.
RmTpcContainmentReport check_rm_tpc_containments(unsigned r1, unsigned m1, unsigned r2, unsigned m2,
                                                 unsigned r,
                                                 unsigned max_total_m = Limits::kContainmentVariables);

}  // namespace eatpc
