#include "eatpc/tensor_product.hpp"

#include <algorithm>

#include "eatpc/reed_muller.hpp"

namespace eatpc {

Gf2Matrix tpc_parity(const Gf2Matrix& h1, const Gf2Matrix& h2) { return kron(h1, h2); }

Gf2Matrix tpc_generator(const Gf2Matrix& h1, const Gf2Matrix& h2) {
  return kernel_basis(tpc_parity(h1, h2));
}

ClassicalCodeParams tpc_params(const ClassicalCodeParams& c1, const ClassicalCodeParams& c2) {
  const BigInt n = c1.n * c2.n;
  DistanceKind kind = DistanceKind::exact;
  if (c1.d_kind == DistanceKind::unknown || c2.d_kind == DistanceKind::unknown) {
    kind = DistanceKind::unknown;
  } else if (c1.d_kind == DistanceKind::lower_bound || c2.d_kind == DistanceKind::lower_bound) {
    kind = DistanceKind::lower_bound;
  }
  return ClassicalCodeParams::make(n, n - c1.rho * c2.rho, std::min(c1.d, c2.d), kind,
                                   ParamSource::tpc_closed_form);
}

Gf2Matrix product_generator(const Gf2Matrix& g1, const Gf2Matrix& g2) { return kron(g1, g2); }

RmTpcContainmentReport check_rm_tpc_containments(unsigned r1, unsigned m1, unsigned r2, unsigned m2,
                                                 unsigned r, unsigned max_total_m) {
  const RmSpec s1(r1, m1);
  const RmSpec s2(r2, m2);
  const unsigned m = m1 + m2;
  if (m > max_total_m) {
    throw CapacityError("containment check over m1 + m2 = " + std::to_string(m) +
                        " variables exceeds the cap of " + std::to_string(max_total_m));
  }
  if (r >= m && m > 0) {
    throw ValidationError("containment check needs r < m1 + m2, got r = " + std::to_string(r));
  }

  RmTpcContainmentReport report;
  const Gf2Matrix product = product_generator(generator_matrix(s1), generator_matrix(s2));
  const Gf2Matrix big = generator_matrix(RmSpec(r1 + r2, m));
  report.product_in_rm = row_space_contains(big, product);
  if ((r1 == 0 && m1 == 0) || (r2 == 0 && m2 == 0)) {
    report.product_equals_rm = report.product_in_rm && row_space_contains(product, big);
  }

  const Gf2Matrix split = product_generator(generator_matrix(RmSpec(std::min(r, m1), m1)),
                                            generator_matrix(RmSpec(std::min(r, m2), m2)));
  report.rm_in_product = row_space_contains(split, generator_matrix(RmSpec(std::min(r, m), m)));
  return report;
}

}  // namespace eatpc
