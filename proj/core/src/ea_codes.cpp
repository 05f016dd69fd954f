#include "eatpc/error.hpp"
#include "eatpc/reed_muller.hpp"
#include "eatpc/stabilizer.hpp"
#include "eatpc/tensor_product.hpp"

namespace eatpc {

EaCodeParams ea_css_params(const ClassicalCodeParams& c, const BigInt& n_e) {
  if (n_e < 0) throw ValidationError("ebit count must be non-negative, got " + n_e.str());
  const BigInt logical = c.n - 2 * c.rho + n_e;
  if (logical < 0) {
    throw ValidationError("EA CSS construction infeasible: n - 2 rho + n_e = " + logical.str() +
                          " < 0 for " + c.describe() + " with n_e = " + n_e.str());
  }
  return {c.n, logical, c.d, n_e};
}

EaCodeParams ea_rm_params(const RmSpec& spec) {
  return ea_css_params(rm_params(spec), ebit_count_rm_closed_form(spec));
}

EaCodeParams ea_tpc_params(const ClassicalCodeParams& c1, const ClassicalCodeParams& c2,
                           const BigInt& ne1, const BigInt& ne2) {
  return ea_css_params(tpc_params(c1, c2), ne1 * ne2);
}

EaRmTpc ea_rm_tpc(const RmSpec& s1, const RmSpec& s2, std::uint64_t audit_cap) {
  EaRmTpc out{rm_params(s1), rm_params(s2), {}, {}, std::nullopt};
  out.classical = tpc_params(out.component1, out.component2);
  out.ea = ea_tpc_params(out.component1, out.component2, ebit_count_rm_closed_form(s1),
                         ebit_count_rm_closed_form(s2));
  if (out.classical.n <= audit_cap) {
    out.direct_n_e = ebit_count(tpc_parity(parity_check_matrix(s1), parity_check_matrix(s2)));
  }
  return out;
}

}  // namespace eatpc
