#include "eatpc/rates.hpp"

#include <algorithm>

#include "eatpc/error.hpp"
#include "eatpc/stabilizer.hpp"

namespace eatpc {
namespace {

BigInt low_sum(const RmSpec& s) { return binomial_sum(s.m(), 0, s.r()); }

BigInt middle_sum(const RmSpec& s) {
  return binomial_sum(s.m(), static_cast<long long>(s.r()) + 1,
                      static_cast<long long>(s.m()) - s.r() - 1);
}

void require_closed_form(const RmSpec& s, const char* what) {
  if (2 * s.r() + 1 > s.m()) {
    throw ValidationError(std::string(what) + ": RM(" + std::to_string(s.r()) + "," +
                          std::to_string(s.m()) + ") needs 2r + 1 <= m");
  }
}

// Sign test without the r, s >= 1 precondition; r = 0 is the classifier's
// degenerate row.
bool catalytic_sign(unsigned r, unsigned s) {
  const unsigned m = 2 * r + s;
  const BigInt a = binomial_sum(m, 0, r);
  const BigInt b = pow2(m) - 2 * a;
  return b < 0 || 2 * a * a > b * b;
}

unsigned largest_gap(unsigned r) {
  unsigned s = 1;
  while (catalytic_sign(r, s + 1)) ++s;
  return s;
}

}  // namespace

RateReport rates(const EaCodeParams& p) {
  if (p.n <= 0) throw ValidationError("rates: block length must be positive, got " + p.n.str());
  RateReport out;
  out.ea_rate = {p.k_logical, p.n};
  out.tradeoff = {out.ea_rate, ExactRatio{p.n_e, p.n}};
  out.catalytic_count = p.k_logical - p.n_e;
  out.catalytic = {out.catalytic_count, p.n};
  return out;
}

BigInt ea_rm_logical_qubits(const RmSpec& spec) {
  if (spec.dual_containing()) {
    throw ValidationError("ea_rm_logical_qubits: RM(" + std::to_string(spec.r()) + "," +
                          std::to_string(spec.m()) + ") needs 2r + 1 < m");
  }
  const ClassicalCodeParams c = rm_params(spec);
  return c.n - 2 * c.rho + ebit_count_rm_closed_form(spec);
}

BigInt ea_tpc_logical_qubits(const RmSpec& s1, const RmSpec& s2) {
  require_closed_form(s1, "ea_tpc_logical_qubits");
  require_closed_form(s2, "ea_tpc_logical_qubits");
  const BigInt top2 = binomial_sum(s2.m(), static_cast<long long>(s2.m()) - s2.r(), s2.m());
  return low_sum(s1) * (low_sum(s2) + top2);
}

BigInt catalytic_count(const RmSpec& s1, const RmSpec& s2) {
  require_closed_form(s1, "catalytic_count");
  require_closed_form(s2, "catalytic_count");
  return 2 * low_sum(s1) * low_sum(s2) - middle_sum(s1) * middle_sum(s2);
}

bool positive_catalytic_test(unsigned r, unsigned s) {
  if (r < 1 || s < 1) {
    throw ValidationError("positive_catalytic_test: needs r >= 1 and s >= 1, got r = " +
                          std::to_string(r) + ", s = " + std::to_string(s));
  }
  return catalytic_sign(r, s);
}

unsigned l_of_r(unsigned r) {
  if (r < 1) throw ValidationError("l_of_r: needs r >= 1");
  return largest_gap(r);
}

const char* to_string(Region region) {
  switch (region) {
    case Region::qrm: return "QRM";
    case Region::ea_tpc_positive_catalytic: return "EA_TPC_POSITIVE_CATALYTIC";
    case Region::ea_tpc_nonpositive_catalytic: return "EA_TPC_NONPOSITIVE_CATALYTIC";
  }
  return "?";
}

Region classify(unsigned r, unsigned m) {
  if (r > m) {
    throw ValidationError("classify: r = " + std::to_string(r) + " exceeds m = " +
                          std::to_string(m));
  }
  if (2 * r + 1 >= m) return Region::qrm;
  return m - 2 * r <= largest_gap(r) ? Region::ea_tpc_positive_catalytic
                                     : Region::ea_tpc_nonpositive_catalytic;
}

SuperadditivityReport superadditivity_check(const ClassicalCodeParams& c1,
                                            const ClassicalCodeParams& c2, const BigInt& ne1,
                                            const BigInt& ne2) {
  if (c1.n <= 0 || c2.n <= 0) throw ValidationError("superadditivity_check: empty component code");
  if (ne1 < 0 || ne2 < 0) throw ValidationError("superadditivity_check: negative ebit count");
  SuperadditivityReport out;
  const BigInt n = c1.n * c2.n;
  out.tpc_rate = {n + ne1 * ne2 - 2 * c1.rho * c2.rho, n};
  out.component1_rate = {c1.n + ne1 - 2 * c1.rho, c1.n};
  out.component2_rate = {c2.n + ne2 - 2 * c2.rho, c2.n};
  const Rational best = std::max(out.component1_rate.value(), out.component2_rate.value());
  out.holds = out.tpc_rate.value() >= best;
  out.strict_applies = ne1 < c1.rho && ne2 < c2.rho;
  out.strict_holds = out.tpc_rate.value() > best;
  return out;
}

BigInt grassl_bound_margin(const BigInt& n, const BigInt& d) {
  if (d < 1) throw ValidationError("grassl_bound_margin: distance must be at least 1");
  return n - 2 * d + 2;
}

}  // namespace eatpc
