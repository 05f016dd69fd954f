#include "eatpc/code_params.hpp"

#include "eatpc/error.hpp"

namespace eatpc {

ClassicalCodeParams ClassicalCodeParams::make(BigInt n, BigInt k, BigInt d, DistanceKind d_kind,
                                              ParamSource source) {
  if (n < 0 || k < 0 || k > n) {
    throw ValidationError("invalid code parameters: need 0 <= k <= n, got n = " + n.str() +
                          ", k = " + k.str());
  }
  if (d_kind != DistanceKind::unknown && d < 1) {
    throw ValidationError("invalid code parameters: distance must be >= 1, got " + d.str());
  }
  ClassicalCodeParams p;
  p.rho = n - k;
  p.n = std::move(n);
  p.k = std::move(k);
  p.d = std::move(d);
  p.d_kind = d_kind;
  p.source = source;
  return p;
}

std::string ClassicalCodeParams::describe() const {
  std::string d_text = d_kind == DistanceKind::unknown ? "?" : d.str();
  if (d_kind == DistanceKind::lower_bound) d_text = ">=" + d_text;
  return "[" + n.str() + "," + k.str() + "," + d_text + "]";
}

std::string EaCodeParams::describe() const {
  return "[[" + n.str() + "," + k_logical.str() + ",>=" + d_lower.str() + ";" + n_e.str() + "]]";
}

const char* to_string(ParamSource source) {
  switch (source) {
    case ParamSource::rm_closed_form: return "rm_closed_form";
    case ParamSource::tpc_closed_form: return "tpc_closed_form";
    case ParamSource::computed: return "computed";
    case ParamSource::user: return "user";
  }
  return "unknown";
}

const char* to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::exact: return "exact";
    case DistanceKind::lower_bound: return "lower_bound";
    case DistanceKind::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace eatpc
