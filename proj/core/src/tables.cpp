#include "eatpc/tables.hpp"

#include <sstream>

#include "eatpc/stabilizer.hpp"
#include "eatpc/tensor_product.hpp"

namespace eatpc {

LrTable table_l_r(unsigned r_max) {
  if (r_max < 1) throw ValidationError("table_l_r: r_max must be at least 1");
  LrTable table;
  for (unsigned r = 1; r <= r_max; ++r) {
    const unsigned l = l_of_r(r);
    table.rows.push_back({r, l});
    if (!table.ranges.empty() && table.ranges.back().l == l) {
      table.ranges.back().r_last = r;
    } else {
      table.ranges.push_back({r, r, l});
    }
  }
  return table;
}

std::vector<RmSpec> default_example_specs() {
  return {RmSpec(1, 4), RmSpec(2, 6), RmSpec(3, 8), RmSpec(4, 10), RmSpec(5, 12)};
}

std::vector<ExampleRow> table_examples(const std::vector<RmSpec>& specs) {
  std::vector<ExampleRow> rows;
  rows.reserve(specs.size());
  for (const RmSpec& spec : specs) {
    ExampleRow row{spec, rm_params(spec), ea_rm_params(spec), {}, {}, true, false, {}};
    const BigInt ne = ebit_count_rm_closed_form(spec);
    row.ea_tpc = ea_tpc_params(row.rm, row.rm, ne, ne);
    row.tpc_rates = rates(row.ea_tpc);
    row.feasible = !spec.dual_containing();
    row.positive_catalytic = row.tpc_rates.catalytic_count > 0;
    if (!row.feasible) {
      row.flag = "dual-containing (2r+1 >= m); no entanglement used";
    } else if (!row.positive_catalytic) {
      row.flag = "non-positive catalytic rate";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PlanePoint> classify_plane(unsigned m_max) {
  std::vector<PlanePoint> plane;
  for (unsigned m = 1; m <= m_max; ++m) {
    for (unsigned r = 0; r <= m; ++r) plane.push_back({m, r, classify(r, m)});
  }
  return plane;
}

const char* to_string(ContainmentKind kind) {
  return kind == ContainmentKind::qrm_in_tpc ? "qrm_in_tpc" : "tpc_in_qrm";
}

ContainmentReport containment_comparison(ContainmentKind kind, const ContainmentParams& params,
                                         unsigned cap) {
  ContainmentReport out;
  out.kind = kind;
  const unsigned m = params.m1 + params.m2;
  if (kind == ContainmentKind::qrm_in_tpc) {
    out.tpc1 = RmSpec(params.r1, params.m1);
    out.tpc2 = RmSpec(params.r2, params.m2);
    if (params.r1 + params.r2 + 1 > m) {
      throw ValidationError("qrm_in_tpc needs r1 + r2 + 1 <= m1 + m2");
    }
    out.qrm = RmSpec(params.r1 + params.r2 + 1, m);
  } else {
    if (params.r < params.m1 || params.r > m) {
      throw ValidationError("tpc_in_qrm needs m1 <= r <= m1 + m2, got m1 = " +
                            std::to_string(params.m1) + ", m2 = " + std::to_string(params.m2) +
                            ", r = " + std::to_string(params.r));
    }
    out.tpc1 = RmSpec(0, params.m1);
    out.tpc2 = RmSpec(params.r - params.m1, params.m2);
    out.qrm = RmSpec(params.r, m);
  }

  const ClassicalCodeParams c1 = rm_params(out.tpc1);
  const ClassicalCodeParams c2 = rm_params(out.tpc2);
  out.qrm_params = ea_rm_params(out.qrm);
  out.tpc_params = ea_tpc_params(c1, c2, ebit_count_rm_closed_form(out.tpc1),
                                 ebit_count_rm_closed_form(out.tpc2));
  out.qrm_rates = rates(out.qrm_params);
  out.tpc_rates = rates(out.tpc_params);

  if (m <= cap) {
    // A smaller codespace has a larger stabilizer group, so codespace
    // inclusion runs opposite to parity-check row-space inclusion.
    const Gf2Matrix h_qrm = parity_check_matrix(out.qrm);
    const Gf2Matrix h_tpc = tpc_parity(parity_check_matrix(out.tpc1), parity_check_matrix(out.tpc2));
    const bool tpc_checks_in_qrm = row_space_contains(h_qrm, h_tpc);
    const bool qrm_checks_in_tpc = row_space_contains(h_tpc, h_qrm);
    out.stated_inclusion = kind == ContainmentKind::qrm_in_tpc ? tpc_checks_in_qrm : qrm_checks_in_tpc;
    out.converse_inclusion = kind == ContainmentKind::qrm_in_tpc ? qrm_checks_in_tpc : tpc_checks_in_qrm;
  }
  return out;
}

std::string rate_decimal(const ExactRatio& ratio) { return to_decimal_significant(ratio.value()); }

std::string to_csv(const LrTable& table, bool ranges) {
  std::ostringstream out;
  if (ranges) {
    out << "r_first,r_last,l\n";
    for (const LrRange& g : table.ranges) out << g.r_first << ',' << g.r_last << ',' << g.l << '\n';
  } else {
    out << "r,l\n";
    for (const LrRow& row : table.rows) out << row.r << ',' << row.l << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<ExampleRow>& rows) {
  std::ostringstream out;
  out << "r,m,rm_params,ea_rm_params,ea_tpc_params,ea_rate_fraction,ea_rate,"
         "catalytic_fraction,catalytic,feasible,positive_catalytic,flag\n";
  for (const ExampleRow& row : rows) {
    out << row.spec.r() << ',' << row.spec.m() << ',' << '"' << row.rm.describe() << '"' << ','
        << '"' << row.ea_rm.describe() << '"' << ',' << '"' << row.ea_tpc.describe() << '"' << ','
        << row.tpc_rates.ea_rate.fraction() << ',' << rate_decimal(row.tpc_rates.ea_rate) << ','
        << row.tpc_rates.catalytic.fraction() << ',' << rate_decimal(row.tpc_rates.catalytic) << ','
        << (row.feasible ? "true" : "false") << ',' << (row.positive_catalytic ? "true" : "false")
        << ',' << row.flag << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<PlanePoint>& plane) {
  std::ostringstream out;
  out << "m,r,region\n";
  for (const PlanePoint& p : plane) out << p.m << ',' << p.r << ',' << to_string(p.region) << '\n';
  return out.str();
}

}  // namespace eatpc
