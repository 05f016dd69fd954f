#pragma once

// Table generation: l(r) ranges, EA RM / EA TPC example rows, the m-r plane
// classification, and QRM versus TPC containment comparisons.

#include <optional>
#include <string>
#include <vector>

#include "eatpc/code_params.hpp"
#include "eatpc/error.hpp"
#include "eatpc/rates.hpp"
#include "eatpc/reed_muller.hpp"

namespace eatpc {

struct LrRow {
  unsigned r;
  unsigned l;
};

/// Maximal run of consecutive r sharing one l(r).
struct LrRange {
  unsigned r_first;
  unsigned r_last;
  unsigned l;
};

struct LrTable {
  std::vector<LrRow> rows;
  std::vector<LrRange> ranges;
};

/// Rows for r = 1..r_max. Throws ValidationError if r_max < 1.
LrTable table_l_r(unsigned r_max);

struct ExampleRow {
  RmSpec spec;
  ClassicalCodeParams rm;
  EaCodeParams ea_rm;
  /// Square TPC RM(r,m) (x) RM(r,m).
  EaCodeParams ea_tpc;
  RateReport tpc_rates;
  /// False when 2r + 1 >= m: the code contains its dual and no ebits are used.
  bool feasible = true;
  bool positive_catalytic = false;
  /// Why the row is flagged; empty for a feasible positive row.
  std::string flag;
};

/// RM(1,4), RM(2,6), RM(3,8), RM(4,10), RM(5,12).
std::vector<RmSpec> default_example_specs();

std::vector<ExampleRow> table_examples(const std::vector<RmSpec>& specs);

struct PlanePoint {
  unsigned m;
  unsigned r;
  Region region;
};

/// Every (m, r) with 1 <= m <= m_max and 0 <= r <= m, m-major.
std::vector<PlanePoint> classify_plane(unsigned m_max);

enum class ContainmentKind { qrm_in_tpc, tpc_in_qrm };

const char* to_string(ContainmentKind kind);

/// qrm_in_tpc reads (r1, m1, r2, m2) and compares the EA QRM(r1 + r2 + 1,
/// m1 + m2) with the EA TPC of RM(r1,m1) and RM(r2,m2).
/// tpc_in_qrm reads (m1, m2, r) and compares the EA QRM(r, m1 + m2) with the
/// EA TPC of RM(0,m1) and RM(r - m1, m2).
struct ContainmentParams {
  unsigned r1 = 0;
  unsigned m1 = 0;
  unsigned r2 = 0;
  unsigned m2 = 0;
  unsigned r = 0;
};

struct ContainmentReport {
  ContainmentKind kind = ContainmentKind::qrm_in_tpc;
  RmSpec qrm{0, 0};
  RmSpec tpc1{0, 0};
  RmSpec tpc2{0, 0};
  EaCodeParams qrm_params;
  EaCodeParams tpc_params;
  RateReport qrm_rates;
  RateReport tpc_rates;
  /// Whether the stated codespace inclusion holds, decided by row-space
  /// inclusion of the parity checks in the opposite direction. Unset when
  /// m1 + m2 exceeds the cap.
  std::optional<bool> stated_inclusion;
  /// The converse inclusion; both set means the codespaces coincide.
  std::optional<bool> converse_inclusion;
};

ContainmentReport containment_comparison(ContainmentKind kind, const ContainmentParams& params,
                                         unsigned cap = Limits::kContainmentVariables);

/// CSV renderings with a header row. Rates appear as a fraction column and
/// a decimal column.
std::string to_csv(const LrTable& table, bool ranges);
std::string to_csv(const std::vector<ExampleRow>& rows);
std::string to_csv(const std::vector<PlanePoint>& plane);

/// 17 significant digits, the precision the rate tables are printed with.
std::string rate_decimal(const ExactRatio& ratio);

}  // namespace eatpc
