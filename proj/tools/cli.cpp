#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "eatpc/error.hpp"
#include "eatpc/matrix_io.hpp"
#include "eatpc/rates.hpp"
#include "eatpc/reed_muller.hpp"
#include "eatpc/stabilizer.hpp"
#include "eatpc/tables.hpp"
#include "eatpc/tensor_product.hpp"
#include "eatpc/verify.hpp"

namespace eatpc::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Globals {
  Format format = Format::text;
  std::string output;
  unsigned cap_m = Limits::kMaxEvalVariables;
  std::uint64_t cap_bruteforce = Limits::kBruteForceCodewords;
  unsigned cap_containment = Limits::kContainmentVariables;
};

// What a subcommand produced. `raw` bypasses formatting entirely (matrix
// dumps); `csv` overrides the generic JSON flattening.
struct Output {
  Json json;
  std::string text;
  std::optional<std::string> csv;
  std::optional<std::string> raw;
};

Json number(const BigInt& v) {
  if (auto i = to_int64(v)) return *i;
  return v.str();
}

Json ratio_json(const ExactRatio& r) {
  return Json{{"fraction", r.fraction()}, {"decimal", rate_decimal(r)}};
}

std::string ratio_text(const ExactRatio& r) { return r.fraction() + " = " + rate_decimal(r); }

std::string rm_name(const RmSpec& s) {
  return "RM(" + std::to_string(s.r()) + "," + std::to_string(s.m()) + ")";
}

Json classical_json(const ClassicalCodeParams& c) {
  return Json{{"n", number(c.n)}, {"k", number(c.k)}, {"d", number(c.d)}, {"rho", number(c.rho)}};
}

Json ea_json(const EaCodeParams& p) {
  return Json{{"n", number(p.n)}, {"k", number(p.k_logical)}, {"d_lower", number(p.d_lower)},
              {"n_e", number(p.n_e)}};
}

Json rates_json(const RateReport& r) {
  return Json{{"ea_rate", ratio_json(r.ea_rate)},
              {"entanglement_rate", ratio_json(r.tradeoff.second)},
              {"catalytic_rate", ratio_json(r.catalytic)},
              {"catalytic_count", number(r.catalytic_count)}};
}

std::string rates_text(const RateReport& r) {
  return "EA rate: " + ratio_text(r.ea_rate) + "\nentanglement consumption: " +
         ratio_text(r.tradeoff.second) + "\ncatalytic rate: " + ratio_text(r.catalytic) + "\n";
}

Json matrix_json(const Gf2Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r).to_string());
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& cells) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, cells);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), cells);
  } else if (j.is_string()) {
    cells.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_null()) {
    cells.emplace_back(prefix, "");
  } else {
    cells.emplace_back(prefix, j.dump());
  }
}

// One CSV row per object: a top-level array gives many rows, an object one.
std::string generic_csv(const Json& j) {
  std::vector<Json> records;
  if (j.is_array()) {
    records.assign(j.begin(), j.end());
  } else {
    records.push_back(j);
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(records[i], "", cells);
    if (i == 0) {
      for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_field(cells[c].first);
      out << '\n';
    }
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_field(cells[c].second);
    out << '\n';
  }
  return out.str();
}

void emit(const Output& result, const Globals& g, std::ostream& out) {
  if (result.raw) {
    out << *result.raw;
    return;
  }
  switch (g.format) {
    case Format::json: out << result.json.dump() << '\n'; break;
    case Format::csv: out << (result.csv ? *result.csv : generic_csv(result.json)); break;
    case Format::text: out << result.text; break;
  }
}

std::vector<RmSpec> parse_specs(const std::string& text) {
  std::vector<RmSpec> specs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("spec '" + item + "' is not of the form r:m");
    try {
      std::size_t used_r = 0;
      std::size_t used_m = 0;
      const std::string r_text = item.substr(0, colon);
      const std::string m_text = item.substr(colon + 1);
      const unsigned long r = std::stoul(r_text, &used_r);
      const unsigned long m = std::stoul(m_text, &used_m);
      if (used_r != r_text.size() || used_m != m_text.size() || m > 64) throw std::invalid_argument(item);
      specs.emplace_back(static_cast<unsigned>(r), static_cast<unsigned>(m));
    } catch (const std::logic_error&) {
      throw ValidationError("spec '" + item + "' is not of the form r:m");
    }
  }
  if (specs.empty()) throw ValidationError("--specs is empty");
  return specs;
}

void check_m(unsigned m) {
  // Closed forms take any m, but 2^m beyond this is not a meaningful length.
  if (m > 64) throw ValidationError("m = " + std::to_string(m) + " exceeds 64");
}

struct RmArgs {
  unsigned r = 0;
  unsigned m = 0;
  bool emit_generator = false;
  bool emit_parity = false;
  bool check_distance = false;
};

Output cmd_rm(const RmArgs& a, const Globals& g) {
  check_m(a.m);
  const RmSpec spec(a.r, a.m);
  Output o;
  if (a.emit_generator) {
    o.raw = to_text(generator_matrix(spec, g.cap_m));
    return o;
  }
  if (a.emit_parity) {
    o.raw = to_text(parity_check_matrix(spec, g.cap_m));
    return o;
  }
  const ClassicalCodeParams c = rm_params(spec);
  o.json = Json{{"r", a.r}, {"m", a.m}};
  o.json.update(classical_json(c));
  o.json["dual_containing"] = spec.dual_containing();
  o.text = rm_name(spec) + ": " + c.describe() + ", rho = " + c.rho.str() +
           ", dual-containing: " + (spec.dual_containing() ? "yes" : "no") + "\n";
  if (a.check_distance) {
    const std::size_t d = min_distance_bruteforce(generator_matrix(spec, g.cap_m), g.cap_bruteforce);
    o.json["d_bruteforce"] = d;
    o.text += "brute-force distance: " + std::to_string(d) + "\n";
  }
  return o;
}

struct EaRmArgs {
  unsigned r = 0;
  unsigned m = 0;
  bool emit_extended = false;
  bool direct = false;
  std::string export_dir;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path.string());
  f << content;
}

Output cmd_ea_rm(const EaRmArgs& a, const Globals& g) {
  check_m(a.m);
  const RmSpec spec(a.r, a.m);
  const EaCodeParams p = ea_rm_params(spec);
  Output o;
  o.json = ea_json(p);
  o.text = "EA " + rm_name(spec) + ": " + p.describe() + "\n";

  if (a.emit_extended || !a.export_dir.empty()) {
    const ExtendedCheck ext = extended_check_matrix(parity_check_matrix(spec, g.cap_m));
    if (!a.export_dir.empty()) {
      const std::filesystem::path dir(a.export_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / "H.txt", to_text(ext.h));
      write_file(dir / "H_ex.txt", to_text(ext.h_ex));
      write_file(dir / "H_ez.txt", to_text(ext.h_ez));
      write_file(dir / "extended.txt", to_text(ext.matrix));
      write_file(dir / "params.json", ea_json(p).dump() + "\n");
    }
    if (a.emit_extended) {
      o.raw = to_text(ext.matrix);
      return o;
    }
  }
  if (a.direct) {
    const std::size_t ne = ebit_count(parity_check_matrix(spec, g.cap_m));
    o.json["n_e_direct"] = ne;
    o.text += "direct gfrank(H H^T): " + std::to_string(ne) + "\n";
  }
  return o;
}

struct TpcArgs {
  unsigned r1 = 0;
  unsigned m1 = 0;
  unsigned r2 = 0;
  unsigned m2 = 0;
  bool check_distance = false;
};

std::string tpc_name(const RmSpec& s1, const RmSpec& s2) { return rm_name(s1) + " (x) " + rm_name(s2); }

Output cmd_tpc(const TpcArgs& a, const Globals& g) {
  check_m(a.m1);
  check_m(a.m2);
  const RmSpec s1(a.r1, a.m1);
  const RmSpec s2(a.r2, a.m2);
  const ClassicalCodeParams c = tpc_params(rm_params(s1), rm_params(s2));
  Output o;
  o.json = classical_json(c);
  o.text = "TPC " + tpc_name(s1, s2) + ": " + c.describe() + ", rho = " + c.rho.str() + "\n";
  if (a.check_distance) {
    const Gf2Matrix gen = tpc_generator(parity_check_matrix(s1, g.cap_m), parity_check_matrix(s2, g.cap_m));
    const std::size_t d = min_distance_bruteforce(gen, g.cap_bruteforce);
    o.json["d_bruteforce"] = d;
    o.text += "brute-force distance: " + std::to_string(d) + "\n";
  }
  return o;
}

Output cmd_ea_tpc(const TpcArgs& a) {
  check_m(a.m1);
  check_m(a.m2);
  const RmSpec s1(a.r1, a.m1);
  const RmSpec s2(a.r2, a.m2);
  const EaRmTpc tpc = ea_rm_tpc(s1, s2);
  const RateReport r = rates(tpc.ea);
  const SuperadditivityReport sup = superadditivity_check(
      tpc.component1, tpc.component2, ebit_count_rm_closed_form(s1), ebit_count_rm_closed_form(s2));

  Output o;
  o.json = ea_json(tpc.ea);
  o.json.update(rates_json(r));
  o.json["superadditive"] = sup.holds;
  if (tpc.direct_n_e) o.json["n_e_direct"] = *tpc.direct_n_e;

  o.text = "EA TPC " + tpc_name(s1, s2) + ": " + tpc.ea.describe() + "\n" + rates_text(r);
  o.text += std::string("TPC rate vs components: ") + (sup.holds ? "at least the larger" : "BELOW the larger") +
            " (" + sup.component1_rate.fraction() + ", " + sup.component2_rate.fraction() + ")\n";
  if (tpc.direct_n_e) o.text += "direct gfrank(H H^T): " + std::to_string(*tpc.direct_n_e) + "\n";
  return o;
}

struct LrArgs {
  unsigned r_max = 162;
  bool rows = false;
};

Output cmd_lr_table(const LrArgs& a) {
  const LrTable table = table_l_r(a.r_max);
  Output o;
  Json rows = Json::array();
  for (const LrRow& row : table.rows) rows.push_back({{"r", row.r}, {"l", row.l}});
  Json ranges = Json::array();
  for (const LrRange& g : table.ranges) ranges.push_back({{"r_first", g.r_first}, {"r_last", g.r_last}, {"l", g.l}});
  o.json = Json{{"rows", rows}, {"ranges", ranges}};
  o.csv = to_csv(table, !a.rows);

  std::ostringstream text;
  if (a.rows) {
    text << "r     l(r)\n";
    for (const LrRow& row : table.rows) text << std::left << std::setw(6) << row.r << row.l << '\n';
  } else {
    text << "r range       l(r)\n";
    for (const LrRange& g : table.ranges) {
      text << std::left << std::setw(14)
           << ("[" + std::to_string(g.r_first) + ", " + std::to_string(g.r_last) + "]") << g.l << '\n';
    }
  }
  o.text = text.str();
  return o;
}

Output cmd_examples(const std::string& specs) {
  const std::vector<ExampleRow> rows = table_examples(specs.empty() ? default_example_specs() : parse_specs(specs));
  Output o;
  o.json = Json::array();
  std::ostringstream text;
  text << std::left << std::setw(10) << "code" << std::setw(16) << "RM params" << std::setw(22) << "EA RM"
       << std::setw(36) << "EA TPC" << "catalytic rate\n";
  for (const ExampleRow& row : rows) {
    Json j{{"r", row.spec.r()}, {"m", row.spec.m()}, {"rm", classical_json(row.rm)},
           {"ea_rm", ea_json(row.ea_rm)}, {"ea_tpc", ea_json(row.ea_tpc)}};
    j.update(rates_json(row.tpc_rates));
    j["feasible"] = row.feasible;
    j["positive_catalytic"] = row.positive_catalytic;
    j["flag"] = row.flag;
    o.json.push_back(j);

    text << std::setw(10) << rm_name(row.spec) << std::setw(16) << row.rm.describe() << std::setw(22)
         << row.ea_rm.describe() << std::setw(36) << row.ea_tpc.describe()
         << ratio_text(row.tpc_rates.catalytic);
    if (!row.flag.empty()) text << "  [" << row.flag << "]";
    text << '\n';
  }
  o.text = text.str();
  o.csv = to_csv(rows);
  return o;
}

Output cmd_classify(unsigned m_max) {
  const std::vector<PlanePoint> plane = classify_plane(m_max);
  Output o;
  o.json = Json::array();
  for (const PlanePoint& p : plane) o.json.push_back({{"m", p.m}, {"r", p.r}, {"region", to_string(p.region)}});
  o.csv = to_csv(plane);
  o.text = *o.csv;
  return o;
}

Output cmd_sgs(const std::string& input, bool css) {
  Gf2Matrix m = load_matrix(input);
  if (css) m = css_check_matrix(m, m);
  if (m.cols() % 2 != 0) {
    throw ValidationError("sgs input needs an even column count in [x | z] layout, got " + std::to_string(m.cols()));
  }
  const SgsResult sgs = symplectic_gram_schmidt(m);
  Output o;
  Json pairs = Json::array();
  for (auto [a, b] : sgs.pair_rows) pairs.push_back({a, b});
  o.json = Json{{"generators", m.rows()}, {"qubits", m.cols() / 2}, {"n_e", sgs.n_e()},
                {"pairs", pairs}, {"isotropic", sgs.isotropic_rows},
                {"h_ex", matrix_json(sgs.h_ex)}, {"h_ez", matrix_json(sgs.h_ez)}};

  std::ostringstream text;
  text << "generators: " << m.rows() << " over " << m.cols() / 2 << " qubits\n";
  text << "pairs (n_e = " << sgs.n_e() << "):";
  for (auto [a, b] : sgs.pair_rows) text << " (" << a << "," << b << ")";
  text << "\nisotropic (" << sgs.isotropic_rows.size() << "):";
  for (std::size_t i : sgs.isotropic_rows) text << ' ' << i;
  text << "\nH_ex:\n" << to_text(sgs.h_ex) << "H_ez:\n" << to_text(sgs.h_ez);
  o.text = text.str();
  return o;
}

struct ContainmentArgs {
  std::string kind = "qrm_in_tpc";
  ContainmentParams params;
};

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Output cmd_containment(const ContainmentArgs& a, const Globals& g) {
  check_m(a.params.m1);
  check_m(a.params.m2);
  const ContainmentKind kind = a.kind == "qrm_in_tpc" ? ContainmentKind::qrm_in_tpc : ContainmentKind::tpc_in_qrm;
  const ContainmentReport rep = containment_comparison(kind, a.params, g.cap_containment);

  Output o;
  Json qrm = ea_json(rep.qrm_params);
  qrm.update(rates_json(rep.qrm_rates));
  Json tpc = ea_json(rep.tpc_params);
  tpc.update(rates_json(rep.tpc_rates));
  o.json = Json{{"kind", to_string(kind)},
                {"qrm", rm_name(rep.qrm)},
                {"tpc", tpc_name(rep.tpc1, rep.tpc2)},
                {"qrm_code", qrm},
                {"tpc_code", tpc},
                {"stated_inclusion", optional_bool(rep.stated_inclusion)},
                {"converse_inclusion", optional_bool(rep.converse_inclusion)}};

  auto verdict = [](const std::optional<bool>& b) -> std::string {
    return b ? (*b ? "holds" : "fails") : "not checked (above containment cap)";
  };
  const bool qrm_inside = kind == ContainmentKind::qrm_in_tpc;
  o.text = "EA Q" + rm_name(rep.qrm) + ": " + rep.qrm_params.describe() + "\n" + rates_text(rep.qrm_rates) +
           "EA TPC " + tpc_name(rep.tpc1, rep.tpc2) + ": " + rep.tpc_params.describe() + "\n" +
           rates_text(rep.tpc_rates) + (qrm_inside ? "QRM codespace inside TPC codespace: " : "TPC codespace inside QRM codespace: ") +
           verdict(rep.stated_inclusion) + "\nconverse: " + verdict(rep.converse_inclusion) + "\n";
  return o;
}

struct VerifyArgs {
  std::string suite = "all";
  VerifyOptions options;
};

Output cmd_verify(const VerifyArgs& a, bool& failed) {
  const std::vector<SuiteReport> reports = run_suites(a.suite, a.options);
  Output o;
  Json suites = Json::array();
  std::ostringstream text;
  failed = false;
  for (const SuiteReport& s : reports) {
    Json props = Json::array();
    for (const PropertyResult& p : s.properties) {
      props.push_back({{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}, {"first_failure", p.first_failure}});
      text << (p.failures == 0 ? "PASS " : "FAIL ") << s.suite << ": " << p.name << " (" << p.cases << " cases";
      if (p.failures != 0) text << ", " << p.failures << " failed; first: " << p.first_failure;
      text << ")\n";
    }
    suites.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"cases", s.cases()}, {"properties", props}});
    failed = failed || !s.passed();
  }
  o.json = Json{{"passed", !failed}, {"seed", a.options.seed}, {"suites", suites}};
  text << (failed ? "some properties failed\n" : "all properties passed\n");
  o.text = text.str();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement-assisted Reed-Muller tensor-product code toolkit", "eatpc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", g.format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--output", g.output, "Write results to this file instead of stdout");
  app.add_option("--cap-m", g.cap_m, "Largest m for which matrices are built")->check(CLI::Range(0u, 30u));
  app.add_option("--cap-bruteforce", g.cap_bruteforce, "Codeword budget of brute-force distance");
  app.add_option("--cap-containment", g.cap_containment, "Largest m1 + m2 for row-space containment checks");

  RmArgs rm;
  CLI::App* rm_cmd = app.add_subcommand("rm", "Classical RM(r,m) parameters and matrices");
  rm_cmd->add_option("--r", rm.r, "Order")->required();
  rm_cmd->add_option("--m", rm.m, "Variable count")->required();
  auto* gen_flag = rm_cmd->add_flag("--emit-generator", rm.emit_generator, "Print the generator matrix");
  rm_cmd->add_flag("--emit-parity", rm.emit_parity, "Print the parity-check matrix")->excludes(gen_flag);
  rm_cmd->add_flag("--check-distance", rm.check_distance, "Confirm d by brute force");

  EaRmArgs ea_rm;
  CLI::App* ea_rm_cmd = app.add_subcommand("ea-rm", "EA CSS code from RM(r,m)");
  ea_rm_cmd->add_option("--r", ea_rm.r, "Order")->required();
  ea_rm_cmd->add_option("--m", ea_rm.m, "Variable count")->required();
  ea_rm_cmd->add_flag("--emit-extended", ea_rm.emit_extended, "Print the extended check matrix");
  ea_rm_cmd->add_flag("--direct", ea_rm.direct, "Also compute gfrank(H H^T) from the matrix");
  ea_rm_cmd->add_option("--export-dir", ea_rm.export_dir, "Write H, H_ex, H_ez, the extended matrix and params here");

  TpcArgs tpc;
  auto add_tpc_options = [&tpc](CLI::App* cmd) {
    cmd->add_option("--r1", tpc.r1, "First component order")->required();
    cmd->add_option("--m1", tpc.m1, "First component variable count")->required();
    cmd->add_option("--r2", tpc.r2, "Second component order")->required();
    cmd->add_option("--m2", tpc.m2, "Second component variable count")->required();
  };
  CLI::App* tpc_cmd = app.add_subcommand("tpc", "Classical TPC of RM(r1,m1) and RM(r2,m2)");
  add_tpc_options(tpc_cmd);
  tpc_cmd->add_flag("--check-distance", tpc.check_distance, "Confirm d by brute force");
  CLI::App* ea_tpc_cmd = app.add_subcommand("ea-tpc", "EA TPC of RM(r1,m1) and RM(r2,m2) with rates");
  add_tpc_options(ea_tpc_cmd);

  LrArgs lr;
  CLI::App* lr_cmd = app.add_subcommand("lr-table", "l(r) for r = 1..r-max");
  lr_cmd->add_option("--r-max", lr.r_max, "Largest r")->check(CLI::Range(1u, 100000u));
  lr_cmd->add_flag("--rows", lr.rows, "One row per r instead of ranges");

  std::string specs;
  CLI::App* ex_cmd = app.add_subcommand("examples-table", "EA RM and square EA TPC parameters per RM code");
  ex_cmd->add_option("--specs", specs, "Comma-separated r:m list");

  unsigned m_max = 40;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Region of every (m, r) with m <= m-max, as CSV");
  classify_cmd->add_option("--m-max", m_max, "Largest m")->check(CLI::Range(1u, 2000u));

  std::string sgs_input;
  bool sgs_css = false;
  CLI::App* sgs_cmd = app.add_subcommand("sgs", "Symplectic Gram-Schmidt of generators read from a matrix file");
  sgs_cmd->add_option("--input", sgs_input, "Matrix file; rows are [x | z] generators")->required();
  sgs_cmd->add_flag("--css", sgs_css, "Treat the input as a classical H and use the CSS generators of (H, H)");

  ContainmentArgs cont;
  CLI::App* cont_cmd = app.add_subcommand("containment", "Compare an EA QRM code with an EA TPC");
  cont_cmd->add_option("--kind", cont.kind, "qrm_in_tpc or tpc_in_qrm")
      ->check(CLI::IsMember({"qrm_in_tpc", "tpc_in_qrm"}));
  cont_cmd->add_option("--r1", cont.params.r1, "qrm_in_tpc: first order");
  cont_cmd->add_option("--m1", cont.params.m1, "First variable count")->required();
  cont_cmd->add_option("--r2", cont.params.r2, "qrm_in_tpc: second order");
  cont_cmd->add_option("--m2", cont.params.m2, "Second variable count")->required();
  cont_cmd->add_option("--r", cont.params.r, "tpc_in_qrm: QRM order");

  VerifyArgs ver;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run an invariant suite; nonzero exit on failure");
  verify_cmd->add_option("--suite", ver.suite, "all, gf2, rm, tpc, ea or rate");
  verify_cmd->add_option("--seed", ver.options.seed, "Random seed");
  verify_cmd->add_option("--cases", ver.options.cases, "Cases per randomized property")->check(CLI::Range(1, 1000000));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    Output result;
    bool verify_failed = false;
    if (rm_cmd->parsed()) {
      result = cmd_rm(rm, g);
    } else if (ea_rm_cmd->parsed()) {
      result = cmd_ea_rm(ea_rm, g);
    } else if (tpc_cmd->parsed()) {
      result = cmd_tpc(tpc, g);
    } else if (ea_tpc_cmd->parsed()) {
      result = cmd_ea_tpc(tpc);
    } else if (lr_cmd->parsed()) {
      result = cmd_lr_table(lr);
    } else if (ex_cmd->parsed()) {
      result = cmd_examples(specs);
    } else if (classify_cmd->parsed()) {
      result = cmd_classify(m_max);
    } else if (sgs_cmd->parsed()) {
      result = cmd_sgs(sgs_input, sgs_css);
    } else if (cont_cmd->parsed()) {
      result = cmd_containment(cont, g);
    } else if (verify_cmd->parsed()) {
      result = cmd_verify(ver, verify_failed);
    }

    if (g.output.empty()) {
      emit(result, g, out);
    } else {
      std::ofstream file(g.output);
      if (!file) throw ValidationError("cannot open output file " + g.output);
      emit(result, g, file);
    }
    if (verify_failed) {
      err << "error: verification failed in suite " << ver.suite << '\n';
      return kExitValidation;
    }
    return kExitOk;
  } catch (const CapacityError& e) {
    err << "error: capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace eatpc::cli
