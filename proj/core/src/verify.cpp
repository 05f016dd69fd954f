#include "eatpc/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "eatpc/error.hpp"
#include "eatpc/rates.hpp"
#include "eatpc/reed_muller.hpp"
#include "eatpc/stabilizer.hpp"
#include "eatpc/tensor_product.hpp"

namespace eatpc {
namespace {

using Rng = std::mt19937_64;
using Failure = std::optional<std::string>;

class Suite {
 public:
  Suite(std::string name, const VerifyOptions& options) : options_(options) {
    report_.suite = std::move(name);
  }

  // Runs `check` once per case with a generator seeded from the suite seed
  // and the property name.
  void random(const std::string& property, const std::function<Failure(Rng&)>& check) {
    Rng rng(options_.seed ^ std::hash<std::string>{}(report_.suite + "/" + property));
    PropertyResult result{property, 0, 0, {}};
    for (std::size_t i = 0; i < options_.cases; ++i) record(result, check(rng));
    report_.properties.push_back(std::move(result));
  }

  // Runs a fixed enumeration; `body` reports each case through `record`.
  void exhaustive(const std::string& property,
                  const std::function<void(const std::function<void(Failure)>&)>& body) {
    PropertyResult result{property, 0, 0, {}};
    body([&](Failure f) { record(result, std::move(f)); });
    report_.properties.push_back(std::move(result));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  static void record(PropertyResult& result, Failure f) {
    ++result.cases;
    if (f) {
      if (result.failures == 0) result.first_failure = *f;
      ++result.failures;
    }
  }

  VerifyOptions options_;
  SuiteReport report_;
};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Gf2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Gf2Matrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng() & 1U) a.set(r, c);
    }
  }
  return a;
}

// Random matrix, sometimes deliberately rank deficient so elimination sees
// dependent rows.
Gf2Matrix random_test_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols) {
  const std::size_t rows = uniform(rng, 0, max_rows);
  const std::size_t cols = uniform(rng, 1, max_cols);
  if (rows > 1 && uniform(rng, 0, 2) == 0) {
    const std::size_t inner = uniform(rng, 1, std::min(rows, cols));
    return multiply(random_matrix(rng, rows, inner), random_matrix(rng, inner, cols));
  }
  return random_matrix(rng, rows, cols);
}

BitVector random_bits(Rng& rng, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) v.set(i);
  }
  return v;
}

SymplecticVector random_pauli(Rng& rng, std::size_t n) {
  return {random_bits(rng, n), random_bits(rng, n)};
}

std::uint64_t random_mask(Rng& rng, unsigned m) {
  return m == 0 ? 0 : rng() & ((m >= 64 ? 0 : std::uint64_t{1} << m) - 1);
}

Polynomial random_polynomial(Rng& rng, unsigned m) {
  Polynomial f(m);
  const std::size_t terms = uniform(rng, 0, 6);
  for (std::size_t i = 0; i < terms; ++i) f.add_term(Monomial::from_mask(m, random_mask(rng, m)));
  return f;
}

std::string rm_name(unsigned r, unsigned m) {
  return "RM(" + std::to_string(r) + "," + std::to_string(m) + ")";
}

std::string shape(const Gf2Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

Failure fail_if(bool bad, const std::function<std::string()>& detail) {
  return bad ? Failure(detail()) : std::nullopt;
}

SuiteReport gf2_suite(const VerifyOptions& options) {
  Suite s("gf2", options);
  s.random("rank of transpose", [](Rng& rng) {
    const Gf2Matrix a = random_test_matrix(rng, 64, 64);
    return fail_if(gfrank(a) != gfrank(transpose(a)), [&] { return shape(a); });
  });
  s.random("rank multiplicative under kron", [](Rng& rng) {
    const Gf2Matrix a = random_test_matrix(rng, 12, 12);
    const Gf2Matrix b = random_test_matrix(rng, 12, 12);
    return fail_if(gfrank(kron(a, b)) != gfrank(a) * gfrank(b),
                   [&] { return shape(a) + " (x) " + shape(b); });
  });
  s.random("kernel basis annihilated", [](Rng& rng) {
    const Gf2Matrix a = random_test_matrix(rng, 40, 70);
    const Gf2Matrix k = kernel_basis(a);
    const bool bad = !multiply(a, transpose(k)).is_zero() || gfrank(k) != k.rows() ||
                     k.rows() + gfrank(a) != a.cols();
    return fail_if(bad, [&] { return shape(a); });
  });
  s.random("rref idempotent", [](Rng& rng) {
    const Gf2Matrix a = random_test_matrix(rng, 40, 70);
    const RrefResult once = rref(a);
    const RrefResult twice = rref(once.matrix);
    const bool bad = twice.matrix != once.matrix || twice.pivots != once.pivots ||
                     once.pivots.size() != gfrank(a);
    return fail_if(bad, [&] { return shape(a); });
  });
  s.random("symplectic product bilinear and alternating", [](Rng& rng) {
    const std::size_t n = uniform(rng, 1, 80);
    const SymplecticVector u = random_pauli(rng, n);
    const SymplecticVector v = random_pauli(rng, n);
    const SymplecticVector w = random_pauli(rng, n);
    SymplecticVector uv = u;
    uv ^= v;
    const bool bad = symplectic_product(u, u) ||
                     symplectic_product(uv, w) != (symplectic_product(u, w) != symplectic_product(v, w)) ||
                     symplectic_product(u, v) != symplectic_product(v, u);
    return fail_if(bad, [&] { return "n = " + std::to_string(n); });
  });
  return s.take();
}

// Rows of [[1,1],[0,1]]^(x)m.
Gf2Matrix plotkin_power(unsigned m) {
  const Gf2Matrix f = Gf2Matrix::from_strings({"11", "01"});
  Gf2Matrix out = Gf2Matrix::from_strings({"1"});
  for (unsigned i = 0; i < m; ++i) out = kron(out, f);
  return out;
}

SuiteReport rm_suite(const VerifyOptions& options) {
  Suite s("rm", options);
  s.random("evaluation additive", [](Rng& rng) {
    const auto m = static_cast<unsigned>(uniform(rng, 1, 10));
    const Polynomial f = random_polynomial(rng, m);
    const Polynomial g = random_polynomial(rng, m);
    return fail_if(eval_vector(f + g) != (eval_vector(f) ^ eval_vector(g)),
                   [&] { return f.to_string() + " ; " + g.to_string(); });
  });
  s.random("evaluation multiplicative", [](Rng& rng) {
    const auto m = static_cast<unsigned>(uniform(rng, 1, 10));
    const Polynomial f = random_polynomial(rng, m);
    const Polynomial g = random_polynomial(rng, m);
    return fail_if(eval_vector(f * g) != (eval_vector(f) & eval_vector(g)),
                   [&] { return f.to_string() + " ; " + g.to_string(); });
  });
  s.random("evaluation of split monomial is a tensor product", [](Rng& rng) {
    const auto m1 = static_cast<unsigned>(uniform(rng, 1, 15));
    const auto m2 = static_cast<unsigned>(uniform(rng, 1, 16 - m1));
    const Monomial a = Monomial::from_mask(m1, random_mask(rng, m1));
    const Monomial b = Monomial::from_mask(m2, random_mask(rng, m2));
    const Monomial joint = Monomial::from_mask(m1 + m2, a.mask() | (b.mask() << m1));
    return fail_if(eval_vector(a).kron(eval_vector(b)) != eval_vector(joint),
                   [&] { return a.to_string() + " (m=" + std::to_string(m1) + ") ; " +
                                b.to_string() + " (m=" + std::to_string(m2) + ")"; });
  });
  s.random("heavy Plotkin rows span the code", [](Rng& rng) {
    const auto m = static_cast<unsigned>(uniform(rng, 0, 8));
    const auto r = static_cast<unsigned>(uniform(rng, 0, m));
    const Gf2Matrix power = plotkin_power(m);
    const std::size_t threshold = std::size_t{1} << (m - r);
    Gf2Matrix heavy(0, power.cols());
    for (std::size_t i = 0; i < power.rows(); ++i) {
      if (power.row_weight(i) >= threshold) heavy.append_row(power.row_vector(i));
    }
    const Gf2Matrix g = generator_matrix(RmSpec(r, m));
    const bool bad = heavy.rows() != g.rows() || !row_space_contains(heavy, g) ||
                     !row_space_contains(g, heavy);
    return fail_if(bad, [&] { return rm_name(r, m); });
  });
  s.random("nesting", [](Rng& rng) {
    const auto m = static_cast<unsigned>(uniform(rng, 1, 10));
    const auto r = static_cast<unsigned>(uniform(rng, 0, m - 1));
    return fail_if(!row_space_contains(generator_matrix(RmSpec(r + 1, m)), generator_matrix(RmSpec(r, m))),
                   [&] { return rm_name(r, m) + " in " + rm_name(r + 1, m); });
  });
  s.random("duality", [](Rng& rng) {
    const auto m = static_cast<unsigned>(uniform(rng, 1, 10));
    const auto r = static_cast<unsigned>(uniform(rng, 0, m - 1));
    const Gf2Matrix g = generator_matrix(RmSpec(r, m));
    const Gf2Matrix h = parity_check_matrix(RmSpec(r, m));
    const bool bad = !multiply(g, transpose(h)).is_zero() || g.rows() + h.rows() != g.cols() ||
                     gfrank(g) != g.rows();
    return fail_if(bad, [&] { return rm_name(r, m); });
  });
  s.exhaustive("quotient basis has full-rank Gram matrix", [](const auto& record) {
    for (unsigned m = 2; m <= 12; ++m) {
      for (unsigned r = 0; 2 * r + 1 < m; ++r) {
        const Gf2Matrix delta = delta_basis(RmSpec(r, m)).matrix;
        record(fail_if(gfrank(gram(delta)) != delta.rows(), [&] { return rm_name(r, m); }));
      }
    }
  });
  return s.take();
}

// Random parity check with full row rank and a nonzero code.
Gf2Matrix random_parity_check(Rng& rng, std::size_t n) {
  while (true) {
    const std::size_t rho = uniform(rng, 0, n - 1);
    Gf2Matrix h = random_matrix(rng, rho, n);
    if (gfrank(h) == rho) return h;
  }
}

SuiteReport tpc_suite(const VerifyOptions& options) {
  Suite s("tpc", options);
  s.random("dual-containment transfer", [](Rng& rng) {
    const auto m1 = static_cast<unsigned>(uniform(rng, 0, 5));
    const auto m2 = static_cast<unsigned>(uniform(rng, 0, 5));
    const auto r1 = static_cast<unsigned>(uniform(rng, 0, m1));
    const auto r2 = static_cast<unsigned>(uniform(rng, 0, m2));
    const Gf2Matrix h1 = parity_check_matrix(RmSpec(r1, m1));
    const Gf2Matrix h2 = parity_check_matrix(RmSpec(r2, m2));
    const bool product = gram(tpc_parity(h1, h2)).is_zero();
    const bool either = gram(h1).is_zero() || gram(h2).is_zero();
    return fail_if(product != either, [&] { return rm_name(r1, m1) + " (x) " + rm_name(r2, m2); });
  });
  s.random("distance is the smaller component distance", [](Rng& rng) {
    while (true) {
      const Gf2Matrix h1 = random_parity_check(rng, uniform(rng, 1, 6));
      const Gf2Matrix h2 = random_parity_check(rng, uniform(rng, 1, 6));
      const Gf2Matrix g = tpc_generator(h1, h2);
      if (g.rows() > 16) continue;
      const std::size_t d1 = min_distance_bruteforce(kernel_basis(h1));
      const std::size_t d2 = min_distance_bruteforce(kernel_basis(h2));
      const std::size_t d = min_distance_bruteforce(g);
      return fail_if(d != std::min(d1, d2), [&] {
        return "H1 " + shape(h1) + ", H2 " + shape(h2) + ": d = " + std::to_string(d) +
               ", d1 = " + std::to_string(d1) + ", d2 = " + std::to_string(d2);
      });
    }
  });
  s.random("dimension matches parameter algebra", [](Rng& rng) {
    const Gf2Matrix h1 = random_parity_check(rng, uniform(rng, 1, 10));
    const Gf2Matrix h2 = random_parity_check(rng, uniform(rng, 1, 10));
    const ClassicalCodeParams c1 = ClassicalCodeParams::make(h1.cols(), h1.cols() - h1.rows(), 1,
                                                             DistanceKind::unknown);
    const ClassicalCodeParams c2 = ClassicalCodeParams::make(h2.cols(), h2.cols() - h2.rows(), 1,
                                                             DistanceKind::unknown);
    const Gf2Matrix g = tpc_generator(h1, h2);
    const bool bad = BigInt(g.rows()) != tpc_params(c1, c2).k ||
                     !multiply(g, transpose(tpc_parity(h1, h2))).is_zero();
    return fail_if(bad, [&] { return "H1 " + shape(h1) + ", H2 " + shape(h2); });
  });
  return s.take();
}

// Symplectic Gram matrix of a generator list.
Gf2Matrix commutation_matrix(const std::vector<SymplecticVector>& g) {
  Gf2Matrix omega(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (symplectic_product(g[i], g[j])) omega.set(i, j);
    }
  }
  return omega;
}

std::string check_sgs(const std::vector<SymplecticVector>& in, std::size_t n) {
  const SgsResult sgs = symplectic_gram_schmidt(in);
  std::vector<SymplecticVector> out;
  std::vector<std::size_t> owner;
  for (std::size_t p = 0; p < sgs.pairs.size(); ++p) {
    if (!symplectic_product(sgs.pairs[p].first, sgs.pairs[p].second)) return "pair without anticommutation";
    out.push_back(sgs.pairs[p].first);
    out.push_back(sgs.pairs[p].second);
    owner.push_back(p);
    owner.push_back(p);
  }
  for (const SymplecticVector& v : sgs.isotropic) {
    out.push_back(v);
    owner.push_back(sgs.pairs.size());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const bool same_pair = owner[i] == owner[j] && owner[i] < sgs.pairs.size();
      if (!same_pair && symplectic_product(out[i], out[j])) return "cross pair anticommutes";
    }
  }
  if (2 * sgs.n_e() != gfrank(commutation_matrix(in))) return "pair count differs from half the commutation rank";

  std::vector<std::size_t> rows;
  for (auto [a, b] : sgs.pair_rows) {
    rows.push_back(a);
    rows.push_back(b);
  }
  rows.insert(rows.end(), sgs.isotropic_rows.begin(), sgs.isotropic_rows.end());
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] != i) return "input rows not partitioned";
  }
  if (rows.size() != in.size()) return "input rows not partitioned";

  const Gf2Matrix a = from_symplectic(in, n);
  const Gf2Matrix b = from_symplectic(out, n);
  if (!row_space_contains(a, b) || !row_space_contains(b, a)) return "span changed";

  if (sgs.h_ex.rows() != in.size() || sgs.h_ex.cols() != sgs.n_e() || sgs.h_ez.rows() != in.size() ||
      sgs.h_ez.cols() != sgs.n_e()) {
    return "extension shape";
  }
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t j = i + 1; j < in.size(); ++j) {
      const bool ext = sgs.h_ex.row_vector(i).dot(sgs.h_ez.row_vector(j)) !=
                       sgs.h_ez.row_vector(i).dot(sgs.h_ex.row_vector(j));
      if (symplectic_product(in[i], in[j]) != ext) return "extended generators anticommute";
    }
  }
  return {};
}

bool all_commute(const Gf2Matrix& symplectic_rows) {
  const std::vector<SymplecticVector> v = to_symplectic(symplectic_rows);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (symplectic_product(v[i], v[j])) return false;
    }
  }
  return true;
}

SuiteReport ea_suite(const VerifyOptions& options) {
  Suite s("ea", options);
  s.exhaustive("ebit count matches closed form", [](const auto& record) {
    for (unsigned m = 2; m <= 12; ++m) {
      for (unsigned r = 0; 2 * r + 1 < m; ++r) {
        const RmSpec spec(r, m);
        record(fail_if(BigInt(ebit_count(parity_check_matrix(spec))) != ebit_count_rm_closed_form(spec),
                       [&] { return rm_name(r, m); }));
      }
    }
  });
  s.random("Gram-Schmidt invariants", [](Rng& rng) {
    const std::size_t n = uniform(rng, 1, 16);
    const std::size_t count = uniform(rng, 0, 24);
    std::vector<SymplecticVector> in;
    for (std::size_t i = 0; i < count; ++i) in.push_back(random_pauli(rng, n));
    const std::string problem = check_sgs(in, n);
    return fail_if(!problem.empty(), [&] {
      return problem + " (n = " + std::to_string(n) + ", " + std::to_string(count) + " generators)";
    });
  });
  s.random("extended CSS checks commute", [](Rng& rng) {
    const Gf2Matrix h = random_test_matrix(rng, 8, 16);
    const ExtendedCheck ext = extended_check_matrix(h);
    const bool bad = ext.n_e() != ebit_count(h) || ext.matrix.rows() != 2 * h.rows() ||
                     ext.matrix.cols() != 2 * ext.qubits() || !all_commute(ext.matrix);
    return fail_if(bad, [&] { return "H " + shape(h); });
  });
  s.random("CSS pair count equals ebit count", [](Rng& rng) {
    const Gf2Matrix h = random_test_matrix(rng, 12, 20);
    return fail_if(symplectic_gram_schmidt(css_check_matrix(h, h)).n_e() != ebit_count(h),
                   [&] { return "H " + shape(h); });
  });
  return s.take();
}

SuiteReport rate_suite(const VerifyOptions& options) {
  Suite s("rate", options);
  s.exhaustive("EA RM codes carry no logical qubits", [](const auto& record) {
    for (unsigned m = 2; m <= 40; ++m) {
      for (unsigned r = 0; 2 * r + 1 < m; ++r) {
        record(fail_if(ea_rm_logical_qubits(RmSpec(r, m)) != 0, [&] { return rm_name(r, m); }));
      }
    }
  });
  s.exhaustive("EA RM TPCs carry logical qubits", [](const auto& record) {
    for (unsigned m1 = 2; m1 <= 20; ++m1) {
      for (unsigned r1 = 0; 2 * r1 + 1 < m1; ++r1) {
        for (unsigned m2 = 2; m2 <= 20; ++m2) {
          for (unsigned r2 = 0; 2 * r2 + 1 < m2; ++r2) {
            const RmSpec s1(r1, m1);
            const RmSpec s2(r2, m2);
            const BigInt k = ea_tpc_logical_qubits(s1, s2);
            const EaCodeParams p = ea_tpc_params(rm_params(s1), rm_params(s2),
                                                 ebit_count_rm_closed_form(s1),
                                                 ebit_count_rm_closed_form(s2));
            const bool bad = k <= 0 || k != p.k_logical || catalytic_count(s1, s2) != k - p.n_e;
            record(fail_if(bad, [&] { return rm_name(r1, m1) + " (x) " + rm_name(r2, m2); }));
          }
        }
      }
    }
  });
  s.exhaustive("catalytic sign agrees with integer test", [](const auto& record) {
    for (unsigned r = 1; r <= 20; ++r) {
      for (unsigned s2 = 1; s2 <= 12; ++s2) {
        const RmSpec spec(r, 2 * r + s2);
        record(fail_if((catalytic_count(spec, spec) > 0) != positive_catalytic_test(r, s2),
                       [&] { return "r = " + std::to_string(r) + ", s = " + std::to_string(s2); }));
      }
    }
  });
  s.exhaustive("integer test fails monotonically", [](const auto& record) {
    for (unsigned r = 1; r <= 20; ++r) {
      bool failed = false;
      for (unsigned s2 = 1; s2 <= 30; ++s2) {
        const bool ok = positive_catalytic_test(r, s2);
        record(fail_if(failed && ok,
                       [&] { return "r = " + std::to_string(r) + ", s = " + std::to_string(s2); }));
        failed = failed || !ok;
      }
    }
  });
  s.exhaustive("RM(i,2i+2) squares are catalytic", [](const auto& record) {
    for (unsigned i = 1; i <= 20; ++i) {
      const RmSpec spec(i, 2 * i + 2);
      record(fail_if(catalytic_count(spec, spec) <= 0, [&] { return rm_name(i, 2 * i + 2); }));
    }
  });
  s.random("rate report identities", [](Rng& rng) {
    const BigInt n = uniform(rng, 1, 1u << 20);
    const BigInt ne = uniform(rng, 0, 1u << 12);
    const BigInt k = uniform(rng, 0, 1u << 20);
    const RateReport rep = rates({n, k, 1, ne});
    const bool bad = rep.catalytic.value() != rep.ea_rate.value() - rep.tradeoff.second.value() ||
                     rep.ea_rate.denominator != n || rep.catalytic.denominator != n ||
                     rep.tradeoff.second.denominator != n || rep.catalytic_count != k - ne;
    return fail_if(bad, [&] { return "n = " + n.str(); });
  });
  s.random("TPC rate dominates component rates", [](Rng& rng) {
    const auto m1 = static_cast<unsigned>(uniform(rng, 1, 16));
    const auto m2 = static_cast<unsigned>(uniform(rng, 1, 16));
    const RmSpec s1(static_cast<unsigned>(uniform(rng, 0, m1)), m1);
    const RmSpec s2(static_cast<unsigned>(uniform(rng, 0, m2)), m2);
    const BigInt ne1 = ebit_count_rm_closed_form(s1);
    const BigInt ne2 = ebit_count_rm_closed_form(s2);
    const SuperadditivityReport rep = superadditivity_check(rm_params(s1), rm_params(s2), ne1, ne2);
    return fail_if(!rep.holds || (rep.strict_applies && !rep.strict_holds),
                   [&] { return rm_name(s1.r(), m1) + " (x) " + rm_name(s2.r(), m2); });
  });
  return s.take();
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.failures == 0; });
}

std::size_t SuiteReport::cases() const {
  std::size_t total = 0;
  for (const PropertyResult& p : properties) total += p.cases;
  return total;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gf2", "rm", "tpc", "ea", "rate"};
  return names;
}

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options) {
  using Runner = SuiteReport (*)(const VerifyOptions&);
  const std::vector<std::pair<std::string, Runner>> runners{
      {"gf2", gf2_suite}, {"rm", rm_suite}, {"tpc", tpc_suite}, {"ea", ea_suite}, {"rate", rate_suite}};
  std::vector<SuiteReport> out;
  for (const auto& [suite, run] : runners) {
    if (name == "all" || name == suite) out.push_back(run(options));
  }
  if (out.empty()) {
    throw ValidationError("unknown suite '" + std::string(name) + "'; expected all, gf2, rm, tpc, ea or rate");
  }
  return out;
}

}  // namespace eatpc
