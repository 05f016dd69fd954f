// Invariants checked against the independent oracles rather than the
// library's own elimination and binomial code.

#include <gtest/gtest.h>

#include <random>

#include "eatpc/rates.hpp"
#include "eatpc/reed_muller.hpp"
#include "eatpc/stabilizer.hpp"
#include "eatpc/tensor_product.hpp"
#include "oracles.hpp"

namespace eatpc {
namespace {

TEST(Property, EbitCountMatchesClosedFormViaNaiveRank) {
  for (unsigned m = 2; m <= 8; ++m) {
    for (unsigned r = 0; 2 * r + 1 < m; ++r) {
      const oracle::Matrix h = oracle::from_library(parity_check_matrix(RmSpec(r, m)));
      const std::size_t ne = oracle::rank(oracle::multiply(h, oracle::transpose(h)));
      EXPECT_EQ(ne, oracle::binomial_sum(m, static_cast<int>(r) + 1, static_cast<int>(m - r) - 1))
          << "RM(" << r << "," << m << ")";
      EXPECT_EQ(ne, ebit_count(parity_check_matrix(RmSpec(r, m))));
    }
  }
}

TEST(Property, GeneratorRowsAreKroneckerEvaluations) {
  for (unsigned m = 1; m <= 7; ++m) {
    for (unsigned r = 0; r <= m; ++r) {
      const Gf2Matrix g = generator_matrix(RmSpec(r, m));
      const std::vector<Monomial> rows = monomials(m, 0, r);
      ASSERT_EQ(g.rows(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(g.row_vector(i).to_string(), oracle::to_string(oracle::eval_monomial(m, rows[i].indices())));
      }
    }
  }
}

TEST(Property, SplitMonomialIsTensorProduct) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned m1 = 1 + static_cast<unsigned>(rng() % 8);
    const unsigned m2 = 1 + static_cast<unsigned>(rng() % 8);
    const std::uint64_t a = rng() & ((std::uint64_t{1} << m1) - 1);
    const std::uint64_t b = rng() & ((std::uint64_t{1} << m2) - 1);
    const BitVector joint = eval_vector(Monomial::from_mask(m1 + m2, a | (b << m1)));
    const BitVector split = eval_vector(Monomial::from_mask(m1, a)).kron(eval_vector(Monomial::from_mask(m2, b)));
    EXPECT_EQ(joint, split);
  }
}

TEST(Property, EaRmLogicalQubitsVanishUpToForty) {
  for (unsigned m = 2; m <= 40; ++m) {
    for (unsigned r = 0; 2 * r + 1 < m; ++r) EXPECT_EQ(ea_rm_logical_qubits(RmSpec(r, m)), 0);
  }
}

TEST(Property, EaTpcHasLogicalQubitsForEveryComponentPair) {
  for (unsigned m1 = 2; m1 <= 20; ++m1) {
    for (unsigned r1 = 0; 2 * r1 + 1 < m1; ++r1) {
      for (unsigned m2 = 2; m2 <= 20; ++m2) {
        for (unsigned r2 = 0; 2 * r2 + 1 < m2; ++r2) {
          const RmSpec s1(r1, m1);
          const RmSpec s2(r2, m2);
          const BigInt k = ea_tpc_logical_qubits(s1, s2);
          ASSERT_GT(k, 0);
          const ClassicalCodeParams c1 = rm_params(s1);
          const ClassicalCodeParams c2 = rm_params(s2);
          const BigInt via_params = c1.n * c2.n - 2 * c1.rho * c2.rho +
                                    ebit_count_rm_closed_form(s1) * ebit_count_rm_closed_form(s2);
          ASSERT_EQ(k, via_params);
        }
      }
    }
  }
}

TEST(Property, CatalyticSignAndMonotoneFailure) {
  for (unsigned r = 1; r <= 20; ++r) {
    bool failed = false;
    for (unsigned s = 1; s <= 30; ++s) {
      const bool ok = positive_catalytic_test(r, s);
      if (s <= 12) {
        const RmSpec spec(r, 2 * r + s);
        EXPECT_EQ(catalytic_count(spec, spec) > 0, ok) << r << "," << s;
      }
      EXPECT_FALSE(failed && ok) << "recovers at r = " << r << ", s = " << s;
      failed = failed || !ok;
    }
    EXPECT_TRUE(failed);
  }
}

TEST(Property, DualContainmentTransfers) {
  for (unsigned m1 = 0; m1 <= 4; ++m1) {
    for (unsigned r1 = 0; r1 <= m1; ++r1) {
      for (unsigned m2 = 0; m2 <= 4; ++m2) {
        for (unsigned r2 = 0; r2 <= m2; ++r2) {
          const Gf2Matrix h1 = parity_check_matrix(RmSpec(r1, m1));
          const Gf2Matrix h2 = parity_check_matrix(RmSpec(r2, m2));
          EXPECT_EQ(gram(kron(h1, h2)).is_zero(), gram(h1).is_zero() || gram(h2).is_zero());
        }
      }
    }
  }
}

}  // namespace
}  // namespace eatpc
