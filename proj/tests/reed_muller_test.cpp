#include "eatpc/reed_muller.hpp"

#include <gtest/gtest.h>

#include "eatpc/error.hpp"
#include "oracles.hpp"

namespace eatpc {
namespace {

// Parity check of RM(1,4) written out by hand: the five degree <= 1
// evaluations followed by the six degree-2 ones.
const Gf2Matrix kH14 = Gf2Matrix::from_strings({
    "1111111111111111",
    "0000000011111111",
    "0000111100001111",
    "0011001100110011",
    "0101010101010101",
    "0000000000001111",
    "0000000000110011",
    "0000000001010101",
    "0000001100000011",
    "0000010100000101",
    "0001000100010001",
});

TEST(RmSpec, Validation) {
  EXPECT_NO_THROW(RmSpec(0, 0));
  EXPECT_NO_THROW(RmSpec(4, 4));
  EXPECT_THROW(RmSpec(5, 4), ValidationError);
  EXPECT_TRUE(RmSpec(1, 3).dual_containing());
  EXPECT_FALSE(RmSpec(1, 4).dual_containing());
}

TEST(EvalPoint, HandEvaluations) {
  EXPECT_TRUE(eval_point(Polynomial::parse("1", 4), BitVector::from_string("0000")));
  EXPECT_TRUE(eval_point(Polynomial::parse("x1", 4), BitVector::from_string("1000")));
  EXPECT_FALSE(eval_point(Polynomial::parse("x1", 4), BitVector::from_string("0111")));
  EXPECT_TRUE(eval_point(Polynomial::parse("x1*x2 + x3", 4), BitVector::from_string("1101")));
  EXPECT_THROW(eval_point(Polynomial::parse("x1", 4), BitVector(3)), ValidationError);
}

TEST(EvalVector, WrittenOutEvaluations) {
  EXPECT_EQ(eval_vector(Monomial(4)).to_string(), "1111111111111111");
  EXPECT_EQ(eval_vector(Monomial(4, {1})).to_string(), "0000000011111111");
  EXPECT_EQ(eval_vector(Monomial(4, {2})).to_string(), "0000111100001111");
  EXPECT_EQ(eval_vector(Monomial(4, {3})).to_string(), "0011001100110011");
  EXPECT_EQ(eval_vector(Monomial(4, {4})).to_string(), "0101010101010101");
}

TEST(EvalVector, MatchesKroneckerOracleAndPointwiseEvaluation) {
  for (unsigned m = 0; m <= 9; ++m) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const Monomial x = Monomial::from_mask(m, mask);
      const std::vector<unsigned> idx = x.indices();
      EXPECT_EQ(eval_vector(x).to_string(), oracle::to_string(oracle::eval_monomial(m, idx))) << x.to_string();
    }
  }
  const Polynomial f = Polynomial::parse("1 + x2*x5 + x1*x3*x4 + x6", 7);
  const BitVector v = eval_vector(f);
  for (std::size_t point = 0; point < v.size(); ++point) {
    BitVector z(7);
    for (unsigned i = 0; i < 7; ++i) z.set(i, (point >> (6 - i)) & 1U);
    EXPECT_EQ(v.get(point), eval_point(f, z));
  }
}

TEST(EvalVector, CapIsEnforced) {
  EXPECT_THROW(eval_vector(Monomial(25)), CapacityError);
  EXPECT_NO_THROW(eval_vector(Monomial(10), 10));
  EXPECT_THROW(eval_vector(Monomial(11), 10), CapacityError);
}

TEST(Monomials, GeneratorRowOrder) {
  std::vector<std::string> text;
  for (const Monomial& x : monomials(4, 0, 2)) text.push_back(x.to_string());
  EXPECT_EQ(text, (std::vector<std::string>{"1", "x1", "x2", "x3", "x4", "x1*x2", "x1*x3", "x1*x4",
                                            "x2*x3", "x2*x4", "x3*x4"}));
  EXPECT_EQ(monomials(5, 3, 2).size(), 0U);
}

TEST(GeneratorMatrix, Rm14IsTheFirstFiveRowsOfItsParityCheck) {
  EXPECT_EQ(generator_matrix(RmSpec(1, 4)), kH14.slice_rows(0, 5));
  EXPECT_EQ(generator_matrix(RmSpec(0, 5)), Gf2Matrix::from_strings({std::string(32, '1')}));
  const Gf2Matrix full = generator_matrix(RmSpec(5, 5));
  EXPECT_EQ(full.rows(), 32U);
  EXPECT_EQ(gfrank(full), 32U);
}

TEST(ParityCheck, Rm14AndBoundaries) {
  EXPECT_EQ(parity_check_matrix(RmSpec(1, 4)), kH14);
  EXPECT_EQ(parity_check_matrix(RmSpec(3, 4)), Gf2Matrix::from_strings({std::string(16, '1')}));
  const Gf2Matrix none = parity_check_matrix(RmSpec(4, 4));
  EXPECT_EQ(none.rows(), 0U);
  EXPECT_EQ(none.cols(), 16U);
  EXPECT_TRUE(multiply(parity_check_matrix(RmSpec(1, 4)), transpose(generator_matrix(RmSpec(1, 4)))).is_zero());
}

TEST(DeltaBasis, DegreeTwoRowsOfRm14) {
  const DeltaBasis d = delta_basis(RmSpec(1, 4));
  EXPECT_FALSE(d.empty_quotient);
  EXPECT_EQ(d.matrix, kH14.slice_rows(5, 11));
  EXPECT_EQ(gfrank(gram(d.matrix)), 6U);
  for (unsigned r = 0; r <= 5; ++r) {
    const DeltaBasis boundary = delta_basis(RmSpec(r, 2 * r + 1));
    EXPECT_TRUE(boundary.empty_quotient);
    EXPECT_EQ(boundary.matrix.rows(), 0U);
  }
}

TEST(RmParams, ClosedForm) {
  EXPECT_EQ(rm_params(RmSpec(1, 4)).describe(), "[16,5,8]");
  EXPECT_EQ(rm_params(RmSpec(2, 6)).describe(), "[64,22,16]");
  EXPECT_EQ(rm_params(RmSpec(0, 3)).describe(), "[8,1,8]");
  EXPECT_EQ(rm_params(RmSpec(1, 4)).rho, 11);
  EXPECT_EQ(rm_params(RmSpec(0, 0)).describe(), "[1,1,1]");
  for (unsigned m = 0; m <= 12; ++m) {
    for (unsigned r = 0; r <= m; ++r) {
      EXPECT_EQ(rm_params(RmSpec(r, m)).k, BigInt(gfrank(generator_matrix(RmSpec(r, m)))));
    }
  }
}

TEST(MinDistance, BruteForceOracles) {
  EXPECT_EQ(min_distance_bruteforce(generator_matrix(RmSpec(1, 4))), 8U);
  EXPECT_EQ(min_distance_bruteforce(generator_matrix(RmSpec(2, 4))), 4U);
  EXPECT_EQ(min_distance_bruteforce(Gf2Matrix::from_strings({"1111111"})), 7U);
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned r = 0; r <= m; ++r) {
      const Gf2Matrix g = generator_matrix(RmSpec(r, m));
      if (g.rows() > 16) continue;
      const std::size_t d = min_distance_bruteforce(g);
      EXPECT_EQ(BigInt(d), rm_params(RmSpec(r, m)).d);
      EXPECT_EQ(d, oracle::min_distance(oracle::from_library(g)));
    }
  }
}

TEST(MinDistance, CapsAndDegenerateInput) {
  EXPECT_THROW(min_distance_bruteforce(generator_matrix(RmSpec(2, 6)), 1U << 20), CapacityError);
  EXPECT_NO_THROW(min_distance_bruteforce(generator_matrix(RmSpec(2, 6)), std::uint64_t{1} << 22));
  EXPECT_THROW(min_distance_bruteforce(Gf2Matrix(2, 4)), ValidationError);
}

}  // namespace
}  // namespace eatpc
