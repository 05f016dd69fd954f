#include "eatpc/tensor_product.hpp"

#include <gtest/gtest.h>

#include "eatpc/reed_muller.hpp"
#include "oracles.hpp"

namespace eatpc {
namespace {

TEST(TpcParity, ShapeAndScalarIdentity) {
  const Gf2Matrix h = parity_check_matrix(RmSpec(1, 4));
  const Gf2Matrix p = tpc_parity(h, h);
  EXPECT_EQ(p.rows(), 121U);
  EXPECT_EQ(p.cols(), 256U);
  EXPECT_EQ(tpc_parity(Gf2Matrix::from_strings({"1"}), h), h);
  EXPECT_EQ(gfrank(p), 121U);
}

TEST(TpcGenerator, DistanceOfParityTimesRepetitionDual) {
  // [3,2,2] single parity check and the [2,1,2] repetition code.
  const Gf2Matrix h1 = Gf2Matrix::from_strings({"111"});
  const Gf2Matrix h2 = Gf2Matrix::from_strings({"11"});
  const Gf2Matrix g = tpc_generator(h1, h2);
  EXPECT_EQ(g.rows(), 5U);
  EXPECT_TRUE(multiply(g, transpose(tpc_parity(h1, h2))).is_zero());
  EXPECT_EQ(min_distance_bruteforce(g), 2U);
  EXPECT_EQ(oracle::min_distance(oracle::from_library(g)), 2U);
}

TEST(TpcParams, ParameterAlgebra) {
  const ClassicalCodeParams rm14 = rm_params(RmSpec(1, 4));
  EXPECT_EQ(tpc_params(rm14, rm14).describe(), "[256,135,8]");
  const ClassicalCodeParams rm26 = rm_params(RmSpec(2, 6));
  EXPECT_EQ(tpc_params(rm26, rm26).describe(), "[4096,2332,16]");
  EXPECT_EQ(tpc_params(rm14, rm14).source, ParamSource::tpc_closed_form);

  // The length-1 code has rho = 0, so the product keeps every position free.
  const ClassicalCodeParams trivial = ClassicalCodeParams::make(1, 1, 1);
  EXPECT_EQ(tpc_params(rm14, trivial).describe(), "[16,16,1]");

  const ClassicalCodeParams bounded = ClassicalCodeParams::make(8, 4, 3, DistanceKind::lower_bound);
  EXPECT_EQ(tpc_params(rm14, bounded).d_kind, DistanceKind::lower_bound);
  EXPECT_EQ(tpc_params(rm14, bounded).describe(), "[128,84,>=3]");
}

TEST(TpcParams, DimensionMatchesKernel) {
  for (unsigned m1 = 1; m1 <= 4; ++m1) {
    for (unsigned r1 = 0; r1 <= m1; ++r1) {
      for (unsigned m2 = 1; m2 <= 3; ++m2) {
        for (unsigned r2 = 0; r2 <= m2; ++r2) {
          const RmSpec s1(r1, m1);
          const RmSpec s2(r2, m2);
          const Gf2Matrix g = tpc_generator(parity_check_matrix(s1), parity_check_matrix(s2));
          EXPECT_EQ(BigInt(g.rows()), tpc_params(rm_params(s1), rm_params(s2)).k);
        }
      }
    }
  }
}

TEST(ProductGenerator, ShapesAndContainment) {
  EXPECT_EQ(product_generator(generator_matrix(RmSpec(0, 1)), generator_matrix(RmSpec(0, 1))),
            Gf2Matrix::from_strings({"1111"}));
  EXPECT_EQ(product_generator(generator_matrix(RmSpec(1, 4)), generator_matrix(RmSpec(1, 4))).rows(), 25U);
  EXPECT_TRUE(row_space_contains(generator_matrix(RmSpec(2, 4)),
                                 product_generator(generator_matrix(RmSpec(1, 2)), generator_matrix(RmSpec(1, 2)))));
}

TEST(Containments, RmAndProductCodes) {
  const RmTpcContainmentReport a = check_rm_tpc_containments(1, 2, 1, 2, 2);
  EXPECT_TRUE(a.product_in_rm);
  EXPECT_TRUE(a.rm_in_product);
  const RmTpcContainmentReport b = check_rm_tpc_containments(1, 4, 1, 4, 2);
  EXPECT_TRUE(b.product_in_rm);
  EXPECT_TRUE(b.rm_in_product);
  const RmTpcContainmentReport c = check_rm_tpc_containments(0, 0, 2, 5, 3);
  EXPECT_TRUE(c.product_equals_rm);
  EXPECT_THROW(check_rm_tpc_containments(1, 7, 1, 7, 2), CapacityError);
  EXPECT_THROW(check_rm_tpc_containments(1, 2, 1, 2, 4), ValidationError);
}

}  // namespace
}  // namespace eatpc
