#include "eatpc/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "eatpc/error.hpp"
#include "oracles.hpp"

namespace eatpc {
namespace {

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Gf2Matrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a.set(r, c, rng() & 1U);
  }
  return a;
}

const Gf2Matrix kRm14 = Gf2Matrix::from_strings({
    "1111111111111111",
    "0000000011111111",
    "0000111100001111",
    "0011001100110011",
    "0101010101010101",
});

TEST(BitVector, RoundTripAndOps) {
  const BitVector a = BitVector::from_string("1100101");
  EXPECT_EQ(a.to_string(), "1100101");
  EXPECT_EQ(a.weight(), 4U);
  const BitVector b = BitVector::from_string("1010001");
  EXPECT_EQ((a ^ b).to_string(), "0110100");
  EXPECT_EQ((a & b).to_string(), "1000001");
  EXPECT_FALSE(a.dot(b));
  EXPECT_FALSE(a.dot(a));
  EXPECT_TRUE(b.dot(b));
  EXPECT_EQ(BitVector::from_string("01").kron(BitVector::from_string("11")).to_string(), "0011");
  EXPECT_THROW(BitVector::from_string("10x"), ValidationError);
}

TEST(BitVector, WideVectorsCrossWordBoundaries) {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.weight(), 3U);
  v.flip(64);
  EXPECT_FALSE(v.get(64));
  EXPECT_TRUE(v.any());
}

TEST(Gf2Matrix, ConstructionAndAccess) {
  const Gf2Matrix id = Gf2Matrix::identity(70);
  EXPECT_EQ(id.rows(), 70U);
  EXPECT_EQ(gfrank(id), 70U);
  EXPECT_THROW(Gf2Matrix::from_strings({"101", "10"}), ValidationError);
  const Gf2Matrix empty = Gf2Matrix::from_strings(std::initializer_list<std::string_view>{}, 5);
  EXPECT_EQ(empty.rows(), 0U);
  EXPECT_EQ(empty.cols(), 5U);
}

TEST(Multiply, SmallCases) {
  std::mt19937_64 rng(1);
  const Gf2Matrix m = random_matrix(rng, 3, 9);
  EXPECT_EQ(multiply(Gf2Matrix::identity(3), m), m);
  EXPECT_EQ(multiply(Gf2Matrix::from_strings({"11", "11"}), Gf2Matrix::from_strings({"1", "1"})),
            Gf2Matrix::from_strings({"0", "0"}));
  EXPECT_THROW(multiply(Gf2Matrix(2, 3), Gf2Matrix(2, 3)), ValidationError);
}

TEST(Multiply, AgreesWithNaiveOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Gf2Matrix a = random_matrix(rng, rng() % 20 + 1, rng() % 150 + 1);
    const Gf2Matrix b = random_matrix(rng, a.cols(), rng() % 90 + 1);
    EXPECT_EQ(oracle::from_library(multiply(a, b)),
              oracle::multiply(oracle::from_library(a), oracle::from_library(b)));
    EXPECT_EQ(oracle::from_library(gram(a)),
              oracle::multiply(oracle::from_library(a), oracle::transpose(oracle::from_library(a))));
  }
}

TEST(Transpose, InvolutionAndShapes) {
  std::mt19937_64 rng(3);
  const Gf2Matrix a = random_matrix(rng, 37, 101);
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(oracle::from_library(transpose(a)), oracle::transpose(oracle::from_library(a)));
  const Gf2Matrix ones = Gf2Matrix::from_strings({"11111"});
  EXPECT_EQ(transpose(ones), Gf2Matrix::from_strings({"1", "1", "1", "1", "1"}));
  EXPECT_EQ(transpose(kRm14).rows(), 16U);
  EXPECT_EQ(transpose(kRm14).cols(), 5U);
}

TEST(Kron, ExpansionAndShape) {
  const Gf2Matrix f = Gf2Matrix::from_strings({"11", "01"});
  EXPECT_EQ(kron(Gf2Matrix::from_strings({"1"}), kRm14), kRm14);
  EXPECT_EQ(kron(f, f), Gf2Matrix::from_strings({"1111", "0101", "0011", "0001"}));
  std::mt19937_64 rng(11);
  const Gf2Matrix a = random_matrix(rng, 3, 5);
  const Gf2Matrix b = random_matrix(rng, 4, 70);
  const Gf2Matrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 12U);
  ASSERT_EQ(k.cols(), 350U);
  for (std::size_t i = 0; i < k.rows(); ++i) {
    for (std::size_t j = 0; j < k.cols(); ++j) {
      EXPECT_EQ(k.get(i, j), a.get(i / 4, j / 70) && b.get(i % 4, j % 70));
    }
  }
}

TEST(Rank, KnownValuesAndOracle) {
  EXPECT_EQ(gfrank(Gf2Matrix::identity(9)), 9U);
  EXPECT_EQ(gfrank(Gf2Matrix::from_strings({"11", "11"})), 1U);
  EXPECT_EQ(gfrank(Gf2Matrix(4, 4)), 0U);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t inner = rng() % 30 + 1;
    const Gf2Matrix a = multiply(random_matrix(rng, rng() % 40 + 1, inner), random_matrix(rng, inner, rng() % 90 + 1));
    EXPECT_EQ(gfrank(a), oracle::rank(oracle::from_library(a)));
  }
}

TEST(Rref, PivotsAndIdempotence) {
  const RrefResult id = rref(Gf2Matrix::identity(5));
  EXPECT_EQ(id.matrix, Gf2Matrix::identity(5));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  const RrefResult zero = rref(Gf2Matrix(3, 7));
  EXPECT_TRUE(zero.matrix.is_zero());
  EXPECT_TRUE(zero.pivots.empty());
  const RrefResult g = rref(kRm14);
  EXPECT_EQ(g.pivots.size(), 5U);
  for (std::size_t i = 0; i < g.pivots.size(); ++i) {
    for (std::size_t r = 0; r < g.matrix.rows(); ++r) EXPECT_EQ(g.matrix.get(r, g.pivots[i]), r == i);
  }
  EXPECT_EQ(rref(g.matrix).matrix, g.matrix);
}

TEST(Kernel, BasisProperties) {
  EXPECT_EQ(kernel_basis(Gf2Matrix::identity(4)).rows(), 0U);
  EXPECT_EQ(kernel_basis(Gf2Matrix::identity(4)).cols(), 4U);
  EXPECT_EQ(kernel_basis(Gf2Matrix::from_strings({"11"})), Gf2Matrix::from_strings({"11"}));
  const Gf2Matrix k = kernel_basis(kRm14);
  EXPECT_EQ(k.rows(), 11U);
  EXPECT_TRUE(multiply(kRm14, transpose(k)).is_zero());
}

TEST(RowSpace, Containment) {
  const Gf2Matrix ones = Gf2Matrix::from_strings({"1111111111111111"});
  EXPECT_TRUE(row_space_contains(kRm14, kRm14));
  EXPECT_TRUE(row_space_contains(kRm14, ones));
  EXPECT_FALSE(row_space_contains(ones, kRm14));
  EXPECT_THROW(row_space_contains(kRm14, Gf2Matrix(1, 15)), ValidationError);
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(9);
  int found = 0;
  while (found < 10) {
    const Gf2Matrix a = random_matrix(rng, 12, 12);
    if (gfrank(a) != 12) {
      EXPECT_THROW(inverse(a), ValidationError);
      continue;
    }
    ++found;
    EXPECT_EQ(multiply(a, inverse(a)), Gf2Matrix::identity(12));
  }
}

TEST(Stacking, ShapesAndContent) {
  const Gf2Matrix a = Gf2Matrix::from_strings({"10", "01"});
  const Gf2Matrix b = Gf2Matrix::from_strings({"111", "000"});
  EXPECT_EQ(hstack(a, b), Gf2Matrix::from_strings({"10111", "01000"}));
  EXPECT_EQ(vstack(a, a), Gf2Matrix::from_strings({"10", "01", "10", "01"}));
  EXPECT_THROW(vstack(a, b), ValidationError);
  EXPECT_EQ(hstack(a, b).slice_cols(2, 5), b);
  EXPECT_EQ(vstack(a, b.slice_cols(0, 2)).slice_rows(2, 4), b.slice_cols(0, 2));
}

TEST(Symplectic, ProductExamples) {
  SymplecticVector x1(3);
  x1.x.set(0);
  SymplecticVector z1(3);
  z1.z.set(0);
  EXPECT_TRUE(symplectic_product(x1, z1));
  EXPECT_FALSE(symplectic_product(x1, x1));

  // x1 x2 and x3 x4 over four variables share exactly one point: 1111.
  const SymplecticVector u(BitVector::from_string("0000000000001111"), BitVector(16));
  const SymplecticVector v(BitVector(16), BitVector::from_string("0001000100010001"));
  EXPECT_TRUE(symplectic_product(u, v));
  EXPECT_THROW(symplectic_product(x1, SymplecticVector(4)), ValidationError);
}

TEST(Symplectic, MatrixConversionRoundTrip) {
  const Gf2Matrix m = Gf2Matrix::from_strings({"1001", "0110"});
  const std::vector<SymplecticVector> v = to_symplectic(m);
  ASSERT_EQ(v.size(), 2U);
  EXPECT_EQ(v[0].x.to_string(), "10");
  EXPECT_EQ(v[0].z.to_string(), "01");
  EXPECT_EQ(from_symplectic(v), m);
  EXPECT_THROW(to_symplectic(Gf2Matrix(1, 3)), ValidationError);
}

}  // namespace
}  // namespace eatpc
