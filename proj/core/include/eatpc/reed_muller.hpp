#pragma once

// Reed-Muller codes RM(r, m) built from evaluation vectors of monomials.
//
// Evaluation points z in F_2^m are visited in increasing binary order with
// z_1 as the most significant bit, so Eval(x1) = 0...01...1 and
// Eval(xm) = 0101.... Generator rows are ordered by degree, then
// lexicographically by index set: 1, x1, ..., xm, x1x2, x1x3, ...

#include <cstdint>
#include <vector>

#include "eatpc/code_params.hpp"
#include "eatpc/error.hpp"
#include "eatpc/gf2.hpp"
#include "eatpc/polynomial.hpp"

namespace eatpc {

/// Order r and variable count m of a Reed-Muller code, 0 <= r <= m.
/// m = 0 is allowed and denotes the length-1 code.
class RmSpec {
 public:
  RmSpec(unsigned r, unsigned m);

  unsigned r() const { return r_; }
  unsigned m() const { return m_; }

  /// r >= (m - 1) / 2: the code contains its dual and needs no entanglement.
  bool dual_containing() const { return 2 * r_ + 1 >= m_; }

  friend bool operator==(const RmSpec&, const RmSpec&) = default;

 private:
  unsigned r_;
  unsigned m_;
};

bool eval_point(const Polynomial& f, const BitVector& z);

BitVector eval_vector(const Monomial& x, unsigned max_m = Limits::kMaxEvalVariables);
/// Throws CapacityError when f.m() > max_m.
BitVector eval_vector(const Polynomial& f, unsigned max_m = Limits::kMaxEvalVariables);

/// All monomials over m variables with min_degree <= degree <= max_degree,
/// in generator row order.
std::vector<Monomial> monomials(unsigned m, unsigned min_degree, unsigned max_degree);

Gf2Matrix evaluation_matrix(const std::vector<Monomial>& rows, unsigned m,
                            unsigned max_m = Limits::kMaxEvalVariables);

Gf2Matrix generator_matrix(const RmSpec& spec, unsigned max_m = Limits::kMaxEvalVariables);

/// Generator of the dual RM(m - r - 1, m). For r = m the dual is the zero
/// code and the result is an explicit 0 x 2^m matrix.
Gf2Matrix parity_check_matrix(const RmSpec& spec, unsigned max_m = Limits::kMaxEvalVariables);

struct DeltaBasis {
  Gf2Matrix matrix;
  /// Set when r + 1 > m - r - 1, i.e. the quotient is trivial.
  bool empty_quotient = false;
};

/// Basis of RM(m - r - 1, m) / RM(r, m): evaluation vectors of the monomials
/// with r + 1 <= degree <= m - r - 1.
DeltaBasis delta_basis(const RmSpec& spec, unsigned max_m = Limits::kMaxEvalVariables);

/// [2^m, sum_{i<=r} C(m,i), 2^(m-r)] from the closed form.
ClassicalCodeParams rm_params(const RmSpec& spec);

/// Minimum nonzero codeword weight by exhaustive enumeration of all 2^rows
/// combinations. Throws CapacityError when 2^rows exceeds `cap`.
std::size_t min_distance_bruteforce(const Gf2Matrix& generator,
                                    std::uint64_t cap = Limits::kBruteForceCodewords);

}  // namespace eatpc
