#include "eatpc/reed_muller.hpp"

#include <bit>
#include <limits>

namespace eatpc {
namespace {

void check_eval_cap(unsigned m, unsigned max_m) {
  if (m > max_m) {
    throw CapacityError("evaluation over m = " + std::to_string(m) +
                        " variables exceeds the cap of " + std::to_string(max_m) +
                        " (raise it to at least " + std::to_string(m) + ")");
  }
  if (m >= 48) {
    throw CapacityError("evaluation vectors of length 2^" + std::to_string(m) +
                        " cannot be materialised");
  }
}

// Bit mask over point indices p (z_1 = MSB) selecting the variables of x.
std::uint64_t point_mask(const Monomial& x) {
  std::uint64_t pm = 0;
  for (unsigned i : x.indices()) pm |= std::uint64_t{1} << (x.m() - i);
  return pm;
}

}  // namespace

RmSpec::RmSpec(unsigned r, unsigned m) : r_(r), m_(m) {
  if (r > m) {
    throw ValidationError("RM(" + std::to_string(r) + "," + std::to_string(m) +
                          ") is invalid: need 0 <= r <= m");
  }
}

bool eval_point(const Polynomial& f, const BitVector& z) {
  if (z.size() != f.m()) {
    throw ValidationError("evaluation point has " + std::to_string(z.size()) +
                          " coordinates, polynomial has " + std::to_string(f.m()) + " variables");
  }
  bool value = false;
  for (const Monomial& t : f.terms()) {
    bool term = true;
    for (unsigned i : t.indices()) term = term && z.get(i - 1);
    value = value != term;
  }
  return value;
}

BitVector eval_vector(const Monomial& x, unsigned max_m) {
  const unsigned m = x.m();
  check_eval_cap(m, max_m);
  const std::size_t length = std::size_t{1} << m;
  BitVector v(length);
  const std::uint64_t pm = point_mask(x);
  auto words = v.words();

  if (m < 6) {
    for (std::size_t p = 0; p < length; ++p) {
      if ((p & pm) == pm) v.set(p);
    }
    return v;
  }
  // The low six point bits index inside a word; they share one pattern.
  const std::uint64_t low = pm & 63U;
  const std::uint64_t high = pm >> 6;
  Word pattern = 0;
  for (unsigned b = 0; b < 64; ++b) {
    if ((b & low) == low) pattern |= Word{1} << b;
  }
  for (std::size_t w = 0; w < words.size(); ++w) {
    if ((w & high) == high) words[w] = pattern;
  }
  return v;
}

BitVector eval_vector(const Polynomial& f, unsigned max_m) {
  check_eval_cap(f.m(), max_m);
  BitVector v(std::size_t{1} << f.m());
  for (const Monomial& t : f.terms()) v ^= eval_vector(t, max_m);
  return v;
}

std::vector<Monomial> monomials(unsigned m, unsigned min_degree, unsigned max_degree) {
  std::vector<Monomial> out;
  if (max_degree > m) max_degree = m;
  for (unsigned d = min_degree; d <= max_degree; ++d) {
    // Index sets of size d in lexicographic order.
    std::vector<unsigned> idx(d);
    for (unsigned i = 0; i < d; ++i) idx[i] = i + 1;
    while (true) {
      out.emplace_back(m, idx);
      int pos = static_cast<int>(d) - 1;
      while (pos >= 0 && idx[static_cast<unsigned>(pos)] == m - d + static_cast<unsigned>(pos) + 1) {
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<unsigned>(pos)];
      for (unsigned j = static_cast<unsigned>(pos) + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

Gf2Matrix evaluation_matrix(const std::vector<Monomial>& rows, unsigned m, unsigned max_m) {
  check_eval_cap(m, max_m);
  Gf2Matrix g(rows.size(), std::size_t{1} << m);
  for (std::size_t i = 0; i < rows.size(); ++i) g.set_row(i, eval_vector(rows[i], max_m));
  return g;
}

Gf2Matrix generator_matrix(const RmSpec& spec, unsigned max_m) {
  check_eval_cap(spec.m(), max_m);
  return evaluation_matrix(monomials(spec.m(), 0, spec.r()), spec.m(), max_m);
}

Gf2Matrix parity_check_matrix(const RmSpec& spec, unsigned max_m) {
  check_eval_cap(spec.m(), max_m);
  if (spec.r() == spec.m()) return Gf2Matrix(0, std::size_t{1} << spec.m());
  return generator_matrix(RmSpec(spec.m() - spec.r() - 1, spec.m()), max_m);
}

DeltaBasis delta_basis(const RmSpec& spec, unsigned max_m) {
  check_eval_cap(spec.m(), max_m);
  const unsigned r = spec.r();
  const unsigned m = spec.m();
  if (2 * r + 2 > m) return {Gf2Matrix(0, std::size_t{1} << m), true};
  return {evaluation_matrix(monomials(m, r + 1, m - r - 1), m, max_m), false};
}

ClassicalCodeParams rm_params(const RmSpec& spec) {
  return ClassicalCodeParams::make(pow2(spec.m()), binomial_sum(spec.m(), 0, spec.r()),
                                   pow2(spec.m() - spec.r()), DistanceKind::exact,
                                   ParamSource::rm_closed_form);
}

std::size_t min_distance_bruteforce(const Gf2Matrix& generator, std::uint64_t cap) {
  const std::size_t k = generator.rows();
  if (k >= 63 || (std::uint64_t{1} << k) > cap) {
    throw CapacityError("brute-force distance needs 2^" + std::to_string(k) +
                        " codewords, above the cap of " + std::to_string(cap) +
                        " (raise it to at least 2^" + std::to_string(k) + ")");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  BitVector word(generator.cols());
  auto words = word.words();
  const std::uint64_t count = std::uint64_t{1} << k;
  // Gray-code walk: step i flips generator row ctz(i).
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto row = generator.row(static_cast<std::size_t>(std::countr_zero(i)));
    for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= row[w];
    const std::size_t weight = word.weight();
    if (weight != 0 && weight < best) best = weight;
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw ValidationError("code has no nonzero codewords; distance is undefined");
  }
  return best;
}

}  // namespace eatpc
