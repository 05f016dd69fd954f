#include "eatpc/stabilizer.hpp"

#include <stdexcept>

#include "eatpc/error.hpp"

namespace eatpc {

std::size_t ebit_count(const Gf2Matrix& h) { return gfrank(gram(h)); }

BigInt ebit_count_rm_closed_form(const RmSpec& spec) {
  const long long r = spec.r();
  const long long m = spec.m();
  return binomial_sum(spec.m(), r + 1, m - r - 1);
}

Gf2Matrix css_check_matrix(const Gf2Matrix& h1, const Gf2Matrix& h2) {
  if (h1.cols() != h2.cols()) {
    throw ValidationError("css_check_matrix: X checks have " + std::to_string(h1.cols()) +
                          " columns, Z checks have " + std::to_string(h2.cols()));
  }
  const std::size_t n = h1.cols();
  return vstack(hstack(h1, Gf2Matrix(h1.rows(), n)), hstack(Gf2Matrix(h2.rows(), n), h2));
}

SgsResult symplectic_gram_schmidt(const std::vector<SymplecticVector>& generators) {
  const std::size_t count = generators.size();
  for (const SymplecticVector& g : generators) {
    if (g.n() != generators.front().n()) {
      throw ValidationError("symplectic_gram_schmidt: generators act on different qubit counts");
    }
  }

  std::vector<SymplecticVector> work = generators;
  // Transpose of the map from working vectors back to the inputs. Adding
  // working row g into row h adds row h into row g here.
  Gf2Matrix back_t = Gf2Matrix::identity(count);
  std::vector<bool> done(count, false);

  SgsResult result;
  for (std::size_t i = 0; i < count; ++i) {
    if (done[i]) continue;
    done[i] = true;

    std::size_t partner = count;
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!done[j] && symplectic_product(work[i], work[j])) {
        partner = j;
        break;
      }
    }
    if (partner == count) {
      result.isotropic_rows.push_back(i);
      continue;
    }
    done[partner] = true;
    result.pair_rows.emplace_back(i, partner);

    for (std::size_t h = 0; h < count; ++h) {
      if (done[h]) continue;
      const bool with_second = symplectic_product(work[h], work[partner]);
      const bool with_first = symplectic_product(work[h], work[i]);
      if (with_second) {
        work[h] ^= work[i];
        back_t.add_row(i, h);
      }
      if (with_first) {
        work[h] ^= work[partner];
        back_t.add_row(partner, h);
      }
    }
  }

  const std::size_t ebits = result.pair_rows.size();
  Gf2Matrix ext_x(count, ebits);
  Gf2Matrix ext_z(count, ebits);
  for (std::size_t p = 0; p < ebits; ++p) {
    const auto [first, second] = result.pair_rows[p];
    result.pairs.emplace_back(work[first], work[second]);
    ext_x.set(first, p);
    ext_z.set(second, p);
  }
  for (std::size_t i : result.isotropic_rows) result.isotropic.push_back(work[i]);

  const Gf2Matrix back = transpose(back_t);
  result.h_ex = multiply(back, ext_x);
  result.h_ez = multiply(back, ext_z);
  return result;
}

SgsResult symplectic_gram_schmidt(const Gf2Matrix& generators) {
  return symplectic_gram_schmidt(to_symplectic(generators));
}

ExtendedCheck extended_check_matrix(const Gf2Matrix& h) {
  const std::size_t rho = h.rows();
  const std::size_t n = h.cols();
  const SgsResult sgs = symplectic_gram_schmidt(css_check_matrix(h, h));

  ExtendedCheck out;
  out.h = h;
  out.h_ex = sgs.h_ex.slice_rows(0, rho);
  out.h_ez = sgs.h_ez.slice_rows(rho, 2 * rho);
  // X rows only ever absorb X rows, so the cross blocks stay empty.
  if (!sgs.h_ez.slice_rows(0, rho).is_zero() || !sgs.h_ex.slice_rows(rho, 2 * rho).is_zero()) {
    throw std::logic_error("extended_check_matrix: CSS structure lost during Gram-Schmidt");
  }

  const std::size_t width = n + out.n_e();
  out.matrix = vstack(hstack(hstack(h, out.h_ex), Gf2Matrix(rho, width)),
                      hstack(Gf2Matrix(rho, width), hstack(h, out.h_ez)));
  return out;
}

}  // namespace eatpc
