#pragma once

// Entanglement-assisted CSS construction.
//
// A classical parity check H that is not self-orthogonal yields CSS
// generators that fail to commute. Symplectic Gram-Schmidt splits them into
// anticommuting pairs and a commuting remainder; each pair is repaired with
// one ebit, an extra qubit on the receiver side that carries X for the first
// pair member and Z for the second.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eatpc/code_params.hpp"
#include "eatpc/gf2.hpp"
#include "eatpc/reed_muller.hpp"

namespace eatpc {

/// gfrank(h h^T): ebits needed by the EA CSS code built from h.
std::size_t ebit_count(const Gf2Matrix& h);

/// sum_{i=r+1}^{m-r-1} C(m, i), zero when the range is empty.
BigInt ebit_count_rm_closed_form(const RmSpec& spec);

/// [h1 0; 0 h2] over 2n columns in [x | z] layout. The first h1.rows()
/// rows are X-type, the rest Z-type.
Gf2Matrix css_check_matrix(const Gf2Matrix& h1, const Gf2Matrix& h2);

struct SgsResult {
  /// Anticommuting pairs in discovery order; pair p uses ebit p.
  std::vector<std::pair<SymplecticVector, SymplecticVector>> pairs;
  /// Input row of the generator each pair member was derived from.
  std::vector<std::pair<std::size_t, std::size_t>> pair_rows;
  std::vector<SymplecticVector> isotropic;
  std::vector<std::size_t> isotropic_rows;
  /// Extension bits for every input generator (rows) over the ebits
  /// (columns): h_ex holds the X part, h_ez the Z part. Appending them to
  /// the inputs makes all generators commute.
  Gf2Matrix h_ex;
  Gf2Matrix h_ez;

  std::size_t n_e() const { return pairs.size(); }
};

/// Processes generators in input order. The first unprocessed generator g is
/// paired with the first later unprocessed g' anticommuting with it, and
/// every other unprocessed h becomes h + <h,g'> g + <h,g> g'. A generator
/// with no partner is isotropic.
SgsResult symplectic_gram_schmidt(const std::vector<SymplecticVector>& generators);
/// Rows of a 2n-column [x | z] matrix.
SgsResult symplectic_gram_schmidt(const Gf2Matrix& generators);

struct ExtendedCheck {
  Gf2Matrix h;
  /// rho x n_e, X extension of the X-type rows.
  Gf2Matrix h_ex;
  /// rho x n_e, Z extension of the Z-type rows.
  Gf2Matrix h_ez;
  /// [h h_ex | 0 0; 0 0 | h h_ez], 2 rho rows over 2 (n + n_e) columns.
  Gf2Matrix matrix;

  std::size_t n_e() const { return h_ex.cols(); }
  std::size_t qubits() const { return h.cols() + h_ex.cols(); }
};

/// Assembles the entanglement-extended CSS check matrix of h. Every pair of
/// rows of the result commutes over n + n_e qubits.
ExtendedCheck extended_check_matrix(const Gf2Matrix& h);

/// [[n, n - 2 rho + n_e, >= d; n_e]]. Throws ValidationError when the
/// logical count would be negative.
EaCodeParams ea_css_params(const ClassicalCodeParams& c, const BigInt& n_e);

/// EA CSS parameters of RM(r, m) with n_e from the closed form.
EaCodeParams ea_rm_params(const RmSpec& spec);

/// [[n1 n2, n1 n2 - 2 rho1 rho2 + ne1 ne2, >= min(d1,d2); ne1 ne2]]
EaCodeParams ea_tpc_params(const ClassicalCodeParams& c1, const ClassicalCodeParams& c2,
                           const BigInt& ne1, const BigInt& ne2);

struct EaRmTpc {
  ClassicalCodeParams component1;
  ClassicalCodeParams component2;
  ClassicalCodeParams classical;
  EaCodeParams ea;
  /// Direct gfrank(H H^T) of the Kronecker parity check, when the length is
  /// within the audit cap.
  std::optional<std::size_t> direct_n_e;
};

/// EA TPC of RM(r1,m1) and RM(r2,m2); n_e by the product of component ebit
/// counts, audited against a direct rank computation when n1 n2 <= audit_cap.
EaRmTpc ea_rm_tpc(const RmSpec& s1, const RmSpec& s2,
                  std::uint64_t audit_cap = Limits::kDirectEbitLength);

}  // namespace eatpc
