#pragma once

// Boolean polynomials over GF(2) in m variables x1..xm. Coefficients are
// binary, so a polynomial is just the set of monomials present, and
// x_i^2 = x_i makes every monomial a subset of {1..m}.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace eatpc {

inline constexpr unsigned kMaxMonomialVariables = 64;

class Monomial {
 public:
  /// The constant monomial 1 over m variables.
  explicit Monomial(unsigned m);
  /// x_A for the 1-based index set A. Duplicates collapse.
  Monomial(unsigned m, std::initializer_list<unsigned> indices);
  Monomial(unsigned m, const std::vector<unsigned>& indices);
  static Monomial from_mask(unsigned m, std::uint64_t mask);

  unsigned m() const { return m_; }
  /// Bit i-1 set iff x_i divides the monomial.
  std::uint64_t mask() const { return mask_; }
  unsigned degree() const;
  std::vector<unsigned> indices() const;
  bool contains(unsigned index) const { return (mask_ >> (index - 1)) & 1U; }

  Monomial operator*(const Monomial& other) const;

  /// "1", "x1", "x1*x3"
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Degree first, then lexicographic on sorted index sets.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Monomial(unsigned m, std::uint64_t mask, bool);

  unsigned m_;
  std::uint64_t mask_;
};

class Polynomial {
 public:
  /// The zero polynomial.
  explicit Polynomial(unsigned m);
  Polynomial(unsigned m, std::initializer_list<Monomial> terms);

  /// Parses "1 + x1*x2 + x3". Whitespace is ignored, '*' is optional
  /// ("x1x2"), "0" is the zero polynomial, repeated terms cancel.
  static Polynomial parse(std::string_view text, unsigned m);

  unsigned m() const { return m_; }
  const std::set<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  /// Toggles the monomial (GF(2) addition of a single term).
  void add_term(const Monomial& term);

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  unsigned m_;
  std::set<Monomial> terms_;
};

}  // namespace eatpc
