#include "eatpc/polynomial.hpp"

#include <bit>
#include <cctype>

#include "eatpc/error.hpp"

namespace eatpc {
namespace {

void check_variable_count(unsigned m) {
  if (m > kMaxMonomialVariables) {
    throw ValidationError("monomials support at most " + std::to_string(kMaxMonomialVariables) +
                          " variables, got m = " + std::to_string(m));
  }
}

std::uint64_t index_bit(unsigned m, unsigned index) {
  if (index < 1 || index > m) {
    throw ValidationError("variable index x" + std::to_string(index) + " outside 1.." +
                          std::to_string(m));
  }
  return std::uint64_t{1} << (index - 1);
}

}  // namespace

Monomial::Monomial(unsigned m) : Monomial(m, std::uint64_t{0}, true) {}

Monomial::Monomial(unsigned m, std::uint64_t mask, bool) : m_(m), mask_(mask) {
  check_variable_count(m);
}

Monomial::Monomial(unsigned m, std::initializer_list<unsigned> indices) : Monomial(m) {
  for (unsigned i : indices) mask_ |= index_bit(m, i);
}

Monomial::Monomial(unsigned m, const std::vector<unsigned>& indices) : Monomial(m) {
  for (unsigned i : indices) mask_ |= index_bit(m, i);
}

Monomial Monomial::from_mask(unsigned m, std::uint64_t mask) {
  check_variable_count(m);
  if (m < 64 && (mask >> m) != 0) {
    throw ValidationError("monomial mask has variables beyond x" + std::to_string(m));
  }
  return Monomial(m, mask, true);
}

unsigned Monomial::degree() const { return static_cast<unsigned>(std::popcount(mask_)); }

std::vector<unsigned> Monomial::indices() const {
  std::vector<unsigned> out;
  for (std::uint64_t bits = mask_; bits != 0; bits &= bits - 1) {
    out.push_back(static_cast<unsigned>(std::countr_zero(bits)) + 1);
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.m_ != m_) {
    throw ValidationError("monomial variable counts differ: " + std::to_string(m_) + " vs " +
                          std::to_string(other.m_));
  }
  return Monomial(m_, mask_ | other.mask_, true);
}

std::string Monomial::to_string() const {
  if (mask_ == 0) return "1";
  std::string s;
  for (unsigned i : indices()) {
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
  }
  return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // Same size sets: the one holding the smallest differing index comes first.
  const std::uint64_t lowest = (a.mask_ ^ b.mask_) & (~(a.mask_ ^ b.mask_) + 1);
  return (a.mask_ & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Polynomial::Polynomial(unsigned m) : m_(m) { check_variable_count(m); }

Polynomial::Polynomial(unsigned m, std::initializer_list<Monomial> terms) : Polynomial(m) {
  for (const Monomial& t : terms) add_term(t);
}

Polynomial Polynomial::parse(std::string_view text, unsigned m) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ValidationError("polynomial text is empty");

  Polynomial p(m);
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find('+', pos);
    const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term.empty()) throw ValidationError("polynomial '" + std::string(text) + "' has an empty term");

    bool zero = false;
    std::uint64_t mask = 0;
    std::size_t i = 0;
    while (i < term.size()) {
      const char ch = term[i];
      if (ch == '*') {
        if (i == 0 || i + 1 == term.size() || term[i + 1] == '*') {
          throw ValidationError("misplaced '*' in term '" + term + "'");
        }
        ++i;
      } else if (ch == '0' || ch == '1') {
        zero = zero || ch == '0';
        ++i;
      } else if (ch == 'x' || ch == 'X') {
        std::size_t j = i + 1;
        while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
        if (j == i + 1) throw ValidationError("variable without index in term '" + term + "'");
        const unsigned long index = std::stoul(term.substr(i + 1, j - i - 1));
        if (index > m) {
          throw ValidationError("variable x" + std::to_string(index) + " outside 1.." +
                                std::to_string(m));
        }
        mask |= index_bit(m, static_cast<unsigned>(index));
        i = j;
      } else {
        throw ValidationError("unexpected character '" + std::string(1, ch) + "' in polynomial '" +
                              std::string(text) + "'");
      }
    }
    if (!zero) p.add_term(Monomial::from_mask(m, mask));

    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return p;
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->degree(); }

void Polynomial::add_term(const Monomial& term) {
  if (term.m() != m_) {
    throw ValidationError("monomial over " + std::to_string(term.m()) +
                          " variables added to polynomial over " + std::to_string(m_));
  }
  if (auto it = terms_.find(term); it != terms_.end()) {
    terms_.erase(it);
  } else {
    terms_.insert(term);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.m_ != m_) {
    throw ValidationError("polynomial variable counts differ: " + std::to_string(m_) + " vs " +
                          std::to_string(other.m_));
  }
  for (const Monomial& t : other.terms_) add_term(t);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.m_ != b.m_) {
    throw ValidationError("polynomial variable counts differ: " + std::to_string(a.m_) + " vs " +
                          std::to_string(b.m_));
  }
  Polynomial out(a.m_);
  for (const Monomial& s : a.terms_) {
    for (const Monomial& t : b.terms_) out.add_term(s * t);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Monomial& t : terms_) {
    if (!s.empty()) s += " + ";
    s += t.to_string();
  }
  return s;
}

}  // namespace eatpc
