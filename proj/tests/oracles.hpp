#pragma once

// Reference implementations that share no code with the library: plain
// int arrays, naive elimination, Pascal's triangle. Tests compare the
// bit-packed fast paths against these.

#include <cstdint>
#include <string>
#include <vector>

#include "eatpc/gf2.hpp"

namespace oracle {

using Bits = std::vector<int>;
using Matrix = std::vector<Bits>;

inline Bits kron(const Bits& a, const Bits& b) {
  Bits out;
  for (int x : a) {
    for (int y : b) out.push_back(x & y);
  }
  return out;
}

// Eval of prod_{i in vars} x_i over m variables: x_1 is the outermost
// Kronecker factor, [0 1] for a present variable and [1 1] otherwise.
inline Bits eval_monomial(unsigned m, const std::vector<unsigned>& vars) {
  Bits out{1};
  for (unsigned i = 1; i <= m; ++i) {
    bool present = false;
    for (unsigned v : vars) present = present || v == i;
    out = kron(out, present ? Bits{0, 1} : Bits{1, 1});
  }
  return out;
}

inline std::string to_string(const Bits& b) {
  std::string s;
  for (int x : b) s += x ? '1' : '0';
  return s;
}

inline Matrix from_library(const eatpc::Gf2Matrix& a) {
  Matrix out(a.rows(), Bits(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a.get(r, c) ? 1 : 0;
  }
  return out;
}

inline std::size_t rank(Matrix a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) a[r][k] ^= a[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix out(a.size(), Bits(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < inner; ++k) s ^= a[i][k] & b[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

inline Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix out(a[0].size(), Bits(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

// C(n, k) by Pascal's triangle; exact for n <= 62.
inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::vector<std::vector<std::uint64_t>> t(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return k > n ? 0 : t[n][k];
}

inline std::uint64_t binomial_sum(unsigned m, int lo, int hi) {
  std::uint64_t s = 0;
  for (int i = lo < 0 ? 0 : lo; i <= hi && i <= static_cast<int>(m); ++i) s += binomial(m, static_cast<unsigned>(i));
  return s;
}

// Minimum nonzero weight over all combinations of generator rows.
inline std::size_t min_distance(const Matrix& g) {
  const std::size_t k = g.size();
  const std::size_t n = k ? g[0].size() : 0;
  std::size_t best = n + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Bits word(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) {
        for (std::size_t j = 0; j < n; ++j) word[j] ^= g[i][j];
      }
    }
    std::size_t w = 0;
    for (int x : word) w += static_cast<std::size_t>(x);
    if (w > 0 && w < best) best = w;
  }
  return best;
}

}  // namespace oracle
