#pragma once

// Dense linear algebra over GF(2) with rows bit-packed into 64-bit words.
//
// Bit j of a row lives in word j / 64 at bit position j % 64. Padding bits
// past the logical column count are kept at zero by every mutating
// operation, so word-wise comparisons and popcounts are exact.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eatpc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  std::size_t weight() const;
  bool any() const;
  /// Parity of the bitwise AND, i.e. the GF(2) inner product.
  bool dot(const BitVector& other) const;

  /// Kronecker product: block i equals get(i) * other.
  BitVector kron(const BitVector& other) const;

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  /// Rows given as '0'/'1' strings of equal length. `cols` is only consulted
  /// when the list is empty.
  static Gf2Matrix from_strings(std::span<const std::string> rows, std::size_t cols = 0);
  static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows, std::size_t cols = 0);
  static Gf2Matrix from_rows(std::span<const BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  /// row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  BitVector row_vector(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  void append_row(const BitVector& v);

  /// Rows [begin, end) as a new matrix.
  Gf2Matrix slice_rows(std::size_t begin, std::size_t end) const;
  /// Columns [begin, end) as a new matrix.
  Gf2Matrix slice_cols(std::size_t begin, std::size_t end) const;

  std::size_t row_weight(std::size_t r) const;
  bool is_zero() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Pauli operator in binary form: x_part and z_part over n qubits.
struct SymplecticVector {
  BitVector x;
  BitVector z;

  SymplecticVector() = default;
  explicit SymplecticVector(std::size_t n) : x(n), z(n) {}
  SymplecticVector(BitVector x_part, BitVector z_part);

  std::size_t n() const { return x.size(); }
  bool is_zero() const { return !x.any() && !z.any(); }

  SymplecticVector& operator^=(const SymplecticVector& other);

  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;
};

struct RrefResult {
  Gf2Matrix matrix;
  std::vector<std::size_t> pivots;
};

/// a * b over GF(2). Throws ValidationError when a.cols() != b.rows().
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix transpose(const Gf2Matrix& a);
/// a * a^T
Gf2Matrix gram(const Gf2Matrix& a);
/// Throws CapacityError if the result dimensions overflow.
Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix hstack(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix vstack(const Gf2Matrix& a, const Gf2Matrix& b);

std::size_t gfrank(const Gf2Matrix& a);
/// Gauss-Jordan with first-nonzero-column pivoting; pivots strictly increase.
RrefResult rref(const Gf2Matrix& a);
/// Rows form a basis of {v : a v^T = 0}, one per free column in column order.
Gf2Matrix kernel_basis(const Gf2Matrix& a);
/// True iff every row of b lies in the row space of a.
bool row_space_contains(const Gf2Matrix& a, const Gf2Matrix& b);
/// Inverse of a square matrix; throws ValidationError if singular.
Gf2Matrix inverse(const Gf2Matrix& a);

bool symplectic_product(const SymplecticVector& u, const SymplecticVector& v);

/// Rows of a 2n-column matrix laid out as [x | z].
std::vector<SymplecticVector> to_symplectic(const Gf2Matrix& m);
/// Inverse of to_symplectic; `n` is used only when `vectors` is empty.
Gf2Matrix from_symplectic(std::span<const SymplecticVector> vectors, std::size_t n = 0);

}  // namespace eatpc
