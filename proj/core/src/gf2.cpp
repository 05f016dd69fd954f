#include "eatpc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "eatpc/error.hpp"

namespace eatpc {
namespace {

// ORs the first `nbits` bits of `src` into `dst` starting at bit `offset`.
// Bits of src past nbits must be zero.
void or_bits_at(std::span<Word> dst, std::size_t offset, std::span<const Word> src,
                std::size_t nbits) {
  const std::size_t base = offset / kWordBits;
  const std::size_t shift = offset % kWordBits;
  const std::size_t n = words_for(nbits);
  for (std::size_t i = 0; i < n; ++i) {
    const Word v = src[i];
    if (v == 0) continue;
    if (shift == 0) {
      dst[base + i] |= v;
    } else {
      dst[base + i] |= v << shift;
      if (base + i + 1 < dst.size()) dst[base + i + 1] |= v >> (kWordBits - shift);
    }
  }
}

void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from = 0) {
  for (std::size_t i = from; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::string shape(const Gf2Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
  std::size_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CapacityError(std::string("kron: ") + what + " count overflows (" + std::to_string(a) +
                        " * " + std::to_string(b) + ")");
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ValidationError("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw ValidationError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                          std::to_string(other.size_));
  }
  xor_words(words_, other.words_);
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) {
    throw ValidationError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                          std::to_string(other.size_));
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word x) { return x != 0; });
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) {
    throw ValidationError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                          std::to_string(other.size_));
  }
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector BitVector::kron(const BitVector& other) const {
  BitVector out(checked_mul(size_, other.size_, "bit"));
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) or_bits_at(out.words_, i * other.size_, other.words_, other.size_);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------- Gf2Matrix

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)) {
  std::size_t total = 0;
  if (__builtin_mul_overflow(rows_, stride_, &total)) {
    throw CapacityError("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " does not fit in memory");
  }
  data_.assign(total, 0);
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::span<const std::string> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ValidationError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(cols));
    }
    m.set_row(r, BitVector::from_string(rows[r]));
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::initializer_list<std::string_view> rows,
                                  std::size_t cols) {
  std::vector<std::string> owned(rows.begin(), rows.end());
  return from_strings(std::span<const std::string>(owned), cols);
}

Gf2Matrix Gf2Matrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) {
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

BitVector Gf2Matrix::row_vector(std::size_t r) const {
  BitVector v(cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_,
              v.words().begin());
  return v;
}

void Gf2Matrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) {
    throw ValidationError("row of length " + std::to_string(v.size()) +
                          " does not fit a matrix with " + std::to_string(cols_) + " columns");
  }
  std::copy(v.words().begin(), v.words().end(),
            data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void Gf2Matrix::append_row(const BitVector& v) {
  if (v.size() != cols_) {
    throw ValidationError("row of length " + std::to_string(v.size()) +
                          " does not fit a matrix with " + std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), v.words().begin(), v.words().end());
  ++rows_;
}

Gf2Matrix Gf2Matrix::slice_rows(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw ValidationError("row slice out of range");
  Gf2Matrix out(end - begin, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(begin * stride_),
            data_.begin() + static_cast<std::ptrdiff_t>(end * stride_), out.data_.begin());
  return out;
}

Gf2Matrix Gf2Matrix::slice_cols(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_) throw ValidationError("column slice out of range");
  Gf2Matrix out(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = begin; c < end; ++c) {
      if (get(r, c)) out.set(r, c - begin);
    }
  }
  return out;
}

std::size_t Gf2Matrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (Word x : row(r)) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word x) { return x == 0; });
}

// ---------------------------------------------------------- SymplecticVector

SymplecticVector::SymplecticVector(BitVector x_part, BitVector z_part)
    : x(std::move(x_part)), z(std::move(z_part)) {
  if (x.size() != z.size()) {
    throw ValidationError("symplectic vector halves differ in length: " +
                          std::to_string(x.size()) + " vs " + std::to_string(z.size()));
  }
}

SymplecticVector& SymplecticVector::operator^=(const SymplecticVector& other) {
  x ^= other.x;
  z ^= other.z;
  return *this;
}

// ---------------------------------------------------------------- operations

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ValidationError("multiply: shape " + shape(a) + " cannot multiply shape " + shape(b));
  }
  Gf2Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    const auto in = a.row(i);
    for (std::size_t w = 0; w < in.size(); ++w) {
      Word bits = in[w];
      while (bits != 0) {
        const std::size_t j = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        xor_words(out, b.row(j));
      }
    }
  }
  return c;
}

Gf2Matrix transpose(const Gf2Matrix& a) {
  Gf2Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto in = a.row(r);
    for (std::size_t w = 0; w < in.size(); ++w) {
      Word bits = in[w];
      while (bits != 0) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        t.set(c, r);
      }
    }
  }
  return t;
}

Gf2Matrix gram(const Gf2Matrix& a) { return multiply(a, transpose(a)); }

Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix out(checked_mul(a.rows(), b.rows(), "row"), checked_mul(a.cols(), b.cols(), "column"));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.rows(); ++k) {
      auto dst = out.row(i * b.rows() + k);
      const auto src = b.row(k);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.get(i, j)) or_bits_at(dst, j * b.cols(), src, b.cols());
      }
    }
  }
  return out;
}

Gf2Matrix hstack(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.rows() != b.rows()) {
    throw ValidationError("hstack: row counts differ (" + shape(a) + " vs " + shape(b) + ")");
  }
  Gf2Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    or_bits_at(out.row(r), 0, a.row(r), a.cols());
    or_bits_at(out.row(r), a.cols(), b.row(r), b.cols());
  }
  return out;
}

Gf2Matrix vstack(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.cols()) {
    throw ValidationError("vstack: column counts differ (" + shape(a) + " vs " + shape(b) + ")");
  }
  Gf2Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) std::ranges::copy(a.row(r), out.row(r).begin());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::ranges::copy(b.row(r), out.row(a.rows() + r).begin());
  }
  return out;
}

std::size_t gfrank(const Gf2Matrix& a) {
  Gf2Matrix m = a;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const std::size_t w = col / kWordBits;
    const Word mask = Word{1} << (col % kWordBits);
    std::size_t pivot = rank;
    while (pivot < m.rows() && (m.row(pivot)[w] & mask) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    const auto prow = m.row(rank);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      auto row = m.row(r);
      if (row[w] & mask) xor_words(row, prow, w);
    }
    ++rank;
  }
  return rank;
}

RrefResult rref(const Gf2Matrix& a) {
  RrefResult out{a, {}};
  Gf2Matrix& m = out.matrix;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const std::size_t w = col / kWordBits;
    const Word mask = Word{1} << (col % kWordBits);
    std::size_t pivot = rank;
    while (pivot < m.rows() && (m.row(pivot)[w] & mask) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    const auto prow = m.row(rank);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      auto row = m.row(r);
      if (row[w] & mask) xor_words(row, prow, w);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  return out;
}

Gf2Matrix kernel_basis(const Gf2Matrix& a) {
  const RrefResult reduced = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : reduced.pivots) is_pivot[p] = true;

  Gf2Matrix basis(a.cols() - reduced.pivots.size(), a.cols());
  std::size_t out_row = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.set(out_row, f);
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
      if (reduced.matrix.get(i, f)) basis.set(out_row, reduced.pivots[i]);
    }
    ++out_row;
  }
  return basis;
}

bool row_space_contains(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.cols()) {
    throw ValidationError("row_space_contains: widths differ (" + shape(a) + " vs " + shape(b) +
                          ")");
  }
  const RrefResult reduced = rref(a);
  std::vector<Word> scratch(b.stride());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::ranges::copy(b.row(r), scratch.begin());
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
      const std::size_t p = reduced.pivots[i];
      if ((scratch[p / kWordBits] >> (p % kWordBits)) & 1U) {
        xor_words(scratch, reduced.matrix.row(i));
      }
    }
    if (std::ranges::any_of(scratch, [](Word x) { return x != 0; })) return false;
  }
  return true;
}

Gf2Matrix inverse(const Gf2Matrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("inverse: matrix " + shape(a) + " is not square");
  const std::size_t n = a.rows();
  const RrefResult reduced = rref(hstack(a, Gf2Matrix::identity(n)));
  if (reduced.pivots.size() < n || (n > 0 && reduced.pivots[n - 1] != n - 1)) {
    throw ValidationError("inverse: matrix is singular");
  }
  return reduced.matrix.slice_cols(n, 2 * n);
}

bool symplectic_product(const SymplecticVector& u, const SymplecticVector& v) {
  if (u.n() != v.n()) {
    throw ValidationError("symplectic_product: qubit counts differ (" + std::to_string(u.n()) +
                          " vs " + std::to_string(v.n()) + ")");
  }
  return u.x.dot(v.z) != u.z.dot(v.x);
}

std::vector<SymplecticVector> to_symplectic(const Gf2Matrix& m) {
  if (m.cols() % 2 != 0) {
    throw ValidationError("symplectic matrix needs an even column count, got " +
                          std::to_string(m.cols()));
  }
  const std::size_t n = m.cols() / 2;
  std::vector<SymplecticVector> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SymplecticVector v(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (m.get(r, c)) v.x.set(c);
      if (m.get(r, n + c)) v.z.set(c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Gf2Matrix from_symplectic(std::span<const SymplecticVector> vectors, std::size_t n) {
  if (!vectors.empty()) n = vectors.front().n();
  Gf2Matrix m(vectors.size(), 2 * n);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].n() != n) {
      throw ValidationError("from_symplectic: vector " + std::to_string(r) + " has " +
                            std::to_string(vectors[r].n()) + " qubits, expected " +
                            std::to_string(n));
    }
    or_bits_at(m.row(r), 0, vectors[r].x.words(), n);
    or_bits_at(m.row(r), n, vectors[r].z.words(), n);
  }
  return m;
}

}  // namespace eatpc
