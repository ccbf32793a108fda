#include "dsrg/bit_matrix.hpp"

#include <atomic>
#include <bit>
#include <cassert>

namespace dsrg {

namespace {

std::atomic<std::uint64_t> g_capacity_bits{std::uint64_t{1} << 31};

void check_capacity(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be >= 1");
  }
  const std::uint64_t limit = g_capacity_bits.load();
  if (cols > limit / rows) {
    throw CapacityError("matrix of " + std::to_string(rows) + "x" +
                        std::to_string(cols) +
                        " bits exceeds the capacity limit of " +
                        std::to_string(limit) + " bits");
  }
}

}  // namespace

std::uint64_t capacity_limit_bits() { return g_capacity_bits.load(); }

void set_capacity_limit_bits(std::uint64_t bits) {
  g_capacity_bits.store(bits == 0 ? 1 : bits);
}

BitVector::BitVector(std::size_t size)
    : size_(size), words_((size + 63) / 64, 0) {}

bool BitVector::get(std::size_t i) const {
  assert(i < size_);
  return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
  assert(i < size_);
  const std::uint64_t mask = std::uint64_t{1} << (63 - (i & 63));
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) {
  check_capacity(rows, cols);
  rows_ = rows;
  cols_ = cols;
  words_per_row_ = (cols + 63) / 64;
  const std::size_t rem = cols & 63;
  last_word_mask_ = rem == 0 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - rem);
  bits_.assign(rows_ * words_per_row_, 0);
}

bool BinaryMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range for " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
  return (bits_[i * words_per_row_ + (j >> 6)] >> (63 - (j & 63))) & 1u;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) {
    throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range for " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
  const std::uint64_t mask = std::uint64_t{1} << (63 - (j & 63));
  std::uint64_t& word = bits_[i * words_per_row_ + (j >> 6)];
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

std::size_t BinaryMatrix::row_sum(std::size_t i) const {
  if (i >= rows_) throw IndexError("row index out of range");
  std::size_t total = 0;
  for (std::uint64_t w : row_words(i)) total += std::popcount(w);
  return total;
}

std::size_t BinaryMatrix::col_sum(std::size_t j) const {
  if (j >= cols_) throw IndexError("column index out of range");
  const std::size_t word = j >> 6;
  const std::uint64_t mask = std::uint64_t{1} << (63 - (j & 63));
  std::size_t total = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    total += (bits_[i * words_per_row_ + word] & mask) != 0;
  }
  return total;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

BinaryMatrix identity(std::size_t m) {
  BinaryMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) a.set(i, i, true);
  return a;
}

BinaryMatrix ones(std::size_t m, std::size_t l) {
  BinaryMatrix a(m, l);
  const std::size_t wpr = a.words_per_row();
  for (std::size_t i = 0; i < m; ++i) {
    auto row = a.row_words(i);
    for (std::size_t w = 0; w + 1 < wpr; ++w) row[w] = ~std::uint64_t{0};
    row[wpr - 1] = a.last_word_mask();
  }
  return a;
}

BinaryMatrix exchange(std::size_t m) {
  BinaryMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) a.set(i, m - 1 - i, true);
  return a;
}

BitVector column(const BinaryMatrix& a, std::size_t j) {
  if (j >= a.cols()) throw IndexError("column index out of range");
  BitVector v(a.rows());
  const std::size_t word = j >> 6;
  const std::uint64_t mask = std::uint64_t{1} << (63 - (j & 63));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.row_words(i)[word] & mask) v.set(i, true);
  }
  return v;
}

BinaryMatrix transpose(const BinaryMatrix& a) {
  BinaryMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    a.for_each_set_in_row(i, [&](std::size_t j) { out.set(j, i, true); });
  }
  return out;
}

std::size_t and_popcount(std::span<const std::uint64_t> x,
                         std::span<const std::uint64_t> y) {
  assert(x.size() == y.size());
  std::size_t total = 0;
  for (std::size_t w = 0; w < x.size(); ++w) {
    total += std::popcount(x[w] & y[w]);
  }
  return total;
}

void or_shifted_row(std::span<std::uint64_t> dest,
                    std::span<const std::uint64_t> src, std::size_t src_cols,
                    std::size_t offset_bits) {
  const std::size_t src_words = (src_cols + 63) / 64;
  for (std::size_t w = 0; w < src_words; ++w) {
    const std::uint64_t word = src[w];
    if (word == 0) continue;
    const std::size_t bitpos = offset_bits + w * 64;
    const std::size_t di = bitpos >> 6;
    const unsigned shift = bitpos & 63;
    dest[di] |= word >> shift;
    if (shift != 0 && di + 1 < dest.size()) {
      dest[di + 1] |= word << (64 - shift);
    }
  }
}

BinaryMatrix matrix_from_strings(const std::vector<std::string>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw DimensionError("matrix dimensions must be >= 1");
  }
  BinaryMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) {
      throw DimensionError("ragged row in matrix literal");
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw ParseError("matrix literal entry must be 0 or 1");
      if (c == '1') a.set(i, j, true);
    }
  }
  return a;
}

}  // namespace dsrg
