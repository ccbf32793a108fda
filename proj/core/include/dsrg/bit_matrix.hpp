#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dsrg/errors.hpp"

namespace dsrg {

/// Global size ceiling for bit matrices, in total bits. Construction of
/// anything larger throws CapacityError. Default: 2^31 bits.
std::uint64_t capacity_limit_bits();
void set_capacity_limit_bits(std::uint64_t bits);

/// Packed bit vector. Bit i lives in word i/64 at position 63 - (i % 64)
/// (most significant bit first); padding bits past size() are zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  std::size_t popcount() const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense 0/1 matrix with bit-packed rows. Each row occupies a whole
/// number of 64-bit words; within a word the leftmost column maps to the
/// most significant bit, and padding bits past cols() are kept zero, so
/// equality and row popcounts work directly on the words.
///
/// Values are immutable by convention once built: every operation in the
/// library takes const references and returns fresh matrices, which makes
/// shared matrices safe to use from any number of threads.
class BinaryMatrix {
 public:
  /// Zero-filled rows x cols matrix. Dimensions must be >= 1.
  BinaryMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  std::span<const std::uint64_t> row_words(std::size_t i) const {
    return {bits_.data() + i * words_per_row_, words_per_row_};
  }
  std::span<std::uint64_t> row_words(std::size_t i) {
    return {bits_.data() + i * words_per_row_, words_per_row_};
  }

  /// Number of ones in row i / column j.
  std::size_t row_sum(std::size_t i) const;
  std::size_t col_sum(std::size_t j) const;

  /// Calls fn(j) for every set column j of row i, in increasing order.
  template <typename Fn>
  void for_each_set_in_row(std::size_t i, Fn&& fn) const {
    auto row = row_words(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t word = row[w];
      while (word != 0) {
        int lead = std::countl_zero(word);
        fn(w * 64 + static_cast<std::size_t>(lead));
        word &= ~(std::uint64_t{1} << (63 - lead));
      }
    }
  }

  /// Entrywise equality; padding is zeroed so this is a word compare.
  bool operator==(const BinaryMatrix& other) const;

  /// Mask with ones in the valid bit positions of the last word of a row.
  std::uint64_t last_word_mask() const { return last_word_mask_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::uint64_t last_word_mask_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Identity matrix of order m.
BinaryMatrix identity(std::size_t m);

/// m x l all-ones matrix.
BinaryMatrix ones(std::size_t m, std::size_t l);

/// Exchange matrix of order m: ones exactly on the antidiagonal.
BinaryMatrix exchange(std::size_t m);

/// Column j of a as a bit vector of length a.rows().
BitVector column(const BinaryMatrix& a, std::size_t j);

/// Transposed copy.
BinaryMatrix transpose(const BinaryMatrix& a);

/// popcount(x AND y) over two equally sized word spans.
std::size_t and_popcount(std::span<const std::uint64_t> x,
                         std::span<const std::uint64_t> y);

/// ORs src (a row of src_cols valid bits) into dest starting at column
/// offset_bits. Caller guarantees offset_bits + src_cols fits dest.
void or_shifted_row(std::span<std::uint64_t> dest,
                    std::span<const std::uint64_t> src, std::size_t src_cols,
                    std::size_t offset_bits);

/// Parses rows like {"010", "101"} into a matrix; test and fixture helper.
BinaryMatrix matrix_from_strings(const std::vector<std::string>& rows);

}  // namespace dsrg
