#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "dsrg/bit_matrix.hpp"
#include "dsrg/errors.hpp"

namespace dsrg {

/// Dense matrix of exact nonnegative integers. Entries are 32-bit; every
/// operation accumulates in 64 bits and throws OverflowError instead of
/// wrapping. No floating point anywhere.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, std::uint32_t value) {
    entries_[i * cols_ + j] = value;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> entries_;
};

/// 0/1 entries widened to integers.
IntMatrix to_int(const BinaryMatrix& a);

/// Entrywise sum.
IntMatrix add(const IntMatrix& a, const IntMatrix& b);

/// Entrywise scalar multiple.
IntMatrix scaled(const IntMatrix& a, std::uint32_t c);

/// True iff every entry equals value.
bool is_constant(const IntMatrix& a, std::uint32_t value);

}  // namespace dsrg
