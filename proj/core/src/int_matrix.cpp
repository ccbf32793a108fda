#include "dsrg/int_matrix.hpp"

namespace dsrg {

namespace {

// Int matrices are bounded by the same bit budget as binary ones; each
// entry occupies 32 bits.
void check_int_capacity(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be >= 1");
  }
  const std::uint64_t limit = capacity_limit_bits() / 32;
  if (cols > limit / rows) {
    throw CapacityError("integer matrix of " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds the capacity limit");
  }
}

std::uint32_t narrow(std::uint64_t v) {
  if (v > 0xFFFFFFFFull) {
    throw OverflowError("integer matrix entry exceeds 32 bits");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) {
  check_int_capacity(rows, cols);
  rows_ = rows;
  cols_ = cols;
  entries_.assign(rows * cols, 0);
}

IntMatrix to_int(const BinaryMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    a.for_each_set_in_row(i, [&](std::size_t j) { out.set(i, j, 1); });
  }
  return out;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("entrywise sum needs equal shapes");
  }
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, narrow(std::uint64_t{a.at(i, j)} + b.at(i, j)));
    }
  }
  return out;
}

IntMatrix scaled(const IntMatrix& a, std::uint32_t c) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, narrow(std::uint64_t{a.at(i, j)} * c));
    }
  }
  return out;
}

bool is_constant(const IntMatrix& a, std::uint32_t value) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != value) return false;
    }
  }
  return true;
}

}  // namespace dsrg
