#pragma once

#include "dsrg/bit_matrix.hpp"
#include "dsrg/int_matrix.hpp"

namespace dsrg {

/// Kronecker product. Entry ((i1*rows(b)+i2), (j1*cols(b)+j2)) equals
/// a(i1,j1) * b(i2,j2); satisfies the mixed-product law with mul.
BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Splits the rows of x into `blocks` equal slices and returns slice
/// `block_index` (the first by default). Throws DivisibilityError when
/// rows(x) is not a multiple of blocks.
BinaryMatrix row_block(const BinaryMatrix& x, std::size_t blocks,
                       std::size_t block_index = 0);

/// Exact integer product. Binary inputs go through the bitwise AND +
/// popcount kernel; integer inputs through a checked triple loop.
IntMatrix mul(const BinaryMatrix& a, const BinaryMatrix& b);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mul(const BinaryMatrix& a, const IntMatrix& b);
IntMatrix mul(const IntMatrix& a, const BinaryMatrix& b);

/// Streaming check that a*b + scale*c equals constant*J without
/// materializing the product. c may be null (plain product check). When
/// witness is non-null the first mismatch is stored as {i, j, got}.
struct EntryMismatch {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t got = 0;
};
bool product_affine_equals(const BinaryMatrix& a, const BinaryMatrix& b,
                           std::uint64_t scale, const BinaryMatrix* c,
                           std::uint64_t constant,
                           EntryMismatch* witness = nullptr);

}  // namespace dsrg
