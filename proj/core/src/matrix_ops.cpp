#include "dsrg/matrix_ops.hpp"

#include <algorithm>
#include <mutex>

#include "dsrg/threading.hpp"

namespace dsrg {

BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b) {
  BinaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const std::size_t cb = b.cols();
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
      auto dest = out.row_words(i1 * b.rows() + i2);
      auto src = b.row_words(i2);
      a.for_each_set_in_row(i1, [&](std::size_t j1) {
        or_shifted_row(dest, src, cb, j1 * cb);
      });
    }
  }
  return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const std::uint64_t f = a.at(i1, j1);
      if (f == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const std::uint64_t v = f * b.at(i2, j2);
          if (v > 0xFFFFFFFFull) {
            throw OverflowError("Kronecker product entry exceeds 32 bits");
          }
          out.set(i1 * b.rows() + i2, j1 * b.cols() + j2,
                  static_cast<std::uint32_t>(v));
        }
      }
    }
  }
  return out;
}

BinaryMatrix row_block(const BinaryMatrix& x, std::size_t blocks,
                       std::size_t block_index) {
  if (blocks == 0 || x.rows() % blocks != 0) {
    throw DivisibilityError("row count " + std::to_string(x.rows()) +
                            " not divisible into " + std::to_string(blocks) +
                            " blocks");
  }
  if (block_index >= blocks) {
    throw IndexError("block index out of range");
  }
  const std::size_t block_rows = x.rows() / blocks;
  BinaryMatrix out(block_rows, x.cols());
  const std::size_t base = block_index * block_rows;
  for (std::size_t i = 0; i < block_rows; ++i) {
    auto src = x.row_words(base + i);
    auto dst = out.row_words(i);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return out;
}

IntMatrix mul(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("product needs cols(a) == rows(b)");
  }
  IntMatrix out(a.rows(), b.cols());
  const BinaryMatrix bt = transpose(b);
  parallel_for_rows(a.rows(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto row = a.row_words(i);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j,
                static_cast<std::uint32_t>(and_popcount(row, bt.row_words(j))));
      }
    }
  });
  return out;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("product needs cols(a) == rows(b)");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < a.cols(); ++w) {
        acc += std::uint64_t{a.at(i, w)} * b.at(w, j);
      }
      if (acc > 0xFFFFFFFFull) {
        throw OverflowError("product entry exceeds 32 bits");
      }
      out.set(i, j, static_cast<std::uint32_t>(acc));
    }
  }
  return out;
}

IntMatrix mul(const BinaryMatrix& a, const IntMatrix& b) {
  return mul(to_int(a), b);
}

IntMatrix mul(const IntMatrix& a, const BinaryMatrix& b) {
  return mul(a, to_int(b));
}

bool product_affine_equals(const BinaryMatrix& a, const BinaryMatrix& b,
                           std::uint64_t scale, const BinaryMatrix* c,
                           std::uint64_t constant, EntryMismatch* witness) {
  if (a.cols() != b.rows()) {
    throw DimensionError("product needs cols(a) == rows(b)");
  }
  if (c != nullptr && (c->rows() != a.rows() || c->cols() != b.cols())) {
    throw DimensionError("affine term shape must match the product");
  }
  const BinaryMatrix bt = transpose(b);
  std::mutex mtx;
  bool ok = true;
  EntryMismatch first;
  parallel_for_rows(a.rows(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto row = a.row_words(i);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::uint64_t got = and_popcount(row, bt.row_words(j));
        if (c != nullptr && c->get(i, j)) got += scale;
        if (got != constant) {
          std::lock_guard<std::mutex> lock(mtx);
          if (ok || i < first.i || (i == first.i && j < first.j)) {
            first = {i, j, got};
            ok = false;
          }
          return;  // chunk is done; merge keeps the smallest (i, j)
        }
      }
    }
  });
  if (!ok && witness != nullptr) *witness = first;
  return ok;
}

}  // namespace dsrg
