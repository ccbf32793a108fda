#include "dsrg/block_layout.hpp"

#include <string>

namespace dsrg {

BlockLayout::BlockLayout(std::size_t block_rows, std::size_t block_cols)
    : block_rows_(block_rows), block_cols_(block_cols) {
  if (block_rows == 0 || block_cols == 0) {
    throw LayoutError("block grid dimensions must be >= 1");
  }
  cells_.resize(block_rows * block_cols);
}

BlockLayout::Cell& BlockLayout::cell(std::size_t bi, std::size_t bj) {
  if (bi >= block_rows_ || bj >= block_cols_) {
    throw IndexError("block cell out of range");
  }
  return cells_[bi * block_cols_ + bj];
}

const BlockLayout::Cell& BlockLayout::cell(std::size_t bi,
                                           std::size_t bj) const {
  return cells_[bi * block_cols_ + bj];
}

void BlockLayout::place(std::size_t bi, std::size_t bj,
                        const BinaryMatrix& m) {
  Cell& c = cell(bi, bj);
  if (c.filled) throw LayoutError("block cell placed twice");
  c = {m.rows(), m.cols(), &m, true};
}

void BlockLayout::place_zero(std::size_t bi, std::size_t bj, std::size_t rows,
                             std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw LayoutError("zero block dimensions must be >= 1");
  }
  Cell& c = cell(bi, bj);
  if (c.filled) throw LayoutError("block cell placed twice");
  c = {rows, cols, nullptr, true};
}

BinaryMatrix assemble(const BlockLayout& layout) {
  const std::size_t br = layout.block_rows();
  const std::size_t bc = layout.block_cols();

  std::vector<std::size_t> heights(br, 0);
  std::vector<std::size_t> widths(bc, 0);
  for (std::size_t bi = 0; bi < br; ++bi) {
    for (std::size_t bj = 0; bj < bc; ++bj) {
      const auto& c = layout.cell(bi, bj);
      if (!c.filled) {
        throw LayoutError("block cell (" + std::to_string(bi) + "," +
                          std::to_string(bj) + ") left empty");
      }
      if (heights[bi] == 0) heights[bi] = c.rows;
      if (widths[bj] == 0) widths[bj] = c.cols;
      if (c.rows != heights[bi] || c.cols != widths[bj]) {
        throw LayoutError("block cell (" + std::to_string(bi) + "," +
                          std::to_string(bj) + ") is " +
                          std::to_string(c.rows) + "x" + std::to_string(c.cols) +
                          ", span requires " + std::to_string(heights[bi]) +
                          "x" + std::to_string(widths[bj]));
      }
    }
  }

  std::size_t total_rows = 0;
  for (std::size_t h : heights) total_rows += h;
  std::size_t total_cols = 0;
  for (std::size_t w : widths) total_cols += w;

  BinaryMatrix out(total_rows, total_cols);
  std::size_t row_off = 0;
  for (std::size_t bi = 0; bi < br; ++bi) {
    std::size_t col_off = 0;
    for (std::size_t bj = 0; bj < bc; ++bj) {
      const auto& c = layout.cell(bi, bj);
      if (c.src != nullptr) {
        for (std::size_t i = 0; i < c.rows; ++i) {
          or_shifted_row(out.row_words(row_off + i), c.src->row_words(i),
                         c.cols, col_off);
        }
      }
      col_off += widths[bj];
    }
    row_off += heights[bi];
  }
  return out;
}

}  // namespace dsrg
