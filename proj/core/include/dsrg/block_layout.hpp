#pragma once

#include <cstddef>
#include <vector>

#include "dsrg/bit_matrix.hpp"

namespace dsrg {

/// Rectangular grid of blocks to be composed into one matrix. Every cell
/// must be filled, either with a source matrix or an explicit zero block;
/// all cells of a grid row must agree on height and all cells of a grid
/// column on width, so the grid tiles the target with no gap or overlap.
///
/// The layout stores pointers; sources must outlive the assemble call.
class BlockLayout {
 public:
  BlockLayout(std::size_t block_rows, std::size_t block_cols);

  void place(std::size_t bi, std::size_t bj, const BinaryMatrix& m);
  void place_zero(std::size_t bi, std::size_t bj, std::size_t rows,
                  std::size_t cols);

  std::size_t block_rows() const { return block_rows_; }
  std::size_t block_cols() const { return block_cols_; }

  friend BinaryMatrix assemble(const BlockLayout& layout);

 private:
  struct Cell {
    std::size_t rows = 0;
    std::size_t cols = 0;
    const BinaryMatrix* src = nullptr;  // nullptr with rows>0 means zeros
    bool filled = false;
  };

  Cell& cell(std::size_t bi, std::size_t bj);
  const Cell& cell(std::size_t bi, std::size_t bj) const;

  std::size_t block_rows_;
  std::size_t block_cols_;
  std::vector<Cell> cells_;
};

/// Composes the grid into a single matrix. Reading back any cell region
/// reproduces its source. Throws LayoutError on unfilled cells or span
/// mismatches.
BinaryMatrix assemble(const BlockLayout& layout);

}  // namespace dsrg
