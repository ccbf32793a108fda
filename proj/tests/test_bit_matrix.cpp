#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <vector>

#include "dsrg/bit_matrix.hpp"
#include "dsrg/errors.hpp"
#include "dsrg/rng.hpp"
#include "support/test_support.hpp"

using dsrg::BinaryMatrix;

TEST_CASE("construction and get/set round-trip") {
  BinaryMatrix m(3, 70);  // spans two words per row
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 70);
  CHECK(m.words_per_row() == 2);
  for (std::size_t j = 0; j < 70; ++j) CHECK_FALSE(m.get(1, j));
  m.set(1, 0, true);
  m.set(1, 63, true);
  m.set(1, 64, true);
  m.set(1, 69, true);
  CHECK(m.get(1, 0));
  CHECK(m.get(1, 63));
  CHECK(m.get(1, 64));
  CHECK(m.get(1, 69));
  CHECK(m.row_sum(1) == 4);
  m.set(1, 63, false);
  CHECK_FALSE(m.get(1, 63));
  CHECK(m.row_sum(1) == 3);
}

TEST_CASE("zero dimensions are rejected") {
  CHECK_THROWS_AS(BinaryMatrix(0, 3), dsrg::DimensionError);
  CHECK_THROWS_AS(BinaryMatrix(3, 0), dsrg::DimensionError);
  CHECK_THROWS_AS(dsrg::identity(0), dsrg::DimensionError);
  CHECK_THROWS_AS(dsrg::ones(0, 1), dsrg::DimensionError);
  CHECK_THROWS_AS(dsrg::ones(1, 0), dsrg::DimensionError);
  CHECK_THROWS_AS(dsrg::exchange(0), dsrg::DimensionError);
}

TEST_CASE("padding bits stay zero after mutations") {
  BinaryMatrix m(2, 65);
  for (std::size_t j = 0; j < 65; ++j) m.set(0, j, true);
  for (std::size_t j = 0; j < 65; ++j) m.set(0, j, false);
  m.set(0, 64, true);
  // Only the first padded word bit should be set; popcount over the raw
  // words must equal the logical row sum.
  std::size_t raw = 0;
  for (std::uint64_t w : m.row_words(0)) raw += static_cast<std::size_t>(std::popcount(w));
  CHECK(raw == m.row_sum(0));
  CHECK(m.row_sum(0) == 1);
}

TEST_CASE("equality is entrywise and ignores construction order") {
  BinaryMatrix a(2, 3), b(2, 3);
  a.set(0, 1, true);
  a.set(1, 2, true);
  b.set(1, 2, true);
  b.set(0, 1, true);
  CHECK(a == b);
  b.set(0, 0, true);
  CHECK_FALSE(a == b);
}

TEST_CASE("identity entries") {
  BinaryMatrix i1 = dsrg::identity(1);
  CHECK(i1.rows() == 1);
  CHECK(i1.get(0, 0));

  BinaryMatrix i2 = dsrg::identity(2);
  CHECK(i2 == dsrg::matrix_from_strings({"10", "01"}));

  BinaryMatrix i3 = dsrg::identity(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(i3.get(i, j) == (i == j));
}

TEST_CASE("ones entries and row sums") {
  CHECK(dsrg::ones(1, 1) == dsrg::matrix_from_strings({"1"}));
  BinaryMatrix m = dsrg::ones(2, 3);
  CHECK(m == dsrg::matrix_from_strings({"111", "111"}));
  for (unsigned rows = 1; rows <= 5; ++rows)
    for (unsigned cols = 1; cols <= 5; ++cols) {
      BinaryMatrix j = dsrg::ones(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) CHECK(j.row_sum(i) == cols);
      for (std::size_t c = 0; c < cols; ++c) CHECK(j.col_sum(c) == rows);
    }
}

TEST_CASE("exchange entries") {
  CHECK(dsrg::exchange(1) == dsrg::matrix_from_strings({"1"}));
  CHECK(dsrg::exchange(2) == dsrg::matrix_from_strings({"01", "10"}));
  CHECK(dsrg::exchange(3) == dsrg::matrix_from_strings({"001", "010", "100"}));
  // Antidiagonal rule for a larger instance.
  BinaryMatrix k = dsrg::exchange(66);
  for (std::size_t i = 0; i < 66; ++i)
    for (std::size_t j = 0; j < 66; ++j) CHECK(k.get(i, j) == (i + j == 65));
}

TEST_CASE("transpose is an involution and swaps sums") {
  dsrg::SplitMix64 rng(7);
  for (int it = 0; it < 20; ++it) {
    std::size_t r = 1 + rng.below(90), c = 1 + rng.below(90);
    BinaryMatrix m = testsup::random_binary(rng, r, c);
    BinaryMatrix mt = dsrg::transpose(m);
    REQUIRE(mt.rows() == c);
    REQUIRE(mt.cols() == r);
    CHECK(dsrg::transpose(mt) == m);
    for (std::size_t i = 0; i < r; ++i) CHECK(m.row_sum(i) == mt.col_sum(i));
    for (std::size_t j = 0; j < c; ++j) CHECK(m.col_sum(j) == mt.row_sum(j));
  }
}

TEST_CASE("and_popcount matches a naive dot product") {
  dsrg::SplitMix64 rng(11);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 1 + rng.below(200);
    BinaryMatrix m = testsup::random_binary(rng, 2, n);
    std::size_t expect = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (m.get(0, j) && m.get(1, j)) ++expect;
    CHECK(dsrg::and_popcount(m.row_words(0), m.row_words(1)) == expect);
  }
}

TEST_CASE("or_shifted_row places a row at a bit offset") {
  dsrg::SplitMix64 rng(13);
  for (int it = 0; it < 30; ++it) {
    std::size_t src_cols = 1 + rng.below(80);
    std::size_t offset = rng.below(70);
    BinaryMatrix src = testsup::random_binary(rng, 1, src_cols);
    BinaryMatrix dst(1, offset + src_cols);
    dsrg::or_shifted_row(dst.row_words(0), src.row_words(0), src_cols, offset);
    for (std::size_t j = 0; j < offset; ++j) CHECK_FALSE(dst.get(0, j));
    for (std::size_t j = 0; j < src_cols; ++j)
      CHECK(dst.get(0, offset + j) == src.get(0, j));
  }
}

TEST_CASE("for_each_set_in_row visits exactly the set columns in order") {
  dsrg::SplitMix64 rng(17);
  BinaryMatrix m = testsup::random_binary(rng, 4, 130, 60);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::size_t> seen;
    m.for_each_set_in_row(i, [&](std::size_t j) { seen.push_back(j); });
    std::vector<std::size_t> expect;
    for (std::size_t j = 0; j < 130; ++j)
      if (m.get(i, j)) expect.push_back(j);
    CHECK(seen == expect);
  }
}

TEST_CASE("matrix_from_strings parses and rejects bad input") {
  BinaryMatrix m = dsrg::matrix_from_strings({"010", "101"});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.get(0, 1));
  CHECK_FALSE(m.get(1, 1));
  CHECK_THROWS_AS(dsrg::matrix_from_strings({}), dsrg::DimensionError);
  CHECK_THROWS_AS(dsrg::matrix_from_strings({"01", "0"}), dsrg::DimensionError);
  CHECK_THROWS_AS(dsrg::matrix_from_strings({"0x"}), dsrg::ParseError);
}

TEST_CASE("BitVector basics") {
  dsrg::BitVector v(130);
  CHECK(v.size() == 130);
  v.set(0, true);
  v.set(64, true);
  v.set(129, true);
  CHECK(v.popcount() == 3);
  CHECK(v.get(64));
  v.set(64, false);
  CHECK(v.popcount() == 2);
}
