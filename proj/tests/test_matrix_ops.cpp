#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dsrg/block_layout.hpp"
#include "dsrg/errors.hpp"
#include "dsrg/matrix_ops.hpp"
#include "dsrg/rng.hpp"
#include "dsrg/threading.hpp"
#include "support/test_support.hpp"

using dsrg::BinaryMatrix;
using dsrg::IntMatrix;
using testsup::Grid;
using testsup::naive_kron;
using testsup::naive_mul;
using testsup::to_grid;

TEST_CASE("kron matches the entry rule on a pinned example") {
  BinaryMatrix got = dsrg::kron(dsrg::ones(2, 1), dsrg::exchange(2));
  CHECK(got == dsrg::matrix_from_strings({"01", "10", "01", "10"}));
}

TEST_CASE("kron of random small factors matches the naive expansion") {
  dsrg::SplitMix64 rng(101);
  for (int it = 0; it < 40; ++it) {
    BinaryMatrix a = testsup::random_binary(rng, 1 + rng.below(8), 1 + rng.below(8));
    BinaryMatrix b = testsup::random_binary(rng, 1 + rng.below(8), 1 + rng.below(8));
    CHECK(to_grid(dsrg::kron(a, b)) == naive_kron(to_grid(a), to_grid(b)));
  }
}

TEST_CASE("kron factors crossing word boundaries") {
  dsrg::SplitMix64 rng(103);
  BinaryMatrix a = testsup::random_binary(rng, 3, 33);
  BinaryMatrix b = testsup::random_binary(rng, 5, 7);
  CHECK(to_grid(dsrg::kron(a, b)) == naive_kron(to_grid(a), to_grid(b)));
  CHECK(to_grid(dsrg::kron(b, a)) == naive_kron(to_grid(b), to_grid(a)));
}

TEST_CASE("mul agrees with the naive triple loop up to 64x64") {
  dsrg::SplitMix64 rng(107);
  for (int it = 0; it < 25; ++it) {
    std::size_t m = 1 + rng.below(64), n = 1 + rng.below(64), p = 1 + rng.below(64);
    BinaryMatrix a = testsup::random_binary(rng, m, n);
    BinaryMatrix b = testsup::random_binary(rng, n, p);
    CHECK(to_grid(dsrg::mul(a, b)) == naive_mul(to_grid(a), to_grid(b)));
  }
}

TEST_CASE("mul shape mismatch is a dimension error") {
  BinaryMatrix a = dsrg::ones(2, 3), b = dsrg::ones(4, 2);
  CHECK_THROWS_AS(dsrg::mul(a, b), dsrg::DimensionError);
}

TEST_CASE("mixed-product law holds for conforming small factors") {
  dsrg::SplitMix64 rng(109);
  for (int it = 0; it < 25; ++it) {
    std::size_t m = 1 + rng.below(6), n = 1 + rng.below(6), p = 1 + rng.below(6);
    std::size_t q = 1 + rng.below(6), r = 1 + rng.below(6), s = 1 + rng.below(6);
    BinaryMatrix a = testsup::random_binary(rng, m, n);
    BinaryMatrix b = testsup::random_binary(rng, q, r);
    BinaryMatrix c = testsup::random_binary(rng, n, p);
    BinaryMatrix d = testsup::random_binary(rng, r, s);
    Grid left = to_grid(dsrg::mul(dsrg::kron(a, b), dsrg::kron(c, d)));
    Grid right = naive_kron(to_grid(dsrg::mul(a, c)), to_grid(dsrg::mul(b, d)));
    CHECK(left == right);
  }
}

TEST_CASE("exchange is an involution up to order 64") {
  for (std::size_t m = 1; m <= 64; ++m) {
    IntMatrix sq = dsrg::mul(dsrg::exchange(m), dsrg::exchange(m));
    CHECK(to_grid(sq) == to_grid(dsrg::to_int(dsrg::identity(m))));
  }
}

TEST_CASE("identity is neutral for mul") {
  dsrg::SplitMix64 rng(113);
  BinaryMatrix x = testsup::random_binary(rng, 3, 9);
  CHECK(to_grid(dsrg::mul(dsrg::identity(3), x)) == to_grid(x));
}

TEST_CASE("row_block undoes a vertical ones stack") {
  dsrg::SplitMix64 rng(127);
  for (unsigned s = 1; s <= 8; ++s) {
    BinaryMatrix x = testsup::random_binary(rng, 1 + rng.below(64), 1 + rng.below(30));
    BinaryMatrix stacked = dsrg::kron(dsrg::ones(s, 1), x);
    CHECK(dsrg::row_block(stacked, s) == x);
  }
}

TEST_CASE("row_block selects any slice by index") {
  BinaryMatrix top = dsrg::ones(2, 3);
  BinaryMatrix bottom(2, 3);  // zeros
  dsrg::BlockLayout grid(2, 1);
  grid.place(0, 0, top);
  grid.place(1, 0, bottom);
  BinaryMatrix stacked = dsrg::assemble(grid);
  CHECK(dsrg::row_block(stacked, 2, 0) == top);
  CHECK(dsrg::row_block(stacked, 2, 1) == bottom);
  CHECK_THROWS_AS(dsrg::row_block(stacked, 3), dsrg::DivisibilityError);
  CHECK_THROWS_AS(dsrg::row_block(stacked, 2, 2), dsrg::IndexError);
}

TEST_CASE("assemble reproduces a two-by-two Kronecker block grid") {
  dsrg::SplitMix64 rng(131);
  for (int it = 0; it < 10; ++it) {
    std::size_t va = 2 + rng.below(5);
    std::size_t h = 2 + rng.below(5);
    BinaryMatrix a = testsup::random_binary(rng, va, va);
    BinaryMatrix b = testsup::random_binary(rng, va, h);
    BinaryMatrix c = testsup::random_binary(rng, h, va);
    BinaryMatrix p = testsup::random_binary(rng, h, h);
    BinaryMatrix i2 = dsrg::identity(2), k2 = dsrg::exchange(2);

    BinaryMatrix ia = dsrg::kron(i2, a), ib = dsrg::kron(i2, b);
    BinaryMatrix kc = dsrg::kron(k2, c), kp = dsrg::kron(k2, p);
    dsrg::BlockLayout grid(2, 2);
    grid.place(0, 0, ia);
    grid.place(0, 1, ib);
    grid.place(1, 0, kc);
    grid.place(1, 1, kp);
    BinaryMatrix got = dsrg::assemble(grid);

    // The same matrix as one flat 4x4 grid of cells.
    BinaryMatrix za(va, va), zb(va, h), zc(h, va), zp(h, h);
    dsrg::BlockLayout flat(4, 4);
    const BinaryMatrix* cells[4][4] = {
        {&a, &za, &b, &zb}, {&za, &a, &zb, &b}, {&zc, &c, &zp, &p}, {&c, &zc, &p, &zp}};
    for (std::size_t bi = 0; bi < 4; ++bi)
      for (std::size_t bj = 0; bj < 4; ++bj) flat.place(bi, bj, *cells[bi][bj]);
    CHECK(got == dsrg::assemble(flat));
  }
}

TEST_CASE("assemble rejects gaps and mismatched spans") {
  BinaryMatrix a = dsrg::ones(2, 2);
  {
    dsrg::BlockLayout grid(2, 2);
    grid.place(0, 0, a);
    grid.place(0, 1, a);
    grid.place(1, 0, a);
    CHECK_THROWS_AS(dsrg::assemble(grid), dsrg::LayoutError);  // one cell empty
  }
  {
    BinaryMatrix tall = dsrg::ones(3, 2);
    dsrg::BlockLayout grid(2, 2);
    grid.place(0, 0, a);
    grid.place(0, 1, tall);  // row span disagrees within block row
    grid.place(1, 0, a);
    grid.place(1, 1, a);
    CHECK_THROWS_AS(dsrg::assemble(grid), dsrg::LayoutError);
  }
}

TEST_CASE("product_affine_equals detects equality and mismatches") {
  // ones(3,3) * ones(3,3) = 3 * J.
  BinaryMatrix j = dsrg::ones(3, 3);
  CHECK(dsrg::product_affine_equals(j, j, 0, nullptr, 3));
  dsrg::EntryMismatch w;
  CHECK_FALSE(dsrg::product_affine_equals(j, j, 0, nullptr, 2, &w));
  CHECK(w.got == 3);

  // identity * X + 1 * X = 2X; equals 2J only when X = J.
  CHECK(dsrg::product_affine_equals(dsrg::identity(3), j, 1, &j, 2));
  BinaryMatrix x = dsrg::matrix_from_strings({"110", "011", "101"});
  CHECK_FALSE(dsrg::product_affine_equals(dsrg::identity(3), x, 1, &x, 2, &w));
  CHECK(w.got != 2);
}

TEST_CASE("mul is bit-identical across thread counts") {
  dsrg::SplitMix64 rng(137);
  BinaryMatrix a = testsup::random_binary(rng, 150, 90);
  BinaryMatrix b = testsup::random_binary(rng, 90, 170);
  dsrg::set_thread_count(1);
  IntMatrix one = dsrg::mul(a, b);
  dsrg::set_thread_count(7);
  IntMatrix seven = dsrg::mul(a, b);
  dsrg::set_thread_count(0);
  IntMatrix def = dsrg::mul(a, b);
  CHECK(one == seven);
  CHECK(one == def);
  CHECK(to_grid(one) == naive_mul(to_grid(a), to_grid(b)));
}

TEST_CASE("int matrix helpers") {
  IntMatrix a(2, 2);
  a.set(0, 0, 5);
  a.set(1, 1, 7);
  IntMatrix b = dsrg::scaled(a, 3);
  CHECK(b.at(0, 0) == 15);
  CHECK(b.at(1, 1) == 21);
  IntMatrix c = dsrg::add(a, b);
  CHECK(c.at(0, 0) == 20);
  CHECK_FALSE(dsrg::is_constant(c, 20));
  IntMatrix j = dsrg::to_int(dsrg::ones(2, 2));
  CHECK(dsrg::is_constant(j, 1));
}
