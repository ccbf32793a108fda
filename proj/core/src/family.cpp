#include "dsrg/family.hpp"

#include <limits>
#include <string>
#include <utility>

#include "dsrg/block_layout.hpp"
#include "dsrg/errors.hpp"
#include "dsrg/matrix_ops.hpp"

namespace dsrg {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::uint64_t pow2(std::size_t n) {
  if (n >= 63) throw CapacityError("2^" + std::to_string(n) + " exceeds the supported range");
  return std::uint64_t{1} << n;
}

void require_level(std::size_t n) {
  if (n == 0) throw IndexError("family levels are numbered from 1");
}

// First row that is not exactly one all-ones block among all-zero blocks,
// or npos.
std::size_t first_row_violating_single_block(const BinaryMatrix& m, std::size_t block_len) {
  if (block_len == 0 || m.cols() % block_len != 0)
    throw DimensionError("row block length " + std::to_string(block_len) +
                         " does not divide " + std::to_string(m.cols()) + " columns");
  std::size_t blocks = m.cols() / block_len;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t full = 0;
    bool bad = false;
    for (std::size_t b = 0; b < blocks && !bad; ++b) {
      std::uint64_t count = 0;
      for (std::size_t j = b * block_len; j < (b + 1) * block_len; ++j)
        count += m.get(i, j);
      if (count == block_len)
        ++full;
      else if (count != 0)
        bad = true;
    }
    if (bad || full != 1) return i;
  }
  return npos;
}

// First column whose ones count within some row block differs from
// per_block, or npos.
std::size_t first_col_violating_uniform_count(const BinaryMatrix& m, std::size_t block_len,
                                              std::uint64_t per_block) {
  if (block_len == 0 || m.rows() % block_len != 0)
    throw DimensionError("column block length " + std::to_string(block_len) +
                         " does not divide " + std::to_string(m.rows()) + " rows");
  std::size_t blocks = m.rows() / block_len;
  std::size_t worst = npos;
  std::vector<std::uint64_t> count(m.cols());
  for (std::size_t b = 0; b < blocks; ++b) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i = b * block_len; i < (b + 1) * block_len; ++i)
      m.for_each_set_in_row(i, [&](std::size_t j) { ++count[j]; });
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (count[j] != per_block && j < worst) worst = j;
  }
  return worst;
}

// The four per-level matrices the doubling step consumes and produces.
struct Level {
  std::size_t n;
  BinaryMatrix adjacency;
  BinaryMatrix out_bridge;
  BinaryMatrix in_bridge;
  BinaryMatrix pattern;
};

Level seed_level(const FamilySeed& seed) {
  return {1, seed.adjacency, seed.out_bridge, seed.in_bridge,
          exchange_pattern(1, seed.params.t)};
}

// Grows every matrix one level. The new adjacency is the 2x2 block
// arrangement of the current level; the new bridges interleave the
// current bridges with the current exchange pattern.
void advance(Level& level, const DsrgParams& seed_params) {
  BinaryMatrix i2 = identity(2);
  BinaryMatrix k2 = exchange(2);

  BinaryMatrix a00 = kron(i2, level.adjacency);
  BinaryMatrix a01 = kron(i2, level.out_bridge);
  BinaryMatrix a10 = kron(k2, level.in_bridge);
  BinaryMatrix a11 = kron(k2, level.pattern);
  BlockLayout grid(2, 2);
  grid.place(0, 0, a00);
  grid.place(0, 1, a01);
  grid.place(1, 0, a10);
  grid.place(1, 1, a11);
  BinaryMatrix next_adjacency = assemble(grid);

  BinaryMatrix b_top = kron(kron(k2, level.out_bridge), ones(1, 2));
  BinaryMatrix b_bottom = kron(kron(i2, level.pattern), ones(1, 2));
  BlockLayout b_grid(2, 1);
  b_grid.place(0, 0, b_top);
  b_grid.place(1, 0, b_bottom);
  BinaryMatrix next_out = assemble(b_grid);

  std::size_t halves = static_cast<std::size_t>(pow2(level.n));
  std::size_t copies = static_cast<std::size_t>(pow2(level.n + 1));
  BinaryMatrix c_left = kron(kron(ones(copies, 1), i2), row_block(level.in_bridge, halves));
  BinaryMatrix c_right = kron(kron(ones(copies, 1), i2), row_block(level.pattern, halves));
  BlockLayout c_grid(1, 2);
  c_grid.place(0, 0, c_left);
  c_grid.place(0, 1, c_right);
  BinaryMatrix next_in = assemble(c_grid);

  BinaryMatrix next_pattern = exchange_pattern(level.n + 1, seed_params.t);

  level.n += 1;
  level.adjacency = std::move(next_adjacency);
  level.out_bridge = std::move(next_out);
  level.in_bridge = std::move(next_in);
  level.pattern = std::move(next_pattern);
}

Level level_matrices(const FamilySeed& seed, std::size_t n) {
  require_level(n);
  Level level = seed_level(seed);
  while (level.n < n) advance(level, seed.params);
  return level;
}

}  // namespace

DsrgParams family_params(const DsrgParams& seed, std::size_t n) {
  require_level(n);
  if (seed.mu != seed.t)
    throw UnsupportedError("family parameters are defined only for mu = t");
  using u128 = unsigned __int128;
  u128 two_n = u128{1} << n;
  u128 v_n = (u128{seed.v} + (two_n * 2 - 4) * seed.t) << (n - 1);
  u128 k_n = u128{seed.k} + (two_n - 2) * seed.t;
  if (n >= 63 || v_n > std::numeric_limits<std::uint64_t>::max())
    throw CapacityError("family level " + std::to_string(n) + " overflows 64-bit parameters");
  return DsrgParams{static_cast<std::uint64_t>(v_n), static_cast<std::uint64_t>(k_n),
                    seed.t, seed.lambda, seed.t};
}

BinaryMatrix exchange_pattern(std::size_t n, std::uint64_t t) {
  require_level(n);
  if (t == 0) throw DimensionError("the block multiplicity t must be positive");
  std::size_t two_n = static_cast<std::size_t>(pow2(n));
  std::size_t tt = static_cast<std::size_t>(t);
  return kron(kron(ones(two_n, 1), exchange(two_n)), ones(tt, tt * two_n));
}

BinaryMatrix exchange_pattern_recursive(std::size_t n, std::uint64_t t) {
  require_level(n);
  if (t == 0) throw DimensionError("the block multiplicity t must be positive");
  std::size_t tt = static_cast<std::size_t>(t);
  BinaryMatrix q = kron(kron(ones(2, 1), exchange(2)), ones(tt, 2 * tt));
  for (std::size_t m = 2; m <= n; ++m) {
    std::size_t copies = static_cast<std::size_t>(pow2(m));
    std::size_t halves = static_cast<std::size_t>(pow2(m - 1));
    q = kron(kron(kron(ones(copies, 1), exchange(2)), row_block(q, halves)), ones(1, 2));
  }
  return q;
}

BinaryMatrix out_bridge_matrix(const FamilySeed& seed, std::size_t n) {
  return level_matrices(seed, n).out_bridge;
}

BinaryMatrix in_bridge_matrix(const FamilySeed& seed, std::size_t n) {
  return level_matrices(seed, n).in_bridge;
}

FamilyTerm family_term(const FamilySeed& seed, std::size_t n) {
  Level level = level_matrices(seed, n);
  return {n, family_params(seed.params, n), std::move(level.adjacency)};
}

VerifyReport check_block_system(const FamilySeed& seed, std::size_t n) {
  Level level = [&] {
    try {
      return level_matrices(seed, n);
    } catch (const CapacityError& e) {
      throw CapacityError(std::string(e.what()) +
                          "; check lower levels exactly and rely on sampled "
                          "verification beyond them");
    }
  }();
  const DsrgParams& p = seed.params;
  std::uint64_t s = static_cast<std::uint64_t>(p.s());
  const BinaryMatrix& a = level.adjacency;
  const BinaryMatrix& b = level.out_bridge;
  const BinaryMatrix& c = level.in_bridge;
  const BinaryMatrix& q = level.pattern;

  VerifyReport report;
  report.mode = VerifyMode::block_system;
  auto check = [&](CheckKind kind, const BinaryMatrix& lhs, const BinaryMatrix& rhs,
                   std::uint64_t scale, const BinaryMatrix* shifted) {
    EntryMismatch miss;
    if (!product_affine_equals(lhs, rhs, scale, shifted, p.t, &miss))
      report.record({kind, miss.i, miss.j, p.t, miss.got});
  };
  check(CheckKind::out_in_product, b, c, 0, nullptr);
  check(CheckKind::out_pattern_product, b, q, 0, nullptr);
  check(CheckKind::pattern_in_product, q, c, 0, nullptr);
  check(CheckKind::core_out_product, a, b, s, &b);
  check(CheckKind::in_core_product, c, a, s, &c);
  check(CheckKind::in_out_closure, c, b, s, &q);
  return report;
}

VerifyReport check_structure(const FamilySeed& seed, std::size_t n) {
  Level level = level_matrices(seed, n);
  DsrgParams level_params = family_params(seed.params, n);
  std::uint64_t half = seed.params.t * pow2(n);

  VerifyReport report;
  report.mode = VerifyMode::structural;

  // j carries the matrix ordinal: 0 out-bridge, 1 in-bridge, 2 pattern.
  auto check_sums = [&](const BinaryMatrix& m, std::size_t ordinal,
                        std::uint64_t row_expect, std::uint64_t col_expect) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::uint64_t got = m.row_sum(i);
      if (got != row_expect)
        report.record({CheckKind::row_sum, i, ordinal, row_expect, got});
    }
    BinaryMatrix mt = transpose(m);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::uint64_t got = mt.row_sum(j);
      if (got != col_expect)
        report.record({CheckKind::col_sum, j, ordinal, col_expect, got});
    }
  };
  check_sums(level.out_bridge, 0, half, level_params.k);
  check_sums(level.in_bridge, 1, level_params.k, half);
  check_sums(level.pattern, 2, half, half);

  auto check_row_blocks = [&](const BinaryMatrix& m, std::size_t ordinal) {
    std::size_t bad = first_row_violating_single_block(m, static_cast<std::size_t>(half));
    if (bad != npos) report.record({CheckKind::block_pattern, bad, ordinal, 1, 0});
  };
  auto check_col_blocks = [&](const BinaryMatrix& m, std::size_t ordinal) {
    std::size_t bad = first_col_violating_uniform_count(m, static_cast<std::size_t>(half),
                                                        seed.params.t);
    if (bad != npos) report.record({CheckKind::block_pattern, bad, ordinal, seed.params.t, 0});
  };
  check_row_blocks(level.out_bridge, 0);
  check_col_blocks(level.in_bridge, 1);
  check_row_blocks(level.pattern, 2);
  check_col_blocks(level.pattern, 2);
  return report;
}

bool rows_have_single_ones_block(const BinaryMatrix& m, std::size_t block_len) {
  return first_row_violating_single_block(m, block_len) == npos;
}

bool cols_have_uniform_block_count(const BinaryMatrix& m, std::size_t block_len,
                                   std::uint64_t per_block) {
  return first_col_violating_uniform_count(m, block_len, per_block) == npos;
}

FamilySeed FamilySeed::validated(const DsrgParams& params, BinaryMatrix adjacency,
                                 BinaryMatrix out_bridge, BinaryMatrix in_bridge) {
  DsrgParams p = DsrgParams::checked(params.v, params.k, params.t, params.lambda, params.mu);
  if (p.mu != p.t) throw UnsupportedError("family seeds require mu = t");
  if (p.s() <= 0)
    throw SeedContractError("family seeds require t > lambda, got t = " +
                            std::to_string(p.t) + ", lambda = " + std::to_string(p.lambda));
  std::uint64_t ft = 4 * p.t;
  if (adjacency.rows() != p.v || adjacency.cols() != p.v)
    throw SeedContractError("adjacency matrix must be " + std::to_string(p.v) + "x" +
                            std::to_string(p.v) + ", got " + std::to_string(adjacency.rows()) +
                            "x" + std::to_string(adjacency.cols()));
  if (out_bridge.rows() != p.v || out_bridge.cols() != ft)
    throw SeedContractError("out-bridge must be " + std::to_string(p.v) + "x" +
                            std::to_string(ft) + ", got " + std::to_string(out_bridge.rows()) +
                            "x" + std::to_string(out_bridge.cols()));
  if (in_bridge.rows() != ft || in_bridge.cols() != p.v)
    throw SeedContractError("in-bridge must be " + std::to_string(ft) + "x" +
                            std::to_string(p.v) + ", got " + std::to_string(in_bridge.rows()) +
                            "x" + std::to_string(in_bridge.cols()));

  VerifyReport core = verify_algebraic(adjacency, p);
  if (!core.ok)
    throw SeedContractError("adjacency matrix fails the degree/two-path conditions: " +
                            core.summary());

  std::uint64_t twot = 2 * p.t;
  for (std::size_t i = 0; i < out_bridge.rows(); ++i)
    if (out_bridge.row_sum(i) != twot)
      throw SeedContractError("out-bridge row " + std::to_string(i) + " sums to " +
                              std::to_string(out_bridge.row_sum(i)) + ", expected " +
                              std::to_string(twot));
  for (std::size_t j = 0; j < out_bridge.cols(); ++j)
    if (out_bridge.col_sum(j) != p.k)
      throw SeedContractError("out-bridge column " + std::to_string(j) + " sums to " +
                              std::to_string(out_bridge.col_sum(j)) + ", expected " +
                              std::to_string(p.k));
  for (std::size_t i = 0; i < in_bridge.rows(); ++i)
    if (in_bridge.row_sum(i) != p.k)
      throw SeedContractError("in-bridge row " + std::to_string(i) + " sums to " +
                              std::to_string(in_bridge.row_sum(i)) + ", expected " +
                              std::to_string(p.k));
  for (std::size_t j = 0; j < in_bridge.cols(); ++j)
    if (in_bridge.col_sum(j) != twot)
      throw SeedContractError("in-bridge column " + std::to_string(j) + " sums to " +
                              std::to_string(in_bridge.col_sum(j)) + ", expected " +
                              std::to_string(twot));

  if (!rows_have_single_ones_block(out_bridge, static_cast<std::size_t>(twot)))
    throw SeedContractError("every out-bridge row must be one all-ones half "
                            "and one all-zeros half");
  if (!cols_have_uniform_block_count(in_bridge, static_cast<std::size_t>(twot), p.t))
    throw SeedContractError("every in-bridge column must have exactly t ones "
                            "in each half");

  BinaryMatrix pattern = exchange_pattern(1, p.t);
  std::uint64_t s = static_cast<std::uint64_t>(p.s());
  auto require_product = [&](const char* label, const BinaryMatrix& lhs,
                             const BinaryMatrix& rhs, std::uint64_t scale,
                             const BinaryMatrix* shifted) {
    EntryMismatch miss;
    if (!product_affine_equals(lhs, rhs, scale, shifted, p.t, &miss))
      throw SeedContractError(std::string(label) + " fails at (" + std::to_string(miss.i) +
                              ", " + std::to_string(miss.j) + "): got " +
                              std::to_string(miss.got) + ", expected " + std::to_string(p.t));
  };
  require_product("out_bridge * in_bridge = t*J", out_bridge, in_bridge, 0, nullptr);
  require_product("out_bridge * pattern = t*J", out_bridge, pattern, 0, nullptr);
  require_product("pattern * in_bridge = t*J", pattern, in_bridge, 0, nullptr);
  require_product("(adjacency + s*I) * out_bridge = t*J", adjacency, out_bridge, s, &out_bridge);
  require_product("in_bridge * (adjacency + s*I) = t*J", in_bridge, adjacency, s, &in_bridge);
  require_product("in_bridge * out_bridge + s*pattern = t*J", in_bridge, out_bridge, s, &pattern);

  return FamilySeed{p, std::move(adjacency), std::move(out_bridge), std::move(in_bridge)};
}

std::vector<DsrgParams> seed_catalog() {
  return {
      DsrgParams::family_seed(6, 3, 2, 1),   DsrgParams::family_seed(8, 4, 3, 1),
      DsrgParams::family_seed(10, 5, 3, 2),  DsrgParams::family_seed(12, 6, 4, 2),
      DsrgParams::family_seed(14, 7, 4, 3),  DsrgParams::family_seed(16, 8, 5, 3),
      DsrgParams::family_seed(18, 9, 5, 4),  DsrgParams::family_seed(18, 9, 6, 3),
      DsrgParams::family_seed(20, 10, 6, 4), DsrgParams::family_seed(22, 11, 6, 5),
      DsrgParams::family_seed(24, 12, 7, 5),
  };
}

}  // namespace dsrg
