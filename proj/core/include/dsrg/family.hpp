#pragma once

#include <cstdint>
#include <vector>

#include "dsrg/bit_matrix.hpp"
#include "dsrg/params.hpp"
#include "dsrg/verify.hpp"

namespace dsrg {

/// A validated starting block for the doubling construction: a directed
/// strongly regular adjacency matrix (with mu = t) together with the two
/// bridge matrices that tie consecutive family members together.
///
/// Invariants established by `validated` and relied on everywhere else:
///   - params.mu == params.t and s = t - lambda > 0
///   - adjacency is v x v and passes verify_algebraic
///   - out_bridge is v x 4t with row sums 2t and column sums k; every row
///     is one all-ones half followed or preceded by an all-zeros half
///   - in_bridge is 4t x v with row sums k and column sums 2t; every
///     column has exactly t ones in its top half and t in its bottom half
///   - the five product identities and the closure identity against the
///     first exchange pattern all hold (see check_block_system)
struct FamilySeed {
  DsrgParams params;
  BinaryMatrix adjacency;
  BinaryMatrix out_bridge;
  BinaryMatrix in_bridge;

  /// Validates all seed conditions; throws SeedContractError (naming the
  /// violated condition) or UnsupportedError (mu != t).
  static FamilySeed validated(const DsrgParams& params, BinaryMatrix adjacency,
                              BinaryMatrix out_bridge, BinaryMatrix in_bridge);
};

/// One member of a family: the level index (1 = the seed itself), its
/// adjacency matrix, and its parameter set.
struct FamilyTerm {
  std::size_t n = 1;
  DsrgParams params;
  BinaryMatrix adjacency;
};

/// Parameters of the n-th family member grown from a seed with the given
/// parameters: (v_n, k_n, t, lambda, t) where
///   v_n = (v + (2^(n+1) - 4) t) 2^(n-1),  k_n = k + (2^n - 2) t.
/// Throws UnsupportedError if seed.mu != seed.t, IndexError for n = 0,
/// and CapacityError when the arithmetic would leave 64 bits.
DsrgParams family_params(const DsrgParams& seed, std::size_t n);

/// The level-n exchange pattern: ones(2^n, 1) (x) exchange(2^n) (x)
/// ones(t, t 2^n), a t4^n x t4^n matrix with constant row and column sums
/// t 2^n whose square is t * J.
BinaryMatrix exchange_pattern(std::size_t n, std::uint64_t t);

/// The same matrix built by the doubling recurrence
///   Q_1 = ones(2,1) (x) exchange(2) (x) ones(t, 2t)
///   Q_n = ones(2^n,1) (x) exchange(2) (x) row_block(Q_{n-1}, 2^{n-1}) (x) ones(1,2)
/// Used as an independent cross-check of exchange_pattern.
BinaryMatrix exchange_pattern_recursive(std::size_t n, std::uint64_t t);

/// The level-n out-bridge (v_n x t4^n) and in-bridge (t4^n x v_n)
/// matrices grown from the seed's bridges.
BinaryMatrix out_bridge_matrix(const FamilySeed& seed, std::size_t n);
BinaryMatrix in_bridge_matrix(const FamilySeed& seed, std::size_t n);

/// The n-th family member. n = 1 returns the seed itself. Each doubling
/// step assembles
///   [ I2 (x) A_n   I2 (x) B_n ]
///   [ K2 (x) C_n   K2 (x) P_n ]
/// from the previous level's adjacency A_n, bridges B_n / C_n, and
/// exchange pattern P_n.
FamilyTerm family_term(const FamilySeed& seed, std::size_t n);

/// Checks the six product identities at level n by streaming comparison
/// (nothing larger than the factors is materialized):
///   B C = tJ, B P = tJ, P C = tJ,
///   (A + sI) B = tJ, C (A + sI) = tJ, C B + s P = tJ.
VerifyReport check_block_system(const FamilySeed& seed, std::size_t n);

/// Checks the structural facts about the level-n matrices: row/column
/// sums of the bridges and the pattern, the one-ones-block shape of
/// out-bridge and pattern rows, and the t-per-half-block column counts of
/// in-bridge and pattern columns. Witnesses set `i` to the offending
/// row/column and `j` to the matrix ordinal (0 = out-bridge,
/// 1 = in-bridge, 2 = pattern).
VerifyReport check_structure(const FamilySeed& seed, std::size_t n);

/// True when every row of m consists of whole blocks of length block_len,
/// exactly one of which is all ones and the rest all zeros.
bool rows_have_single_ones_block(const BinaryMatrix& m, std::size_t block_len);

/// True when every column of m has exactly per_block ones within each
/// consecutive row block of length block_len.
bool cols_have_uniform_block_count(const BinaryMatrix& m, std::size_t block_len,
                                   std::uint64_t per_block);

/// A ready-made catalog of the eleven smallest feasible seed parameter
/// sets, ordered by v. The bundled searcher solves the first several in
/// seconds; the largest orders need long randomized runs.
std::vector<DsrgParams> seed_catalog();

}  // namespace dsrg
