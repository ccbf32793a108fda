#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dsrg/bit_matrix.hpp"
#include "dsrg/family.hpp"
#include "dsrg/params.hpp"
#include "dsrg/verify.hpp"

namespace dsrg {

/// Limits for a backtracking run. Zero means unlimited. With
/// deterministic = true the search visits one fixed tree, so results and
/// node counts are reproducible across machines and thread settings; with
/// deterministic = false the value order is reshuffled from rng_seed on a
/// geometric restart schedule, which helps on adversarial instances but
/// makes node counts seed-dependent.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  double max_wall_seconds = 0.0;
  std::uint64_t rng_seed = 1;
  bool deterministic = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t restarts = 0;
  double wall_seconds = 0.0;
};

/// found: a witness was produced. infeasible: the full tree was explored
/// without interruption, so no witness exists. infeasible_precheck: a
/// necessary arithmetic condition already fails (see precheck field).
/// exhausted: a budget limit stopped the search before either proof.
enum class SearchStatus { found, exhausted, infeasible, infeasible_precheck };

const char* to_string(SearchStatus status);

/// Invoked periodically with the running stats and the current depth.
using ProgressFn = std::function<void(const SearchStats&, std::size_t depth)>;

struct SeedMatrixResult {
  SearchStatus status = SearchStatus::exhausted;
  SearchStats stats;
  std::optional<BinaryMatrix> adjacency;
  std::vector<PrecheckViolation> precheck;
};

/// Searches for a v x v adjacency matrix with the prescribed degree and
/// two-path counts by bordered backtracking: step r completes row r and
/// column r together, so two-path counts between settled vertices are
/// checked exactly and the rest through interval bounds. Orders above 64
/// are not supported.
/// Runs the family feasibility precheck first unless force is set; force
/// also skips nothing else — any matrix returned was re-verified.
SeedMatrixResult find_seed_matrix(const DsrgParams& params, const SearchBudget& budget,
                                  bool force = false, const ProgressFn& progress = nullptr);

struct SeedPairResult {
  SearchStatus status = SearchStatus::exhausted;
  SearchStats stats;
  std::optional<BinaryMatrix> out_bridge;
  std::optional<BinaryMatrix> in_bridge;
  std::vector<PrecheckViolation> precheck;
};

/// Given an adjacency matrix, searches for the bridge pair. Out-bridge
/// rows are decided first (each row is one of two half patterns), then
/// in-bridge columns left to right, with running bounds against the
/// product identities. force skips the feasibility precheck and the
/// adjacency verification, allowing exhaustive infeasibility proofs on
/// deliberately wrong inputs; without force, a found pair is returned
/// only after full seed validation.
SeedPairResult find_seed_pair(const BinaryMatrix& adjacency, const DsrgParams& params,
                              const SearchBudget& budget, bool force = false,
                              const ProgressFn& progress = nullptr);

/// Bundles an adjacency matrix and a bridge pair into a validated seed,
/// then double-checks by building the next family member and verifying it
/// in full. Throws (SeedContractError and friends) rather than returning
/// a status: inputs are expected to be search results.
FamilySeed make_family_seed(const DsrgParams& params, BinaryMatrix adjacency,
                            BinaryMatrix out_bridge, BinaryMatrix in_bridge);

}  // namespace dsrg
