#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsrg/bit_matrix.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

/// Which condition a witness belongs to.
enum class CheckKind {
  two_path_entry,   // two-path count identity entry
  row_degree,
  col_degree,
  row_sum,          // structure suites (bridge/pattern matrices)
  col_sum,
  block_pattern,    // ones-block / per-block-count structure
  out_in_product,   // out_bridge * in_bridge
  out_pattern_product,
  pattern_in_product,
  core_out_product,  // (adjacency + s*I) * out_bridge
  in_core_product,   // in_bridge * (adjacency + s*I)
  in_out_closure,    // in_bridge * out_bridge + s * pattern
};

const char* to_string(CheckKind kind);

enum class VerifyMode {
  algebraic_full,
  combinatorial_full,
  sampled,
  structural,
  block_system,
};

const char* to_string(VerifyMode mode);

struct Witness {
  CheckKind kind = CheckKind::two_path_entry;
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t expected = 0;
  std::uint64_t got = 0;
};

/// Result of a verification pass. The witness list is capped so reports
/// stay small; total_failures is always exact.
struct VerifyReport {
  static constexpr std::size_t kWitnessCap = 32;

  bool ok = true;
  VerifyMode mode = VerifyMode::algebraic_full;
  std::vector<Witness> failures;
  std::uint64_t total_failures = 0;
  std::uint64_t samples_checked = 0;

  void record(const Witness& w) {
    ok = false;
    ++total_failures;
    if (failures.size() < kWitnessCap) failures.push_back(w);
  }

  std::string summary() const;
};

/// Full check of the adjacency-matrix conditions: every row and column
/// sums to k, and the two-path count between (i, j) equals t on the
/// diagonal, lambda across edges, and mu across non-edges. Throws
/// DimensionError for a non-square matrix of the wrong order and
/// LoopError for a nonzero diagonal.
VerifyReport verify_algebraic(const BinaryMatrix& a, const DsrgParams& p);

/// Independent combinatorial check of the same conditions by explicit
/// neighborhood iteration (no bitwise product kernel); intended as an
/// oracle for orders up to a few hundred.
VerifyReport verify_combinatorial(const BinaryMatrix& a, const DsrgParams& p);

/// Exact degree checks for every row and column, plus `samples` random
/// probes of the identity A^2 + sA = tJ (mu = t form). Deterministic for
/// a fixed rng_seed. samples >= v^2 switches to enumerating all pairs
/// exactly once. Requires p.mu == p.t.
VerifyReport verify_sampled(const BinaryMatrix& a, const DsrgParams& p,
                            std::uint64_t samples, std::uint64_t rng_seed);

/// Cheap necessary conditions for the family construction.
struct PrecheckViolation {
  enum class Code {
    mu_not_t,
    t_not_above_lambda,
    degree_not_t_plus_lambda,
    order_not_twice_degree,
  };
  Code code;
  bool hard;  // algebraically forced, as opposed to merely observed
  std::string message;
};

/// Returns the violated conditions among: mu != t; t <= lambda;
/// k != t + lambda (forced by the row balance of the bridge system);
/// v != 2k (forced by the bridge column sums). Empty means feasible as
/// far as these screens can tell.
std::vector<PrecheckViolation> precheck_family_feasibility(const DsrgParams& p);

}  // namespace dsrg
