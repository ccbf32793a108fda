#include "dsrg/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "dsrg/errors.hpp"
#include "dsrg/matrix_ops.hpp"
#include "dsrg/rng.hpp"
#include "dsrg/threading.hpp"

namespace dsrg {

const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::two_path_entry: return "two-path-entry";
    case CheckKind::row_degree: return "row-degree";
    case CheckKind::col_degree: return "col-degree";
    case CheckKind::row_sum: return "row-sum";
    case CheckKind::col_sum: return "col-sum";
    case CheckKind::block_pattern: return "block-pattern";
    case CheckKind::out_in_product: return "out-bridge*in-bridge";
    case CheckKind::out_pattern_product: return "out-bridge*pattern";
    case CheckKind::pattern_in_product: return "pattern*in-bridge";
    case CheckKind::core_out_product: return "core*out-bridge";
    case CheckKind::in_core_product: return "in-bridge*core";
    case CheckKind::in_out_closure: return "in-bridge*out-bridge closure";
  }
  return "unknown";
}

const char* to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::algebraic_full: return "algebraic-full";
    case VerifyMode::combinatorial_full: return "combinatorial-full";
    case VerifyMode::sampled: return "sampled";
    case VerifyMode::structural: return "structural";
    case VerifyMode::block_system: return "block-system";
  }
  return "unknown";
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << to_string(mode) << ": ";
  if (ok) {
    out << "ok";
    if (mode == VerifyMode::sampled) out << " (" << samples_checked << " samples)";
    return out.str();
  }
  out << total_failures << " failure(s)";
  if (!failures.empty()) {
    const Witness& w = failures.front();
    out << "; first: " << to_string(w.kind) << " at (" << w.i << ", " << w.j
        << ") expected " << w.expected << " got " << w.got;
  }
  return out.str();
}

namespace {

void require_shape(const BinaryMatrix& a, const DsrgParams& p) {
  if (a.rows() != a.cols())
    throw DimensionError("adjacency matrix must be square, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  if (a.rows() != p.v)
    throw DimensionError("adjacency matrix order " + std::to_string(a.rows()) +
                         " does not match v = " + std::to_string(p.v));
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a.get(i, i))
      throw LoopError("loop at vertex " + std::to_string(i));
}

void check_degrees(const BinaryMatrix& a, const BinaryMatrix& at,
                   const DsrgParams& p, VerifyReport& report) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t d = a.row_sum(i);
    if (d != p.k) report.record({CheckKind::row_degree, i, 0, p.k, d});
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::uint64_t d = at.row_sum(j);
    if (d != p.k) report.record({CheckKind::col_degree, j, 0, p.k, d});
  }
}

// Expected two-path count from i to j: t on the diagonal, lambda across
// edges, mu across non-edges.
std::uint64_t expected_paths(const BinaryMatrix& a, const DsrgParams& p,
                             std::size_t i, std::size_t j) {
  if (i == j) return p.t;
  return a.get(i, j) ? p.lambda : p.mu;
}

struct ChunkFindings {
  std::vector<Witness> witnesses;
  std::uint64_t total = 0;
};

// Runs fn over row chunks in parallel and merges per-chunk findings back
// into the report in ascending row order, so the witness list does not
// depend on the thread count.
template <typename RowFn>
void parallel_rows_collect(std::size_t nrows, VerifyReport& report, RowFn fn) {
  std::mutex merge_mutex;
  std::map<std::size_t, ChunkFindings> findings;
  parallel_for_rows(nrows, [&](std::size_t begin, std::size_t end) {
    ChunkFindings local;
    for (std::size_t i = begin; i < end; ++i) fn(i, local);
    std::lock_guard<std::mutex> lock(merge_mutex);
    findings.emplace(begin, std::move(local));
  });
  for (auto& [begin, local] : findings) {
    (void)begin;
    for (const Witness& w : local.witnesses) {
      if (report.failures.size() < VerifyReport::kWitnessCap)
        report.failures.push_back(w);
    }
    report.total_failures += local.total;
    if (local.total) report.ok = false;
  }
}

}  // namespace

VerifyReport verify_algebraic(const BinaryMatrix& a, const DsrgParams& p) {
  require_shape(a, p);
  VerifyReport report;
  report.mode = VerifyMode::algebraic_full;

  BinaryMatrix at = transpose(a);
  check_degrees(a, at, p, report);

  parallel_rows_collect(a.rows(), report, [&](std::size_t i, ChunkFindings& local) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::uint64_t got = and_popcount(a.row_words(i), at.row_words(j));
      std::uint64_t want = expected_paths(a, p, i, j);
      if (got != want) {
        ++local.total;
        if (local.witnesses.size() < VerifyReport::kWitnessCap)
          local.witnesses.push_back({CheckKind::two_path_entry, i, j, want, got});
      }
    }
  });
  return report;
}

VerifyReport verify_combinatorial(const BinaryMatrix& a, const DsrgParams& p) {
  require_shape(a, p);
  VerifyReport report;
  report.mode = VerifyMode::combinatorial_full;

  std::size_t v = a.rows();
  std::vector<std::vector<std::size_t>> out(v);
  std::vector<std::uint64_t> indeg(v, 0);
  for (std::size_t i = 0; i < v; ++i) {
    a.for_each_set_in_row(i, [&](std::size_t j) {
      out[i].push_back(j);
      ++indeg[j];
    });
  }
  for (std::size_t i = 0; i < v; ++i)
    if (out[i].size() != p.k)
      report.record({CheckKind::row_degree, i, 0, p.k, out[i].size()});
  for (std::size_t j = 0; j < v; ++j)
    if (indeg[j] != p.k)
      report.record({CheckKind::col_degree, j, 0, p.k, indeg[j]});

  // Count directed two-paths by walking successor lists; this shares no
  // code with the bitwise product kernel.
  std::vector<std::uint64_t> paths(v);
  for (std::size_t i = 0; i < v; ++i) {
    std::fill(paths.begin(), paths.end(), 0);
    for (std::size_t w : out[i])
      for (std::size_t j : out[w]) ++paths[j];
    for (std::size_t j = 0; j < v; ++j) {
      std::uint64_t want = expected_paths(a, p, i, j);
      if (paths[j] != want)
        report.record({CheckKind::two_path_entry, i, j, want, paths[j]});
    }
  }
  return report;
}

VerifyReport verify_sampled(const BinaryMatrix& a, const DsrgParams& p,
                            std::uint64_t samples, std::uint64_t rng_seed) {
  if (p.mu != p.t)
    throw UnsupportedError("sampled verification covers only parameter sets with mu = t");
  require_shape(a, p);
  VerifyReport report;
  report.mode = VerifyMode::sampled;

  BinaryMatrix at = transpose(a);
  check_degrees(a, at, p, report);

  std::uint64_t v = a.rows();
  auto probe = [&](std::size_t i, std::size_t j) {
    std::uint64_t got = and_popcount(a.row_words(i), at.row_words(j));
    std::uint64_t want = expected_paths(a, p, i, j);
    ++report.samples_checked;
    if (got != want)
      report.record({CheckKind::two_path_entry, i, j, want, got});
  };

  if (samples >= v * v) {
    // The sample budget covers the whole matrix: check every pair once.
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j) probe(i, j);
    return report;
  }

  SplitMix64 rng(rng_seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.below(v));
    std::size_t j = static_cast<std::size_t>(rng.below(v));
    probe(i, j);
  }
  return report;
}

std::vector<PrecheckViolation> precheck_family_feasibility(const DsrgParams& p) {
  std::vector<PrecheckViolation> out;
  if (p.mu != p.t)
    out.push_back({PrecheckViolation::Code::mu_not_t, true,
                   "the construction requires mu = t (got mu = " +
                       std::to_string(p.mu) + ", t = " + std::to_string(p.t) + ")"});
  if (p.t <= p.lambda)
    out.push_back({PrecheckViolation::Code::t_not_above_lambda, true,
                   "t must exceed lambda so that s = t - lambda is positive"});
  if (p.k != p.t + p.lambda)
    out.push_back({PrecheckViolation::Code::degree_not_t_plus_lambda, true,
                   "row balance of the bridge system forces k = t + lambda (got k = " +
                       std::to_string(p.k) + ")"});
  if (p.v != 2 * p.k)
    out.push_back({PrecheckViolation::Code::order_not_twice_degree, true,
                   "bridge row/column sums force v = 2k (got v = " +
                       std::to_string(p.v) + ", k = " + std::to_string(p.k) + ")"});
  return out;
}

}  // namespace dsrg
