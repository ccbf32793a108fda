#include "dsrg/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <vector>

#include "dsrg/errors.hpp"
#include "dsrg/rng.hpp"

namespace dsrg {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::infeasible: return "infeasible";
    case SearchStatus::infeasible_precheck: return "infeasible-precheck";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Walk { found, tree_done, cut };

// Node/wall budgets, geometric restart limits, and progress reporting,
// shared by both searches.
struct Driver {
  const SearchBudget& budget;
  const ProgressFn& progress;
  SearchStats stats;
  Clock::time_point start = Clock::now();
  std::uint64_t attempt_limit = 0;  // 0 = no per-attempt cutoff
  std::uint64_t attempt_nodes = 0;
  bool out_of_budget = false;

  Driver(const SearchBudget& b, const ProgressFn& p) : budget(b), progress(p) {}

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  // False when the current branch must be abandoned, either for good
  // (out_of_budget) or to trigger a restart.
  bool tick(std::size_t depth) {
    ++stats.nodes;
    ++attempt_nodes;
    if ((stats.nodes & 0xFFFull) == 0) {
      stats.wall_seconds = elapsed();
      if (budget.max_wall_seconds > 0 && stats.wall_seconds > budget.max_wall_seconds)
        out_of_budget = true;
      if (progress && (stats.nodes & 0xFFFFull) == 0) progress(stats, depth);
    }
    if (budget.max_nodes > 0 && stats.nodes >= budget.max_nodes) out_of_budget = true;
    if (out_of_budget) return false;
    if (attempt_limit > 0 && attempt_nodes >= attempt_limit) return false;
    return true;
  }
};

// ---------------------------------------------------------------------
// Adjacency-matrix search over a growing leading principal submatrix:
// step r assigns the rest of row r and column r together, so after step
// r the first r+1 rows and columns are complete. Every two-path count
// between settled vertices is then an exact popcount check, and counts
// that touch the frontier are pruned with interval bounds.
// ---------------------------------------------------------------------

struct MatrixSearch {
  const DsrgParams& p;
  Driver& drv;
  std::size_t v;
  std::uint64_t k, t, lam, mu;
  std::uint64_t full_mask;
  // row_bits[i] bit j = A[i][j] among decided cells; col_bits[j] bit i =
  // A[i][j]. Cell (i, j) is decided once step min(i, j) has run, so after
  // step r the first r+1 rows and columns are complete.
  std::vector<std::uint64_t> row_bits, col_bits;
  std::vector<std::uint32_t> out_count, in_count;      // ones so far
  std::vector<std::uint32_t> row_decided, col_decided; // off-diagonal cells decided
  SplitMix64* attempt_rng = nullptr;

  MatrixSearch(const DsrgParams& params, Driver& driver)
      : p(params), drv(driver), v(params.v), k(params.k), t(params.t),
        lam(params.lambda), mu(params.mu),
        full_mask(v >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1),
        row_bits(v, 0), col_bits(v, 0), out_count(v, 0), in_count(v, 0),
        row_decided(v, 0), col_decided(v, 0) {}

  void reset_state() {
    std::fill(row_bits.begin(), row_bits.end(), 0);
    std::fill(col_bits.begin(), col_bits.end(), 0);
    std::fill(out_count.begin(), out_count.end(), 0);
    std::fill(in_count.begin(), in_count.end(), 0);
    std::fill(row_decided.begin(), row_decided.end(), 0);
    std::fill(col_decided.begin(), col_decided.end(), 0);
  }

  bool try_one_first() {
    if (!attempt_rng) return true;
    return (attempt_rng->next() & 1) != 0;
  }

  void put(std::size_t i, std::size_t j, bool value) {
    if (value) {
      row_bits[i] |= std::uint64_t{1} << j;
      col_bits[j] |= std::uint64_t{1} << i;
      ++out_count[i];
      ++in_count[j];
    }
    ++row_decided[i];
    ++col_decided[j];
  }

  void unput(std::size_t i, std::size_t j, bool value) {
    if (value) {
      row_bits[i] &= ~(std::uint64_t{1} << j);
      col_bits[j] &= ~(std::uint64_t{1} << i);
      --out_count[i];
      --in_count[j];
    }
    --row_decided[i];
    --col_decided[j];
  }

  std::uint64_t pair_target(std::size_t x, std::size_t y) const {
    if (x == y) return t;
    return ((row_bits[x] >> y) & 1) ? lam : mu;
  }

  // Exact check of the two-path count between two settled vertices
  // (row x and column y both complete).
  bool settled_pair_ok(std::size_t x, std::size_t y) const {
    return static_cast<std::uint64_t>(std::popcount(row_bits[x] & col_bits[y])) ==
           pair_target(x, y);
  }

  // All two-path constraints that involve step r's freshly completed row
  // and column, plus interval checks on every pair touching the frontier.
  // Pairs settled before step r were checked at earlier steps.
  bool step_ok(std::size_t r) const {
    std::uint64_t frontier = (r + 1 >= 64)
        ? full_mask
        : full_mask & ((std::uint64_t{1} << (r + 1)) - 1);  // vertices <= r
    std::uint64_t beyond = full_mask & ~frontier;           // vertices > r
    // Fresh settled pairs: (x <= r, r) and (r, y <= r).
    for (std::size_t x = 0; x <= r; ++x)
      if (!settled_pair_ok(x, r)) return false;
    for (std::size_t y = 0; y < r; ++y)
      if (!settled_pair_ok(r, y)) return false;
    // Interval checks across the frontier.
    for (std::size_t x = 0; x <= r; ++x) {
      std::uint64_t fo = std::popcount(row_bits[x] & beyond);
      for (std::size_t y = r + 1; y < v; ++y) {
        std::uint64_t have = std::popcount(row_bits[x] & col_bits[y]);
        std::uint64_t want = pair_target(x, y);
        if (have > want) return false;
        if (have + std::min<std::uint64_t>(fo, k - in_count[y]) < want) return false;
      }
    }
    for (std::size_t y = 0; y <= r; ++y) {
      std::uint64_t fi = std::popcount(col_bits[y] & beyond);
      for (std::size_t x = r + 1; x < v; ++x) {
        std::uint64_t have = std::popcount(row_bits[x] & col_bits[y]);
        std::uint64_t want = ((col_bits[y] >> x) & 1) ? lam : mu;
        if (have > want) return false;
        if (have + std::min<std::uint64_t>(fi, k - out_count[x]) < want) return false;
      }
    }
    // Undecided-region pairs: only the diagonal has a known target.
    for (std::size_t x = r + 1; x < v; ++x) {
      std::uint64_t have = std::popcount(row_bits[x] & col_bits[x]);
      if (have > t) return false;
      std::uint64_t cap = std::min<std::uint64_t>(k - out_count[x], k - in_count[x]);
      if (have + cap < t) return false;
    }
    return true;
  }

  // Quick exact checks available as soon as row r is complete (before the
  // column arm): row r against every complete column.
  bool row_arm_ok(std::size_t r) const {
    if (out_count[r] != k) return false;
    for (std::size_t y = 0; y < r; ++y)
      if (!settled_pair_ok(r, y)) return false;
    return true;
  }

  bool cell_can_one(std::size_t i, std::size_t j) const {
    return out_count[i] < k && in_count[j] < k;
  }
  // Leaving cell (i, j) zero must still allow both its row and column to
  // reach k ones with the cells that remain undecided after it.
  bool cell_can_zero(std::size_t i, std::size_t j) const {
    return out_count[i] + (v - 2 - row_decided[i]) >= k &&
           in_count[j] + (v - 2 - col_decided[j]) >= k;
  }

  static std::uint64_t mask_above(std::size_t j) {
    return (j + 1 >= 64) ? 0 : ~((std::uint64_t{1} << (j + 1)) - 1);
  }

  // After cell (r, j) of the arm is decided, every pair (r, y) with a
  // complete column y < r has an exact remaining capacity: future
  // witnesses must be row-r ones at positions > j that already carry a
  // one in column y. The pair (r, r) only gets the overshoot check here,
  // since column r is still open.
  bool row_cell_ok(std::size_t r, std::size_t j) const {
    std::uint64_t beyond = mask_above(j) & full_mask;
    std::uint64_t budget = k - out_count[r];
    for (std::size_t y = 0; y < r; ++y) {
      std::uint64_t have = std::popcount(row_bits[r] & col_bits[y]);
      std::uint64_t want = pair_target(r, y);
      if (have > want) return false;
      std::uint64_t room = std::popcount(col_bits[y] & beyond);
      if (have + std::min(room, budget) < want) return false;
    }
    return static_cast<std::uint64_t>(std::popcount(row_bits[r] & col_bits[r])) <= t;
  }

  // Same idea once cell (i, r) of the column arm is decided: row r and
  // every earlier row are complete, so every pair (x, r) with x <= r has
  // exact bounds, including the diagonal.
  bool col_cell_ok(std::size_t r, std::size_t i) const {
    std::uint64_t beyond = mask_above(i) & full_mask;
    std::uint64_t budget = k - in_count[r];
    for (std::size_t x = 0; x <= r; ++x) {
      std::uint64_t have = std::popcount(row_bits[x] & col_bits[r]);
      std::uint64_t want = (x == r) ? t : pair_target(x, r);
      if (have > want) return false;
      std::uint64_t room = std::popcount(row_bits[x] & beyond);
      if (have + std::min(room, budget) < want) return false;
    }
    return true;
  }

  Walk row_arm(std::size_t r, std::size_t j) {
    if (j == v) return row_arm_ok(r) ? col_arm(r, r + 1) : Walk::tree_done;
    if (!drv.tick(r)) return Walk::cut;
    bool one_first = try_one_first();
    for (int pass = 0; pass < 2; ++pass) {
      bool value = (pass == 0) == one_first;
      if (value ? !cell_can_one(r, j) : !cell_can_zero(r, j)) continue;
      put(r, j, value);
      Walk walk = row_cell_ok(r, j) ? row_arm(r, j + 1) : Walk::tree_done;
      if (walk == Walk::found) return walk;  // keep the assignment for extraction
      unput(r, j, value);
      if (walk == Walk::cut) return walk;
    }
    return Walk::tree_done;
  }

  Walk col_arm(std::size_t r, std::size_t i) {
    if (i == v) {
      if (in_count[r] != k || !step_ok(r)) return Walk::tree_done;
      return run_step(r + 1);
    }
    if (!drv.tick(r)) return Walk::cut;
    bool one_first = try_one_first();
    for (int pass = 0; pass < 2; ++pass) {
      bool value = (pass == 0) == one_first;
      if (value ? !cell_can_one(i, r) : !cell_can_zero(i, r)) continue;
      put(i, r, value);
      Walk walk = col_cell_ok(r, i) ? col_arm(r, i + 1) : Walk::tree_done;
      if (walk == Walk::found) return walk;  // keep the assignment for extraction
      unput(i, r, value);
      if (walk == Walk::cut) return walk;
    }
    return Walk::tree_done;
  }

  Walk run_step(std::size_t r) {
    if (r == v) return Walk::found;
    if (r == 0) {
      // Relabeling freedom: successors of vertex 0 can be pinned to
      // {1..k}; its predecessors must then meet {1..k} in exactly t
      // vertices (the two-path count at the diagonal), so they can be
      // pinned to {1..t} and {k+1..2k-t}.
      if (v != 2 * k || t > k || 2 * k - t > v - 1) return general_step(0);
      for (std::size_t j = 1; j <= k; ++j) put(0, j, true);
      for (std::size_t j = k + 1; j < v; ++j) put(0, j, false);
      for (std::size_t i = 1; i < v; ++i)
        put(i, 0, (i <= t) || (i > k && i <= 2 * k - t));
      Walk walk = (in_count[0] == k && step_ok(0)) ? run_step(1) : Walk::tree_done;
      if (walk != Walk::found) {
        for (std::size_t i = v; i-- > 1;)
          unput(i, 0, (i <= t) || (i > k && i <= 2 * k - t));
        for (std::size_t j = v; j-- > k + 1;) unput(0, j, false);
        for (std::size_t j = k + 1; j-- > 1;) unput(0, j, true);
      }
      return walk;
    }
    return general_step(r);
  }

  // First row pinned only (used when the v = 2k normalization does not
  // apply, e.g. forced searches over general parameter sets).
  Walk general_step(std::size_t r) {
    if (r == 0) {
      std::uint64_t limit = std::min<std::uint64_t>(k, v - 1);
      if (limit < k) return Walk::tree_done;
      for (std::size_t j = 1; j <= k; ++j) put(0, j, true);
      for (std::size_t j = k + 1; j < v; ++j) put(0, j, false);
      Walk walk = col_arm(0, 1);
      if (walk != Walk::found) {
        for (std::size_t j = v; j-- > k + 1;) unput(0, j, false);
        for (std::size_t j = k + 1; j-- > 1;) unput(0, j, true);
      }
      return walk;
    }
    return row_arm(r, r + 1);
  }

  Walk run(SplitMix64* rng) {
    attempt_rng = rng;
    reset_state();
    return run_step(0);
  }

  BinaryMatrix extract() const {
    BinaryMatrix a(v, v);
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        if ((row_bits[i] >> j) & 1) a.set(i, j, true);
    return a;
  }
};

// ---------------------------------------------------------------------
// Bridge-pair search. Out-bridge rows are a boolean vector x (1 = the
// all-ones half on the left), pruned against the affine row identities;
// in-bridge columns are then chosen left to right with interval bounds
// on row sums, the half-block counts, the in-bridge row identities, and
// the closure targets.
// ---------------------------------------------------------------------

struct PairSearch {
  const DsrgParams& p;
  const BinaryMatrix& a;
  Driver& drv;
  std::size_t v;
  std::size_t h;  // 4t, the bridge thickness
  std::uint64_t k, t, lam, s;

  std::vector<std::uint32_t> m;            // A + sI, row-major v x v
  std::vector<std::uint64_t> col_suffix;   // col_suffix[w*v + j] = sum_{w' >= w} m[w'][j]

  // Out-bridge phase.
  std::vector<std::int8_t> x;              // -1 unassigned
  std::vector<std::uint64_t> cur_ones, cur_zeros, rem;
  std::uint64_t ones = 0, zeros = 0;

  // In-bridge phase.
  std::vector<std::uint8_t> colbits;       // current in-bridge, row-major h x v
  std::vector<std::uint32_t> row_count;    // ones per in-bridge row
  std::vector<std::uint64_t> ycur, ytarget;
  std::vector<std::uint32_t> partial5;     // sum_w C[r][w] * m[w][j], h x v
  std::vector<std::uint32_t> xrem_suffix;  // #(w' >= w with x = 1)

  SplitMix64* attempt_rng = nullptr;

  PairSearch(const BinaryMatrix& adjacency, const DsrgParams& params, Driver& driver)
      : p(params), a(adjacency), drv(driver), v(params.v),
        h(static_cast<std::size_t>(4 * params.t)), k(params.k), t(params.t),
        lam(params.lambda), s(static_cast<std::uint64_t>(params.s())),
        m(v * v, 0), col_suffix((v + 1) * v, 0), x(v, -1), cur_ones(v, 0),
        cur_zeros(v, 0), rem(v, 0), colbits(h * v, 0), row_count(h, 0),
        ycur(h, 0), ytarget(h, 0), partial5(h * v, 0), xrem_suffix(v + 1, 0) {
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        m[i * v + j] = static_cast<std::uint32_t>(a.get(i, j)) +
                       (i == j ? static_cast<std::uint32_t>(s) : 0);
    for (std::size_t w = v; w-- > 0;)
      for (std::size_t j = 0; j < v; ++j)
        col_suffix[w * v + j] = col_suffix[(w + 1) * v + j] + m[w * v + j];
    for (std::size_t r = 0; r < h; ++r)
      ytarget[r] = ((r / static_cast<std::size_t>(t)) % 2 == 0) ? t : lam;
  }

  void reset_state() {
    std::fill(x.begin(), x.end(), -1);
    std::fill(cur_ones.begin(), cur_ones.end(), 0);
    std::fill(cur_zeros.begin(), cur_zeros.end(), 0);
    ones = zeros = 0;
    for (std::size_t i = 0; i < v; ++i) {
      std::uint64_t total = 0;
      for (std::size_t w = 0; w < v; ++w) total += m[i * v + w];
      rem[i] = total;
    }
  }

  bool try_one_first() {
    if (!attempt_rng) return true;
    return (attempt_rng->next() & 1) != 0;
  }

  // ----- out-bridge phase -----

  bool x_bounds_ok() const {
    for (std::size_t i = 0; i < v; ++i) {
      if (cur_ones[i] > t || cur_zeros[i] > t) return false;
      if (cur_ones[i] + rem[i] < t || cur_zeros[i] + rem[i] < t) return false;
    }
    return true;
  }

  Walk assign_x(std::size_t w) {
    if (w == v) {
      if (ones != k || zeros != v - k || v != 2 * k) return Walk::tree_done;
      return solve_in_bridge();
    }
    if (!drv.tick(w)) return Walk::cut;
    bool one_first = (w == 0) ? true : try_one_first();
    for (int pass = 0; pass < 2; ++pass) {
      bool val = (pass == 0) == one_first;
      if (w == 0 && !val) break;  // complement symmetry: fix x_0 = 1
      if (val && ones == k) continue;
      if (!val && zeros == k) continue;
      x[w] = val ? 1 : 0;
      val ? ++ones : ++zeros;
      for (std::size_t i = 0; i < v; ++i) {
        std::uint32_t miw = m[i * v + w];
        rem[i] -= miw;
        (val ? cur_ones : cur_zeros)[i] += miw;
      }
      Walk walk = x_bounds_ok() ? assign_x(w + 1) : Walk::tree_done;
      if (walk == Walk::found || walk == Walk::cut) return walk;
      for (std::size_t i = 0; i < v; ++i) {
        std::uint32_t miw = m[i * v + w];
        rem[i] += miw;
        (val ? cur_ones : cur_zeros)[i] -= miw;
      }
      val ? --ones : --zeros;
      x[w] = -1;
    }
    return Walk::tree_done;
  }

  // ----- in-bridge phase -----

  Walk solve_in_bridge() {
    std::fill(colbits.begin(), colbits.end(), 0);
    std::fill(row_count.begin(), row_count.end(), 0);
    std::fill(ycur.begin(), ycur.end(), 0);
    std::fill(partial5.begin(), partial5.end(), 0);
    xrem_suffix[v] = 0;
    for (std::size_t w = v; w-- > 0;)
      xrem_suffix[w] = xrem_suffix[w + 1] + (x[w] == 1 ? 1 : 0);
    return assign_column(0);
  }

  // Checks run when the whole column w is decided: every row must still
  // be able to meet its sum, its closure target, and its product row.
  bool column_bounds_ok(std::size_t w) const {
    std::size_t cols_left = v - w - 1;
    std::uint32_t xrem = xrem_suffix[w + 1];
    for (std::size_t r = 0; r < h; ++r) {
      if (row_count[r] > k || row_count[r] + cols_left < k) return false;
      std::uint64_t cap = std::min<std::uint64_t>(xrem, k - row_count[r]);
      if (ycur[r] > ytarget[r] || ycur[r] + cap < ytarget[r]) return false;
      const std::uint32_t* prow = partial5.data() + r * v;
      const std::uint64_t* suffix = col_suffix.data() + (w + 1) * v;
      for (std::size_t j = 0; j < v; ++j) {
        if (prow[j] > t) return false;
        if (prow[j] + suffix[j] < t) return false;
      }
    }
    return true;
  }

  Walk assign_column(std::size_t w) {
    if (w == v) {
      for (std::size_t r = 0; r < h; ++r) {
        if (row_count[r] != k || ycur[r] != ytarget[r]) return Walk::tree_done;
        for (std::size_t j = 0; j < v; ++j)
          if (partial5[r * v + j] != t) return Walk::tree_done;
      }
      return Walk::found;
    }
    return choose_column_bits(w, 0, 0, 0);
  }

  Walk choose_column_bits(std::size_t w, std::size_t r, std::uint64_t top, std::uint64_t bot) {
    if (r == h) {
      if (!drv.tick(v + w)) return Walk::cut;
      if (!column_bounds_ok(w)) return Walk::tree_done;
      return assign_column(w + 1);
    }
    std::size_t half = h / 2;
    std::uint64_t in_block = (r < half) ? top : bot;
    std::size_t block_left = ((r < half ? half : h) - r);  // rows left in this half
    bool can_one = in_block < t && row_count[r] < k;
    bool can_zero = in_block + (block_left - 1) >= t;
    // Closure target: a one only helps when x_w = 1, and overshoot is fatal.
    if (can_one && x[w] == 1 && ycur[r] + 1 > ytarget[r]) can_one = false;

    bool one_first = try_one_first();
    for (int pass = 0; pass < 2; ++pass) {
      bool take = (pass == 0) == one_first;
      if (take && can_one) {
        colbits[r * v + w] = 1;
        ++row_count[r];
        if (x[w] == 1) ++ycur[r];
        std::uint32_t* prow = partial5.data() + r * v;
        const std::uint32_t* mrow = m.data() + w * v;
        bool over = false;
        for (std::size_t j = 0; j < v; ++j) {
          prow[j] += mrow[j];
          if (prow[j] > t) over = true;
        }
        Walk walk = over ? Walk::tree_done
                         : choose_column_bits(w, r + 1, top + (r < half ? 1 : 0),
                                              bot + (r < half ? 0 : 1));
        if (walk == Walk::found) return walk;
        for (std::size_t j = 0; j < v; ++j) prow[j] -= mrow[j];
        if (x[w] == 1) --ycur[r];
        --row_count[r];
        colbits[r * v + w] = 0;
        if (walk == Walk::cut) return walk;
      }
      if (!take && can_zero) {
        Walk walk = choose_column_bits(w, r + 1, top, bot);
        if (walk != Walk::tree_done) return walk;
      }
    }
    return Walk::tree_done;
  }

  Walk run(SplitMix64* rng) {
    attempt_rng = rng;
    reset_state();
    return assign_x(0);
  }

  BinaryMatrix extract_out_bridge() const {
    BinaryMatrix b(v, h);
    std::size_t half = h / 2;
    for (std::size_t w = 0; w < v; ++w) {
      std::size_t off = (x[w] == 1) ? 0 : half;
      for (std::size_t j = 0; j < half; ++j) b.set(w, off + j, true);
    }
    return b;
  }

  BinaryMatrix extract_in_bridge() const {
    BinaryMatrix c(h, v);
    for (std::size_t r = 0; r < h; ++r)
      for (std::size_t w = 0; w < v; ++w)
        if (colbits[r * v + w]) c.set(r, w, true);
    return c;
  }
};

// Runs the attempt loop shared by both searches: a single exhaustive pass
// when deterministic, otherwise geometrically growing randomized passes.
template <typename Search>
SearchStatus run_attempts(Search& search, Driver& drv, const SearchBudget& budget) {
  if (budget.deterministic) {
    drv.attempt_limit = 0;
    switch (search.run(nullptr)) {
      case Walk::found: return SearchStatus::found;
      case Walk::tree_done: return SearchStatus::infeasible;
      case Walk::cut: break;
    }
    return SearchStatus::exhausted;
  }
  SplitMix64 root(budget.rng_seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    drv.attempt_limit = std::uint64_t{4096} << std::min<std::uint64_t>(attempt, 40);
    drv.attempt_nodes = 0;
    SplitMix64 rng = root.split();
    switch (search.run(&rng)) {
      case Walk::found: return SearchStatus::found;
      case Walk::tree_done: return SearchStatus::infeasible;
      case Walk::cut:
        if (drv.out_of_budget) return SearchStatus::exhausted;
        ++drv.stats.restarts;
        break;
    }
  }
}

}  // namespace

SeedMatrixResult find_seed_matrix(const DsrgParams& params, const SearchBudget& budget,
                                  bool force, const ProgressFn& progress) {
  DsrgParams p = DsrgParams::checked(params.v, params.k, params.t, params.lambda, params.mu);
  SeedMatrixResult result;
  if (!force) {
    result.precheck = precheck_family_feasibility(p);
    if (!result.precheck.empty()) {
      result.status = SearchStatus::infeasible_precheck;
      return result;
    }
  }
  if (p.v > 64)
    throw UnsupportedError("adjacency search supports orders up to 64, got " +
                           std::to_string(p.v));

  Driver drv(budget, progress);
  MatrixSearch search(p, drv);
  result.status = run_attempts(search, drv, budget);
  drv.stats.wall_seconds = drv.elapsed();
  result.stats = drv.stats;
  if (result.status == SearchStatus::found) {
    BinaryMatrix found = search.extract();
    if (!verify_algebraic(found, p).ok || !verify_combinatorial(found, p).ok)
      throw Error("internal error: search produced a matrix that fails verification");
    result.adjacency = std::move(found);
  }
  return result;
}

SeedPairResult find_seed_pair(const BinaryMatrix& adjacency, const DsrgParams& params,
                              const SearchBudget& budget, bool force,
                              const ProgressFn& progress) {
  DsrgParams p = DsrgParams::checked(params.v, params.k, params.t, params.lambda, params.mu);
  if (adjacency.rows() != p.v || adjacency.cols() != p.v)
    throw DimensionError("adjacency matrix must be " + std::to_string(p.v) + "x" +
                         std::to_string(p.v) + ", got " + std::to_string(adjacency.rows()) +
                         "x" + std::to_string(adjacency.cols()));
  if (p.s() <= 0)
    throw UnsupportedError("bridge search requires t > lambda even with force");

  SeedPairResult result;
  if (!force) {
    result.precheck = precheck_family_feasibility(p);
    if (!result.precheck.empty()) {
      result.status = SearchStatus::infeasible_precheck;
      return result;
    }
    VerifyReport core = verify_algebraic(adjacency, p);
    if (!core.ok)
      throw SeedContractError("adjacency matrix fails verification: " + core.summary());
  }

  Driver drv(budget, progress);
  PairSearch search(adjacency, p, drv);
  result.status = run_attempts(search, drv, budget);
  drv.stats.wall_seconds = drv.elapsed();
  result.stats = drv.stats;
  if (result.status == SearchStatus::found) {
    BinaryMatrix b = search.extract_out_bridge();
    BinaryMatrix c = search.extract_in_bridge();
    if (!force) {
      // Full contract validation; throws on any internal inconsistency.
      FamilySeed::validated(p, adjacency, b, c);
    }
    result.out_bridge = std::move(b);
    result.in_bridge = std::move(c);
  }
  return result;
}

FamilySeed make_family_seed(const DsrgParams& params, BinaryMatrix adjacency,
                            BinaryMatrix out_bridge, BinaryMatrix in_bridge) {
  FamilySeed seed = FamilySeed::validated(params, std::move(adjacency),
                                          std::move(out_bridge), std::move(in_bridge));
  FamilyTerm next = family_term(seed, 2);
  VerifyReport report = verify_algebraic(next.adjacency, next.params);
  if (!report.ok)
    throw SeedContractError("the doubled family member fails verification: " +
                            report.summary());
  return seed;
}

}  // namespace dsrg
