#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "dsrg/errors.hpp"
#include "dsrg/family.hpp"
#include "dsrg/matrix_ops.hpp"
#include "dsrg/search.hpp"
#include "dsrg/verify.hpp"
#include "support/test_support.hpp"

using dsrg::BinaryMatrix;
using dsrg::DsrgParams;
using dsrg::SearchBudget;
using dsrg::SearchStatus;

namespace {

// Two-vertex instance small enough to reason about by hand: the unique
// loop-free 1-regular digraph is the swap, and its two-path counts are
// 1 / 0 / 1.
DsrgParams tiny() { return DsrgParams::checked(2, 1, 1, 0, 1); }

// Naive check of the six bridge-pair identities for arbitrary candidate
// matrices, written against the reference Grid arithmetic only.
bool pair_identities_hold(const BinaryMatrix& a, const BinaryMatrix& b,
                          const BinaryMatrix& c, const DsrgParams& p) {
  using testsup::Grid;
  std::uint64_t t = p.t, s = p.t - p.lambda;
  Grid ga = testsup::to_grid(a), gb = testsup::to_grid(b), gc = testsup::to_grid(c);
  Grid gp = testsup::to_grid(dsrg::exchange_pattern(1, t));
  Grid m = ga;
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, i) += s;

  auto is_const = [](const Grid& g, std::uint64_t val) {
    for (std::uint64_t e : g.e)
      if (e != val) return false;
    return true;
  };
  Grid cb_sp = testsup::naive_mul(gc, gb);
  for (std::size_t i = 0; i < cb_sp.rows; ++i)
    for (std::size_t j = 0; j < cb_sp.cols; ++j) cb_sp.at(i, j) += s * gp.at(i, j);
  return is_const(testsup::naive_mul(gb, gc), t) &&
         is_const(testsup::naive_mul(gb, gp), t) &&
         is_const(testsup::naive_mul(gp, gc), t) &&
         is_const(testsup::naive_mul(m, gb), t) &&
         is_const(testsup::naive_mul(gc, m), t) && is_const(cb_sp, t);
}

// Every "blocky" candidate pair for the two-vertex instance: out-bridge
// rows pick a half, in-bridge columns place one one per half.
bool tiny_pair_exists_by_enumeration(const BinaryMatrix& a, const DsrgParams& p) {
  const std::size_t v = 2, h = 4;
  for (unsigned xm = 0; xm < 4; ++xm) {
    BinaryMatrix b(v, h);
    for (std::size_t w = 0; w < v; ++w) {
      std::size_t off = (xm >> w) & 1 ? 0 : 2;
      b.set(w, off, true);
      b.set(w, off + 1, true);
    }
    for (unsigned c0 = 0; c0 < 4; ++c0)
      for (unsigned c1 = 0; c1 < 4; ++c1) {
        BinaryMatrix c(h, v);
        unsigned picks[2] = {c0, c1};
        for (std::size_t col = 0; col < v; ++col) {
          c.set((picks[col] >> 1) & 1, col, true);       // row 0 or 1 (top half)
          c.set(2 + (picks[col] & 1), col, true);        // row 2 or 3 (bottom half)
        }
        if (pair_identities_hold(a, b, c, p)) return true;
      }
  }
  return false;
}

}  // namespace

TEST_CASE("the two-vertex adjacency search finds the swap matrix") {
  dsrg::SeedMatrixResult res = dsrg::find_seed_matrix(tiny(), SearchBudget{});
  REQUIRE(res.status == SearchStatus::found);
  REQUIRE(res.adjacency.has_value());
  CHECK(*res.adjacency == dsrg::matrix_from_strings({"01", "10"}));
}

TEST_CASE("pair search verdict matches exhaustive enumeration on the tiny instance") {
  BinaryMatrix a = dsrg::matrix_from_strings({"01", "10"});
  DsrgParams p = tiny();
  bool exists = tiny_pair_exists_by_enumeration(a, p);
  dsrg::SeedPairResult res = dsrg::find_seed_pair(a, p, SearchBudget{});
  if (exists) {
    REQUIRE(res.status == SearchStatus::found);
    REQUIRE(res.out_bridge.has_value());
    REQUIRE(res.in_bridge.has_value());
    CHECK(pair_identities_hold(a, *res.out_bridge, *res.in_bridge, p));
  } else {
    CHECK(res.status == SearchStatus::infeasible);
  }
}

TEST_CASE("found seeds are independently valid") {
  DsrgParams p = DsrgParams::checked(6, 3, 2, 1, 2);
  dsrg::SeedMatrixResult seed = dsrg::find_seed_matrix(p, SearchBudget{});
  REQUIRE(seed.status == SearchStatus::found);
  CHECK(dsrg::verify_combinatorial(*seed.adjacency, p).ok);

  dsrg::SeedPairResult pair = dsrg::find_seed_pair(*seed.adjacency, p, SearchBudget{});
  REQUIRE(pair.status == SearchStatus::found);
  CHECK(pair_identities_hold(*seed.adjacency, *pair.out_bridge, *pair.in_bridge, p));

  dsrg::FamilySeed fam = dsrg::make_family_seed(p, *seed.adjacency, *pair.out_bridge,
                                                *pair.in_bridge);
  dsrg::FamilyTerm t2 = dsrg::family_term(fam, 2);
  CHECK(dsrg::verify_combinatorial(t2.adjacency, t2.params).ok);
}

TEST_CASE("deterministic runs repeat exactly") {
  DsrgParams p = DsrgParams::checked(8, 4, 3, 1, 3);
  dsrg::SeedMatrixResult r1 = dsrg::find_seed_matrix(p, SearchBudget{});
  dsrg::SeedMatrixResult r2 = dsrg::find_seed_matrix(p, SearchBudget{});
  REQUIRE(r1.status == SearchStatus::found);
  REQUIRE(r2.status == SearchStatus::found);
  CHECK(r1.stats.nodes == r2.stats.nodes);
  CHECK(r1.stats.restarts == 0);
  CHECK(*r1.adjacency == *r2.adjacency);

  dsrg::SeedPairResult p1 = dsrg::find_seed_pair(*r1.adjacency, p, SearchBudget{});
  dsrg::SeedPairResult p2 = dsrg::find_seed_pair(*r1.adjacency, p, SearchBudget{});
  REQUIRE(p1.status == SearchStatus::found);
  CHECK(p1.stats.nodes == p2.stats.nodes);
  CHECK(*p1.out_bridge == *p2.out_bridge);
  CHECK(*p1.in_bridge == *p2.in_bridge);
}

TEST_CASE("randomized runs are reproducible per rng seed and still verified") {
  DsrgParams p = DsrgParams::checked(10, 5, 3, 2, 3);
  SearchBudget budget;
  budget.deterministic = false;
  budget.rng_seed = 77;
  dsrg::SeedMatrixResult r1 = dsrg::find_seed_matrix(p, budget);
  dsrg::SeedMatrixResult r2 = dsrg::find_seed_matrix(p, budget);
  REQUIRE(r1.status == SearchStatus::found);
  CHECK(r1.stats.nodes == r2.stats.nodes);
  CHECK(*r1.adjacency == *r2.adjacency);
  CHECK(dsrg::verify_combinatorial(*r1.adjacency, p).ok);
}

TEST_CASE("violating parameters stop at the precheck") {
  DsrgParams bad_degree = DsrgParams::checked(8, 4, 2, 1, 2);  // k != t + lambda
  dsrg::SeedPairResult res =
      dsrg::find_seed_pair(dsrg::ones(8, 8), bad_degree, SearchBudget{});
  CHECK(res.status == SearchStatus::infeasible_precheck);
  CHECK_FALSE(res.precheck.empty());
  CHECK_FALSE(res.out_bridge.has_value());

  dsrg::SeedMatrixResult seed = dsrg::find_seed_matrix(
      DsrgParams::checked(7, 3, 2, 1, 2), SearchBudget{});  // v != 2k
  CHECK(seed.status == SearchStatus::infeasible_precheck);
  CHECK_FALSE(seed.precheck.empty());
}

TEST_CASE("budgets produce exhausted, not false infeasibility") {
  DsrgParams p = DsrgParams::checked(12, 6, 4, 2, 4);
  SearchBudget tight;
  tight.max_nodes = 50;
  dsrg::SeedMatrixResult res = dsrg::find_seed_matrix(p, tight);
  CHECK(res.status == SearchStatus::exhausted);
  CHECK(res.stats.nodes <= 60);
}

TEST_CASE("force mode proves infeasibility exhaustively on a violating tuple") {
  // k != t + lambda (3 != 3 + 1), mu = t, s > 0; the precheck would
  // reject, force runs the complete pair search instead. The adjacency is
  // the 3-regular circulant on six vertices.
  DsrgParams bad = DsrgParams::checked(6, 3, 3, 1, 3);
  BinaryMatrix a(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t d = 1; d <= 3; ++d) a.set(i, (i + d) % 6, true);
  SearchBudget budget;
  budget.max_nodes = 80'000'000;
  dsrg::SeedPairResult res = dsrg::find_seed_pair(a, bad, budget, /*force=*/true);
  CHECK(res.status == SearchStatus::infeasible);
}

TEST_CASE("force mode still needs a positive closure deficit") {
  DsrgParams flat = DsrgParams::checked(6, 3, 2, 2, 2);  // t == lambda
  CHECK_THROWS_AS(
      dsrg::find_seed_pair(dsrg::ones(6, 6), flat, SearchBudget{}, /*force=*/true),
      dsrg::UnsupportedError);
}

TEST_CASE("orders above 64 are unsupported for the adjacency search") {
  DsrgParams big = DsrgParams::checked(66, 33, 17, 16, 17);
  CHECK_THROWS_AS(dsrg::find_seed_matrix(big, SearchBudget{}), dsrg::UnsupportedError);
}

TEST_CASE("pair search rejects a non-matching adjacency without force") {
  DsrgParams p = DsrgParams::checked(6, 3, 2, 1, 2);
  BinaryMatrix wrong(6, 6);  // empty graph: degrees are off
  CHECK_THROWS_AS(dsrg::find_seed_pair(wrong, p, SearchBudget{}), dsrg::SeedContractError);
}

TEST_CASE("progress callback reports running node counts") {
  DsrgParams p = DsrgParams::checked(14, 7, 4, 3, 4);
  SearchBudget budget;
  budget.max_nodes = 400'000;
  std::uint64_t calls = 0, last_nodes = 0;
  dsrg::SeedMatrixResult res = dsrg::find_seed_matrix(
      p, budget, false, [&](const dsrg::SearchStats& st, std::size_t) {
        ++calls;
        last_nodes = st.nodes;
      });
  CHECK(res.status == SearchStatus::exhausted);
  CHECK(calls >= 1);
  CHECK(last_nodes >= 0x10000);
}

TEST_CASE("search results carry wall-clock stats") {
  dsrg::SeedMatrixResult res =
      dsrg::find_seed_matrix(DsrgParams::checked(6, 3, 2, 1, 2), SearchBudget{});
  REQUIRE(res.status == SearchStatus::found);
  CHECK(res.stats.wall_seconds >= 0.0);
  CHECK(res.stats.nodes >= 1);
}
