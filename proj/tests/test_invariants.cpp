#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "szt/invariants.hpp"

using namespace szt;
using namespace szt::testing;

namespace {

const BigradedSeries kTriangleSeries = bp({{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 0, 1},
                                           {0, 1, 2}, {1, 1, 4}, {2, 1, 3},
                                           {0, 2, 1}, {1, 2, 2}});

}  // namespace

TEST_CASE("subset expansion of the series") {
  CHECK(hilbert_via_tutte(triangle()) == kTriangleSeries);
  auto one = bp({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  CHECK(hilbert_via_tutte(arr(1, {{1}})) == one);
  CHECK(hilbert_via_tutte(two_generic()) == one * one);
  CHECK(hilbert_via_tutte(Arrangement(2, {})) == bp({{0, 0, 1}}));

  // direct sum of a doubled point and a simple point
  auto left = bp({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(hilbert_via_tutte(arr(2, {{1, 0}, {1, 0}, {0, 1}})) == left * one);
}

TEST_CASE("tutte substitution matches the subset expansion") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = random_arrangement(rng, 3, 5);
    auto direct = hilbert_via_tutte(A);
    CHECK(direct == hilbert_from_tutte_poly(tutte(A), A.size(), A.rank()));
  }
  CHECK_THROWS_AS(hilbert_from_tutte_poly(bp({{2, 0, 1}}), 1, 1), std::invalid_argument);
}

TEST_CASE("recursion matches the subset expansion") {
  CHECK(hilbert_via_recursion(triangle()) == kTriangleSeries);
  CHECK(hilbert_via_recursion(Arrangement(3, {})) == bp({{0, 0, 1}}));
  Arrangement only_loop(1, {{{Rat(0)}, "z"}});
  CHECK(hilbert_via_recursion(only_loop) == bp({{0, 0, 1}}));

  Rng rng(67);
  RecursionEngine engine;
  for (int trial = 0; trial < 12; ++trial) {
    auto A = random_arrangement(rng, 3, 5);
    CHECK(engine.hilbert(A) == hilbert_via_tutte(A));
  }
}

TEST_CASE("loops do not change the series") {
  Arrangement with_loop(2, {{{Rat(1), Rat(0)}, "a"},
                            {{Rat(0), Rat(0)}, "z"},
                            {{Rat(0), Rat(1)}, "b"},
                            {{Rat(1), Rat(-1)}, "c"}});
  CHECK(hilbert_via_tutte(with_loop) == kTriangleSeries);
  CHECK(hilbert_via_recursion(with_loop) == kTriangleSeries);
}

TEST_CASE("deleting a coloop restricts to it") {
  auto A = arr(3, {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  REQUIRE(A.is_coloop(0));
  CHECK(hilbert_via_tutte(A.deleted(0)) == hilbert_via_tutte(A.restricted(0)));
}

TEST_CASE("face counts of a generic deformation") {
  CHECK(generic_fvector(triangle()) == std::vector<Int>{3, 9, 7});
  CHECK(generic_fvector(arr(1, {{1}})) == std::vector<Int>{1, 2});
  auto K3 = Arrangement::from_graph(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(generic_fvector(K3) == std::vector<Int>{0, 3, 9, 7});

  // total face count equals the series dimension count
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    auto A = random_arrangement(rng, 3, 5);
    Int total = 0;
    for (const auto& f : generic_fvector(A)) total += f;
    CHECK(total == hilbert_via_tutte(A).eval(Int(1), Int(1)));
  }
}

TEST_CASE("theta free layer is the classical external series") {
  CHECK(classical_external_series(triangle()) ==
        bp({{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 0, 1}}));
  CHECK(classical_external_series(arr(1, {{1}, {1}})) ==
        bp({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}}));

  // it always matches the t = 0 layer of the full series
  Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    auto A = random_arrangement(rng, 2, 4);
    auto S = hilbert_via_tutte(A);
    BigradedSeries layer;
    for (const auto& [k, c] : S.terms())
      if (k.second == 0) layer.add_term(k.first, 0, c);
    CHECK(layer == classical_external_series(A));
  }
}

TEST_CASE("top total degree against the characteristic polynomial") {
  auto tc = top_summand_check(triangle(), kTriangleSeries);
  CHECK(tc.match);
  CHECK(tc.top == bp({{3, 0, 1}, {2, 1, 3}, {1, 2, 2}}));
  CHECK(tc.predicted == tc.top);

  Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    auto A = random_arrangement(rng, 3, 5);
    CHECK(top_summand_check(A, hilbert_via_tutte(A)).match);
  }
}

TEST_CASE("doubled arrangement region count") {
  auto rep = doubled_region_check(triangle(), kTriangleSeries);
  CHECK(rep.dimension == 19);
  CHECK(rep.doubled_independent == 19);
  CHECK(rep.count_match);
  CHECK(rep.series_match);
  CHECK(rep.substituted == rep.doubled_external);
  CHECK(rep.substituted ==
        bp({{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 0, 4}, {4, 0, 5}, {5, 0, 3}, {6, 0, 1}}));

  Rng rng(83);
  for (int trial = 0; trial < 8; ++trial) {
    auto A = random_arrangement(rng, 3, 4);
    auto r = doubled_region_check(A, hilbert_via_tutte(A));
    CHECK(r.count_match);
    CHECK(r.series_match);
  }
}

TEST_CASE("offset zero variant versus its substitution formula") {
  auto rep = internal_variant_check(triangle());
  CHECK(rep.lhs == bp({{0, 0, 1}, {1, 0, 2}, {0, 1, 2}, {1, 1, 1}, {0, 2, 1}}));
  CHECK(rep.rhs == rep.lhs);
  CHECK(rep.equal);
}

TEST_CASE("log concavity scan") {
  CHECK(log_concavity(kTriangleSeries).ok);
  CHECK(log_concavity(bp({{0, 0, 1}})).ok);

  auto bad = log_concavity(bp({{0, 0, 1}, {1, 0, 1}, {2, 0, 3}}));
  CHECK(!bad.ok);
  CHECK(!bad.violations.empty());

  auto gap = log_concavity(bp({{0, 0, 1}, {2, 0, 1}}));
  CHECK(!gap.ok);
}

TEST_CASE("region identity for graphs") {
  auto K3 = graph_region_identity(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(K3.series_value == 19);
  CHECK(K3.tutte_value == 19);
  CHECK(K3.connected);
  CHECK(K3.equal);

  auto two_edges = graph_region_identity(4, {{1, 2}, {3, 4}});
  CHECK(two_edges.series_value == 9);
  CHECK(!two_edges.connected);
  CHECK(two_edges.equal);

  Rng rng(89);
  for (int trial = 0; trial < 8; ++trial) {
    const int nv = rng.uniform(3, 5);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= nv; ++u)
      for (int v = u + 1; v <= nv; ++v)
        if (rng.uniform(0, 1)) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    CHECK(graph_region_identity(nv, edges).equal);
  }
}
