#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "szt/matroid.hpp"

using namespace szt;
using namespace szt::testing;

namespace {
using IV = std::vector<int>;
}

TEST_CASE("basis enumeration") {
  auto B = enumerate_bases(triangle());
  REQUIRE(B.size() == 3);
  CHECK(B[0] == IV{0, 1});
  CHECK(B[1] == IV{0, 2});
  CHECK(B[2] == IV{1, 2});

  // rank zero has the empty basis and nothing else
  Arrangement loops(1, {{{Rat(0)}, "z"}});
  auto BL = enumerate_bases(loops);
  REQUIRE(BL.size() == 1);
  CHECK(BL[0].empty());

  CHECK(enumerate_bases(Arrangement::from_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}))
            .size() == 16);
}

TEST_CASE("activity classification of the triangle bases") {
  auto recs = all_activities(triangle());
  REQUIRE(recs.size() == 3);

  CHECK(recs[0].basis == IV{0, 1});
  CHECK(recs[0].ext_active == IV{});
  CHECK(recs[0].ext_passive == IV{2});
  CHECK(recs[0].int_active == IV{0, 1});
  CHECK(recs[0].int_passive == IV{});

  CHECK(recs[1].basis == IV{0, 2});
  CHECK(recs[1].ext_active == IV{});
  CHECK(recs[1].ext_passive == IV{1});
  CHECK(recs[1].int_active == IV{0});
  CHECK(recs[1].int_passive == IV{2});

  CHECK(recs[2].basis == IV{1, 2});
  CHECK(recs[2].ext_active == IV{0});
  CHECK(recs[2].ext_passive == IV{});
  CHECK(recs[2].int_active == IV{});
  CHECK(recs[2].int_passive == IV{1, 2});
}

TEST_CASE("activity sets partition the ground set") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto A = random_arrangement(rng, 3, 5);
    for (const auto& r : all_activities(A)) {
      CHECK(r.int_active.size() + r.int_passive.size() == r.basis.size());
      CHECK(r.ext_active.size() + r.ext_passive.size() == A.size() - r.basis.size());
      for (int h : r.int_active) CHECK(std::find(r.basis.begin(), r.basis.end(), h) != r.basis.end());
      for (int h : r.ext_active) CHECK(std::find(r.basis.begin(), r.basis.end(), h) == r.basis.end());
    }
  }
}

TEST_CASE("last hyperplane activity when neither loop nor coloop") {
  Rng rng(37);
  int usable = 0;
  for (int trial = 0; trial < 60 && usable < 25; ++trial) {
    auto A = random_arrangement(rng, 3, 5);
    const int h0 = A.size() - 1;
    if (A.is_loop(h0) || A.is_coloop(h0)) continue;
    ++usable;
    auto D = A.deleted(h0);
    auto recs = all_activities(A);
    auto drecs = all_activities(D);
    std::size_t without = 0;
    for (const auto& r : recs) {
      const bool has = std::find(r.basis.begin(), r.basis.end(), h0) != r.basis.end();
      if (has) {
        // the last element never survives an exchange against earlier ones
        CHECK(std::find(r.int_passive.begin(), r.int_passive.end(), h0) != r.int_passive.end());
      } else {
        // same record as in the deletion except h0 joins the passive cocircuit side
        REQUIRE(without < drecs.size());
        const auto& d = drecs[without++];
        CHECK(r.basis == d.basis);
        CHECK(r.ext_active == d.ext_active);
        CHECK(r.int_active == d.int_active);
        CHECK(r.int_passive == d.int_passive);
        auto ep = d.ext_passive;
        ep.push_back(h0);
        CHECK(r.ext_passive == ep);
      }
    }
    CHECK(without == drecs.size());
  }
  CHECK(usable == 25);
}

TEST_CASE("tutte polynomial of the triangle") {
  auto expect = bp({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  CHECK(tutte(triangle(), TutteMethod::SubsetSum) == expect);
  CHECK(tutte(triangle(), TutteMethod::DeletionContraction) == expect);
  CHECK(tutte(triangle(), TutteMethod::Activity) == expect);
}

TEST_CASE("tutte polynomial of the complete graph on four vertices") {
  auto K4 = Arrangement::from_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto expect = bp({{3, 0, 1}, {2, 0, 3}, {1, 0, 2}, {1, 1, 4}, {0, 1, 2}, {0, 2, 3}, {0, 3, 1}});
  CHECK(tutte(K4, TutteMethod::SubsetSum) == expect);
  CHECK(tutte(K4, TutteMethod::DeletionContraction) == expect);
  CHECK(tutte(K4, TutteMethod::Activity) == expect);
}

TEST_CASE("tutte polynomial degenerate cases") {
  CHECK(tutte(Arrangement(2, {})) == bp({{0, 0, 1}}));
  CHECK(tutte(arr(1, {{1}})) == bp({{1, 0, 1}}));
  Arrangement loop(1, {{{Rat(0)}, "z"}});
  CHECK(tutte(loop) == bp({{0, 1, 1}}));
  // a doubled point is one coloop plus one parallel element
  CHECK(tutte(arr(1, {{1}, {2}})) == bp({{1, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("three methods agree on random arrangements") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto A = random_arrangement(rng, 3, 5);
    auto s = tutte(A, TutteMethod::SubsetSum);
    CHECK(s == tutte(A, TutteMethod::DeletionContraction));
    CHECK(s == tutte(A, TutteMethod::Activity));
  }
}

TEST_CASE("characteristic polynomial coefficients") {
  CHECK(characteristic_poly(triangle()) == std::vector<Int>{2, -3, 1});
  CHECK(characteristic_poly(arr(1, {{1}})) == std::vector<Int>{-1, 1});
  auto K4 = Arrangement::from_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(characteristic_poly(K4) == std::vector<Int>{-6, 11, -6, 1});
}

TEST_CASE("doubling formula for the tutte polynomial") {
  Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    auto A = random_arrangement(rng, 3, 4);
    auto direct = tutte(A.doubled(), TutteMethod::SubsetSum);
    auto derived = thicken_tutte(tutte(A), A.rank(), 2);
    CHECK(direct == derived);
  }
  CHECK_THROWS_AS(thicken_tutte(bp({{0, 0, 1}}), 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(thicken_tutte(bp({{2, 0, 1}}), 1, 2), std::invalid_argument);
}
