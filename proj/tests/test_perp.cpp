#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "szt/perp.hpp"

using namespace szt;
using namespace szt::testing;

namespace {

SuperElement xv(int i) { return SuperElement::variable(2, i); }
SuperElement th(int i) { return SuperElement::theta(2, i); }

// every element lies in the system and together they fill each slice exactly
void check_spanning(const PerpSystem& sys, const std::vector<SuperElement>& elems) {
  const int n = sys.arrangement().dim();
  std::map<Bidegree, std::vector<const SuperElement*>> by_bd;
  for (const auto& f : elems) {
    CHECK(sys.contains(f));
    auto bd = f.bidegree();
    REQUIRE(bd.has_value());
    by_bd[*bd].push_back(&f);
  }
  for (const auto& [bd, fs] : by_bd) {
    auto mons = x_monomials(n, bd.bos);
    auto words = theta_words(n, bd.ferm);
    std::map<XExp, int> mi;
    std::map<ThetaWord, int> wi;
    for (std::size_t i = 0; i < mons.size(); ++i) mi[mons[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < words.size(); ++i) wi[words[i]] = static_cast<int>(i);
    RowReducer red(static_cast<int>(mons.size() * words.size()));
    for (const auto* f : fs) {
      RatVec row(red.cols(), Rat(0));
      for (const auto& [k, c] : f->terms()) row[mi.at(k.x) * words.size() + wi.at(k.th)] = c;
      red.add_row(row);
    }
    CHECK(red.rank() == sys.slice_dim(bd));
    CHECK(static_cast<int>(fs.size()) == sys.slice_dim(bd));
  }
}

}  // namespace

TEST_CASE("slice monomial enumeration") {
  CHECK(x_monomials(2, 2) == std::vector<XExp>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(x_monomials(1, 0) == std::vector<XExp>{{0}});
  CHECK(theta_words(3, 2) == std::vector<ThetaWord>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(theta_words(2, 0) == std::vector<ThetaWord>{{}});
  CHECK(theta_words(2, 3).empty());
}

TEST_CASE("one hyperplane on the line") {
  PerpSystem sys(arr(1, {{1}}), 1);
  CHECK(sys.hilbert() == bp({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("one diagonal hyperplane in the plane") {
  PerpSystem sys(arr(2, {{1, -1}}), 1);
  CHECK(sys.hilbert() == bp({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(sys.operators().size() == 8);
  check_spanning(sys, {SuperElement::constant(2, 1), xv(0) - xv(1), th(0) - th(1)});
  CHECK(!sys.contains(xv(0)));
  CHECK(!sys.contains(th(0)));
  CHECK(sys.slice_dim({2, 0}) == 0);
  CHECK(sys.slice_dim({1, 1}) == 0);
}

TEST_CASE("two independent hyperplanes in the plane") {
  PerpSystem sys(two_generic(), 1);
  auto expect = bp({{0, 0, 1}}) + bp({{1, 0, 1}, {0, 1, 1}});
  expect = expect * expect;  // (1 + q + t)^2
  CHECK(sys.hilbert() == expect);
  check_spanning(sys, {
                          SuperElement::constant(2, 1),
                          xv(0),
                          xv(0) - xv(1),
                          th(0),
                          th(0) - th(1),
                          xv(0) * (th(0) - th(1)),
                          (xv(0) - xv(1)) * th(0),
                          xv(0) * (xv(0) - xv(1)),
                          th(0) * (th(0) - th(1)),
                      });
}

TEST_CASE("a doubled point") {
  PerpSystem sys(arr(1, {{1}, {1}}), 1);
  SuperElement x = SuperElement::variable(1, 0);
  SuperElement t = SuperElement::theta(1, 0);
  CHECK(sys.hilbert() == bp({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  check_spanning(sys, {SuperElement::constant(1, 1), x, x.pow(2), t, x * t});
  CHECK(!sys.contains(x.pow(3)));
  CHECK(!sys.contains(x.pow(2) * t));
}

TEST_CASE("the triangle arrangement") {
  PerpSystem sys(triangle(), 1);
  auto expect = bp({{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 0, 1},
                    {0, 1, 2}, {1, 1, 4}, {2, 1, 3},
                    {0, 2, 1}, {1, 2, 2}});
  CHECK(sys.hilbert() == expect);
  CHECK(sys.max_bos() == 3);

  // low slices see no operator at all: the smallest exponent is three
  CHECK(sys.slice_dim({2, 0}) == 3);
  CHECK(sys.slice_dim({1, 1}) == 4);
  CHECK(sys.slice_dim({4, 0}) == 0);

  // the top bosonic slice is the product of the three defining forms
  auto basis = sys.kernel_basis({3, 0});
  REQUIRE(basis.size() == 1);
  auto prod = xv(0) * xv(1) * (xv(0) - xv(1));
  CHECK(basis[0] == prod);
  CHECK(sys.contains(prod));
  CHECK(!sys.contains(xv(0).pow(3)));
  CHECK(!sys.contains(SuperElement::constant(2, 1) + xv(0).pow(3)));
  CHECK(sys.contains(SuperElement::constant(2, 1) + xv(0)));
}

TEST_CASE("central variant of the triangle") {
  PerpSystem sys(triangle(), 0);
  CHECK(sys.offset() == 0);
  CHECK(sys.hilbert() == bp({{0, 0, 1}, {1, 0, 2}, {0, 1, 2}, {1, 1, 1}, {0, 2, 1}}));
}

TEST_CASE("internal variant of the triangle") {
  PerpSystem sys(triangle(), -1);
  CHECK(sys.hilbert() == bp({{0, 0, 1}}));
}

TEST_CASE("offset two for two coordinate hyperplanes") {
  PerpSystem sys(arr(2, {{1, 0}, {0, 1}}), 2);
  auto expect = bp({{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 0, 2},
                    {0, 1, 2}, {1, 1, 4}, {2, 1, 4}, {3, 1, 1},
                    {0, 2, 1}, {1, 2, 2}, {2, 2, 1}});
  CHECK(sys.hilbert() == expect);
}

TEST_CASE("coordinate multiplicity product") {
  // x1 doubled and x2 simple split into independent single variable factors,
  // so the series is the product of the two line series
  PerpSystem sys(arr(2, {{1, 0}, {1, 0}, {0, 1}}), 1);
  auto left = bp({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  auto right = bp({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  CHECK(sys.hilbert() == left * right);
}

TEST_CASE("loops never change the system") {
  Arrangement with_loop(2, {{{Rat(1), Rat(0)}, "a"},
                            {{Rat(0), Rat(0)}, "z"},
                            {{Rat(0), Rat(1)}, "b"},
                            {{Rat(1), Rat(-1)}, "c"}});
  PerpSystem a(with_loop, 1);
  PerpSystem b(with_loop.without_loops(), 1);
  CHECK(a.hilbert() == b.hilbert());
  CHECK(a.hilbert() == PerpSystem(triangle(), 1).hilbert());

  Arrangement only_loop(1, {{{Rat(0)}, "z"}});
  CHECK(PerpSystem(only_loop, 1).hilbert() == bp({{0, 0, 1}}));
}

TEST_CASE("membership validates the variable count") {
  PerpSystem sys(triangle(), 1);
  CHECK_THROWS_AS(sys.contains(SuperElement::constant(3, 1)), std::invalid_argument);
}

TEST_CASE("kernel bases are members of the right bidegree") {
  Rng rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    auto A = random_arrangement(rng, 2, 4);
    PerpSystem sys(A, 1);
    auto H = sys.hilbert();
    Int total = 0;
    for (const auto& [k, c] : H.terms()) {
      auto basis = sys.kernel_basis({k.first, k.second});
      CHECK(Int(basis.size()) == c);
      for (const auto& f : basis) {
        CHECK(sys.contains(f));
        REQUIRE(f.bidegree().has_value());
        CHECK(f.bidegree()->bos == k.first);
        CHECK(f.bidegree()->ferm == k.second);
      }
      total += c;
    }
    CHECK(total == H.eval(Int(1), Int(1)));
  }
}
