#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "auxnim/engine.hpp"
#include "auxnim/hypergraph.hpp"

using namespace auxnim;

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph::make(2, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::make(2, {{1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::make(2, {{3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::make(2, {{0}}), std::invalid_argument);
  CHECK_NOTHROW(Hypergraph::make(3, {{1}, {2, 3}, {1, 2, 3}}));
}

TEST_CASE("single edge over one heap is plain Nim") {
  HypergraphEngine nim(Hypergraph::make(1, {{1}}));
  for (std::uint64_t k = 0; k <= 10; ++k) {
    std::vector<std::uint64_t> heaps{k};
    CHECK(nim.sg(heaps) == k);
  }
}

TEST_CASE("singleton edges form a disjunctive sum") {
  HypergraphEngine sum(Hypergraph::make(2, {{1}, {2}}));
  std::vector<std::uint64_t> heaps{4, 5};
  CHECK(sum.sg(heaps) == 1);
  for (std::uint64_t b = 0; b <= 6; ++b) {
    for (std::uint64_t c = 0; c <= 6; ++c) {
      heaps = {b, c};
      CHECK(sum.sg(heaps) == (b ^ c));
    }
  }
}

TEST_CASE("the intro position through the hypergraph encoding") {
  HypergraphEngine h(
      Hypergraph::make(3, {{1}, {2}, {3}, {1, 2}, {1, 3}}));
  std::vector<std::uint64_t> heaps{1, 1, 1};
  CHECK(h.sg(heaps) == 3);
}

TEST_CASE("dimension mismatch is an error") {
  HypergraphEngine h(auxiliary_hypergraph(3));
  std::vector<std::uint64_t> wrong{1, 1};
  CHECK_THROWS_AS(h.sg(wrong), std::invalid_argument);
}

TEST_CASE("heap cap applies") {
  HypergraphEngine h(auxiliary_hypergraph(2), 4);
  std::vector<std::uint64_t> heaps{5, 0};
  CHECK_THROWS_AS(h.sg(heaps), CapExceededError);
}

TEST_CASE("auxiliary hypergraph equals the dedicated engine (small sweep)") {
  Engine engine;
  HypergraphEngine nimh(auxiliary_hypergraph(3));
  for (std::uint64_t x1 = 0; x1 <= 6; ++x1) {
    for (std::uint64_t x2 = 0; x2 <= 6; ++x2) {
      for (std::uint64_t x3 = 0; x3 <= 6; ++x3) {
        std::vector<std::uint64_t> heaps{x1, x2, x3};
        CAPTURE(x1);
        CAPTURE(x2);
        CAPTURE(x3);
        CHECK(nimh.sg(heaps) == engine.sg(x1, {x2, x3}));
      }
    }
  }
}
