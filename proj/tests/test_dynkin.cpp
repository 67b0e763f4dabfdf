#include "doctest.h"
#include "oracles.hpp"
#include "orbitcy/dynkin.hpp"

using namespace orbitcy;

TEST_SUITE("dynkin") {
  TEST_CASE("standard data") {
    auto a3 = build_diagram('A', 3);
    CHECK(a3.coxeter_number == 4);
    CHECK(a3.positive_roots() == 6);
    auto d4 = build_diagram('D', 4);
    CHECK(d4.coxeter_number == 6);
    CHECK(d4.positive_roots() == 12);
    auto e7 = build_diagram('E', 7);
    CHECK(e7.coxeter_number == 18);
    CHECK(e7.positive_roots() == 63);
    CHECK_THROWS(build_diagram('E', 9));
    CHECK_THROWS(build_diagram('D', 3));
  }

  TEST_CASE("root counts agree with reflection closure") {
    for (auto [l, r] : std::vector<std::pair<char, int>>{{'A', 5}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}}) {
      auto d = build_diagram(l, r);
      CHECK(static_cast<int>(oracle::positive_roots(d).size()) == d.positive_roots());
    }
  }

  TEST_CASE("shift on linear A_3") {
    auto d = build_diagram('A', 3);
    CHECK(apply_sigma(d, {0, 1}) == ZVertex{1, 3});
    CHECK(apply_sigma(d, {0, 1}, 2) == ZVertex{4, 1});
  }

  TEST_CASE("phi swaps the fork tips of D_4") {
    auto d = build_diagram('D', 4);
    CHECK(apply_phi(d, {5, 3}) == ZVertex{5, 4});
    CHECK(apply_phi(d, {5, 1}) == ZVertex{5, 1});
  }

  TEST_CASE("normal forms of shift powers") {
    auto a9 = build_diagram('A', 9);
    CHECK(normalize(a9, {0, 2, 0}) == normalize(a9, {-10, 0, 0}));
    auto d8 = build_diagram('D', 8);
    CHECK(normalize(d8, {0, 1, 0}) == normalize(d8, {-7, 0, 0}));
    auto e7 = build_diagram('E', 7);
    CHECK(normalize(e7, {3, 1, 0}) == normalize(e7, {-6, 0, 0}));
  }

  TEST_CASE("words compose like the automorphisms they denote") {
    for (auto [l, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'D', 5}, {'E', 6}}) {
      auto d = build_diagram(l, r);
      std::vector<AutWord> words{{1, 0, 0}, {0, 1, 0}, {-2, 1, 1}, {3, -1, 1}};
      for (const auto& w1 : words)
        for (const auto& w2 : words)
          for (int v = 1; v <= r; ++v) {
            ZVertex x{2, v};
            CHECK(apply_aut(d, w1, apply_aut(d, w2, x)) == apply_aut(d, compose(d, w1, w2), x));
          }
      CHECK(normalize(d, compose(d, {0, 1, 0}, inverse(d, {0, 1, 0}))) == normalize(d, {0, 0, 0}));
    }
  }

  TEST_CASE("translation, shift and phi preserve arrows") {
    for (auto [l, r] : std::vector<std::pair<char, int>>{{'A', 5}, {'D', 6}, {'E', 6}, {'E', 8}}) {
      auto d = build_diagram(l, r);
      Window w{-d.coxeter_number, d.coxeter_number};
      for (const auto& [a, b] : w.arrows(d)) {
        CHECK(is_arrow(d, tau(a), tau(b)));
        CHECK(is_arrow(d, apply_sigma(d, a), apply_sigma(d, b)));
        CHECK(is_arrow(d, apply_phi(d, a), apply_phi(d, b)));
      }
    }
  }
}
