#include "doctest.h"
#include "orbitcy/geom.hpp"

using namespace orbitcy;

TEST_SUITE("geom") {
  TEST_CASE("crossing of diagonals") {
    CHECK(crossing({1, 3, 6}, {2, 5, 6}));
    CHECK_FALSE(crossing({1, 3, 6}, {3, 5, 6}));
    CHECK_FALSE(crossing({1, 4, 6}, {2, 3, 6}));
  }

  TEST_CASE("tagged arcs at the puncture") {
    const TaggedArc plain1{true, 1, 0, false, 8}, notched1{true, 1, 0, true, 8}, notched2{true, 2, 0, true, 8};
    CHECK(compatible(plain1, notched1));
    CHECK_FALSE(compatible(plain1, notched2));
    CHECK(compatible(notched1, notched2));
  }

  TEST_CASE("A(3,2): twelve rigid orbits of arcs") {
    const ArcModel m = model_A(3, 2);
    CHECK(m.n_gon == 20);
    CHECK(m.orbits.size() == 34);
    CHECK(m.rigid_orbits().size() == 12);
  }

  TEST_CASE("A(n,1) maximal collections are triangulations") {
    for (int n = 1; n <= 3; ++n) {
      const ArcModel m = model_A(n, 1);
      for (const auto& c : maximal_collections(m)) {
        CHECK(is_triangulation(m, c));
        CHECK(geometric_cluster_tilting(m, c));
      }
    }
  }

  TEST_CASE("arc models agree with the orbit categories") {
    for (int n = 1; n <= 3; ++n)
      for (int t = 1; t <= 3; ++t) {
        const std::string nt = std::to_string(n) + "," + std::to_string(t) + ")";
        for (const std::string& s : {"A(" + nt, "Dfam(" + nt}) {
          const OrbitCategory c(parse_spec(s));
          CHECK_MESSAGE(cross_validate(c).pass, s);
        }
      }
  }

  TEST_CASE("collections serialize with tags") {
    const ArcModel m = model_D(1, 1);
    const auto cols = maximal_collections(m);
    REQUIRE_FALSE(cols.empty());
    const std::string j = m.collection_json(cols.front());
    CHECK(j.find("\"tags\"") != std::string::npos);
  }

  TEST_CASE("arc models exist only for the A and D families") { CHECK_THROWS(cross_validate(OrbitCategory(parse_spec("E7t2")))); }
}
