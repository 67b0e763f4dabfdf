#include "doctest.h"
#include "oracles.hpp"
#include "orbitcy/orbitcat.hpp"
#include "orbitcy/rigid.hpp"

using namespace orbitcy;

namespace {

const std::vector<std::string> kPresets = {"A(1,1)", "A(2,2)", "A(3,1)", "Dfam(1,1)", "Dfam(2,1)", "Dk(2,2)",
                                           "Dk(3,2)", "Dk(5,1)", "E7t2",   "E7t5",     "E8t4",     "E8t8",
                                           "D4tphi", "D4t2phi"};

}  // namespace

TEST_SUITE("orbitcat") {
  TEST_CASE("object counts of small presets") {
    CHECK(OrbitCategory(parse_spec("A(1,1)")).size() == 3);
    CHECK(OrbitCategory(parse_spec("D4t2phi")).size() == 8);
    CHECK(OrbitCategory(parse_spec("E7t2")).size() == 14);
    CHECK(OrbitCategory(parse_spec("E7t5")).size() == 35);
  }

  TEST_CASE("object count equals rank times translation length") {
    // A fundamental domain of <g> on Z x Delta has |a| slices when g = tau^a phi^c
    // acts freely with net translation a.
    for (const char* s : {"E7t2", "E7t5", "E8t4", "E8t8", "D4tphi", "D4t2phi"}) {
      const OrbitCategory c(parse_spec(s));
      const AutWord g = c.spec().generator;
      CHECK_MESSAGE(c.size() == c.diagram().rank * std::abs(g.a), s);
    }
  }

  TEST_CASE("every preset is 2-Calabi-Yau") {
    for (const auto& name : kPresets) {
      const OrbitCategory c(parse_spec(name));
      const TwoCYReport r = verify_2cy(c);
      CHECK_MESSAGE(r.pass, name);
    }
  }

  TEST_CASE("a non-2-CY quotient is caught") {
    bool caught = false;
    try {
      const OrbitCategory c(parse_spec("Db(A2)/t^1"));
      caught = !verify_2cy(c).pass;
    } catch (const std::exception&) {
      caught = true;
    }
    CHECK(caught);
  }

  TEST_CASE("covering sums are local") {
    const OrbitCategory c(parse_spec("A(2,2)"));
    const int span = 4 * c.diagram().coxeter_number;
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y)
        for (int s = 0; s < 2; ++s) CHECK(c.hom_dim(x, y, s) == c.hom_dim_range(x, y, s, -span, span));
  }

  TEST_CASE("identity and composition in the orbit category") {
    const OrbitCategory c(parse_spec("E7t2"));
    const RigidSet rs = indec_rigids(c);
    REQUIRE(rs.objects.size() == 2);
    const int x = rs.objects[0];
    const OrbitHom h = c.hom_basis(x, x);
    CHECK(h.dim == 3);
    const int id = h.identity_index();
    REQUIRE(id >= 0);
    for (int k = 0; k < h.dim; ++k) {
      Vec f = unit_vector(3, static_cast<std::size_t>(k));
      CHECK(c.compose(x, x, x, f, unit_vector(3, static_cast<std::size_t>(id))) == f);
      CHECK(c.compose(x, x, x, unit_vector(3, static_cast<std::size_t>(id)), f) == f);
    }
  }

  TEST_CASE("AR quiver exports") {
    const OrbitCategory c(parse_spec("A(1,1)"));
    CHECK(c.ar_dot().find("digraph") != std::string::npos);
    CHECK(c.to_json().find("\"objects\"") != std::string::npos);
  }

  TEST_CASE("unknown spec is rejected") { CHECK_THROWS(parse_spec("B3")); }
}

TEST_SUITE("rigid") {
  TEST_CASE("D4t2phi: two rigids, each maximal, not cluster tilting") {
    const OrbitCategory c(parse_spec("D4t2phi"));
    const RigidSet rs = indec_rigids(c);
    REQUIRE(rs.objects.size() == 2);
    CHECK(c.shift(rs.objects[0]) == rs.objects[1]);
    const auto mr = maximal_rigids(c, rs);
    REQUIRE(mr.size() == 2);
    for (const auto& m : mr) {
      CHECK(m.objects.size() == 1);
      CHECK_FALSE(m.cluster_tilting);
    }
    CHECK(shift_closure_check(c, rs, mr[0].objects));
  }

  TEST_CASE("E7t5: five maximal rigids {x, tau^2 x}, none cluster tilting") {
    const OrbitCategory c(parse_spec("E7t5"));
    const RigidSet rs = indec_rigids(c);
    const auto mr = maximal_rigids(c, rs);
    REQUIRE(mr.size() == 5);
    for (const auto& m : mr) {
      REQUIRE(m.objects.size() == 2);
      CHECK_FALSE(m.cluster_tilting);
      const int a = m.objects[0], b = m.objects[1];
      CHECK((c.tau_of(c.tau_of(a)) == b || c.tau_of(c.tau_of(b)) == a));
      CHECK(shift_closure_check(c, rs, m.objects));
    }
  }

  TEST_CASE("E8t4 maximal rigids are cluster tilting, E8t8 has 24 rigids") {
    const OrbitCategory c(parse_spec("E8t4"));
    const RigidSet rs = indec_rigids(c);
    for (const auto& m : maximal_rigids(c, rs)) {
      CHECK(m.objects.size() == 2);
      CHECK(m.cluster_tilting);
    }
    CHECK(indec_rigids(OrbitCategory(parse_spec("E8t8"))).objects.size() == 24);
  }

  TEST_CASE("compatibility is symmetric and Sigma permutes rigids") {
    for (const auto& name : kPresets) {
      const OrbitCategory c(parse_spec(name));
      const RigidSet rs = indec_rigids(c);
      CHECK_MESSAGE(rs.symmetric, name);
      for (int o : rs.objects) CHECK(rs.position(c.shift(o)) >= 0);
    }
  }

  TEST_CASE("cluster tilting status is uniform") {
    for (const auto& name : kPresets) {
      const OrbitCategory c(parse_spec(name));
      const auto mr = maximal_rigids(c, indec_rigids(c));
      int ct = 0;
      for (const auto& m : mr) ct += m.cluster_tilting;
      CHECK_MESSAGE((ct == 0 || ct == static_cast<int>(mr.size())), name);
    }
  }

  TEST_CASE("rigid-subcategory quiver is Q_n") {
    for (int n = 1; n <= 3; ++n)
      for (int t = 1; t <= 3; ++t) {
        const std::string nt = std::to_string(n) + "," + std::to_string(t) + ")";
        for (const std::string& s : {"A(" + nt, "Dfam(" + nt}) {
          const OrbitCategory c(parse_spec(s));
          const Quiver q = rigid_subcategory_quiver(c, indec_rigids(c));
          CHECK_MESSAGE(quivers_isomorphic(q, oracle::q_n(n)), s);
        }
      }
  }

  TEST_CASE("E7t2: two vertices with a loop each") {
    const OrbitCategory c(parse_spec("E7t2"));
    const Quiver q = rigid_subcategory_quiver(c, indec_rigids(c));
    CHECK(q.counts() == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  }

  TEST_CASE("maximal cliques of a path graph") {
    std::vector<std::vector<bool>> adj(4, std::vector<bool>(4, false));
    for (int i = 0; i + 1 < 4; ++i) adj[i][i + 1] = adj[i + 1][i] = true;
    CHECK(maximal_cliques(adj) == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
  }
}
