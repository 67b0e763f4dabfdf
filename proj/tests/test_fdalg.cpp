#include "doctest.h"
#include "orbitcy/endoalg.hpp"
#include "orbitcy/fdalg.hpp"

using namespace orbitcy;

namespace {

// Hom(P_i, M) has dimension dim M_i.
void check_yoneda(const BoundQuiverAlgebra& a, const FDModule& m) {
  for (int i = 0; i < a.quiver().n; ++i)
    CHECK(static_cast<int>(hom_modules(a, projective(a, i), m).size()) == m.dims[static_cast<std::size_t>(i)]);
}

}  // namespace

TEST_SUITE("fdalg") {
  TEST_CASE("Gamma: basis, projectives and injectives") {
    const BoundQuiverAlgebra g(gamma_target());
    CHECK(g.dim() == 6);
    CHECK(g.table().associative());
    CHECK(projective(g, 0).dims == std::vector<int>{2, 2});
    CHECK(projective(g, 1).dims == std::vector<int>{0, 2});
    CHECK(injective(g, 0).dims == std::vector<int>{2, 0});
    CHECK(injective(g, 1).dims == std::vector<int>{2, 2});
    for (int i = 0; i < 2; ++i) {
      CHECK(satisfies_relations(g, projective(g, i)));
      CHECK(satisfies_relations(g, injective(g, i)));
      check_yoneda(g, projective(g, i));
      check_yoneda(g, injective(g, i));
      check_yoneda(g, simple(g, i));
    }
    CHECK(isomorphic(g, injective(g, 1), projective(g, 0)));
    CHECK_FALSE(isomorphic(g, injective(g, 0), projective(g, 1)));
  }

  TEST_CASE("Gamma is Gorenstein of dimension one on both sides") {
    const BoundQuiverAlgebra g(gamma_target());
    const FDModule reg = regular_module(g);
    const Resolution co = minimal_injective_coresolution(g, reg, 6);
    CHECK(co.complete);
    CHECK(co.terms == std::vector<std::vector<int>>{{0, 2}, {1, 0}});
    CHECK(injective_dimension(g, reg) == 1);
    CHECK(projective_dimension(opposite(g), dual(reg)) == 1);
  }

  TEST_CASE("stable category of Sub Gamma") {
    const BoundQuiverAlgebra g(gamma_target());
    const FDModule s2 = simple(g, 1);
    CHECK(in_sub(g, s2));
    CHECK_FALSE(in_sub(g, injective(g, 0)));
    CHECK(isomorphic(g, cosyzygy_sub(g, s2), s2));
    const auto w = not_dcy_tilted_witness(g, 2);
    CHECK(w.found);
    CHECK(w.text.find("NOT 2-CY-tilted") != std::string::npos);
  }

  TEST_CASE("kernels and cokernels of a projective cover") {
    const BoundQuiverAlgebra g(gamma_target());
    const FDModule s2 = simple(g, 1);
    FDModule cover;
    std::vector<int> mult;
    const ModuleMap pi = projective_cover(g, s2, &cover, &mult);
    CHECK(mult == std::vector<int>{0, 1});
    CHECK(is_module_map(g, cover, s2, pi));
    const FDModule k = kernel(g, cover, pi);
    CHECK(k.dims == std::vector<int>{0, 1});
    CHECK(cokernel(g, s2, pi).is_zero());
  }

  TEST_CASE("Lambda_n controls") {
    for (int n = 1; n <= 4; ++n) {
      const BoundQuiverAlgebra l(lambda_target(n));
      CHECK(static_cast<int>(l.dim()) == n * (n + 3) / 2);
      CHECK(injective_dimension(l, regular_module(l)) <= 1);
      CHECK_FALSE(not_dcy_tilted_witness(l, 2).found);
    }
  }

  TEST_CASE("self-injective Nakayama control") {
    const BoundQuiverAlgebra a(loop_target(2));
    CHECK(a.dim() == 2);
    CHECK(injective_dimension(a, regular_module(a)) == 0);
    CHECK_FALSE(not_dcy_tilted_witness(a, 2).found);
  }

  TEST_CASE("infinite-dimensional quotient is rejected") {
    QuiverPresentation p;
    p.quiver.n = 1;
    p.quiver.arrows = {{"x", 0, 0}, {"y", 0, 0}};
    p.relations = {parse_element(p.quiver, "x*y - y*x")};
    CHECK_THROWS_AS(BoundQuiverAlgebra(p, 8), NotFiniteDimensional);
  }

  TEST_CASE("module JSON lists dims and arrows") {
    const BoundQuiverAlgebra g(gamma_target());
    const std::string j = projective(g, 0).to_json(g.quiver());
    CHECK(j.find("\"dims\"") != std::string::npos);
    CHECK(j.find("\"beta\"") != std::string::npos);
  }
}
