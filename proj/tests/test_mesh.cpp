#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "orbitcy/mesh.hpp"

using namespace orbitcy;

namespace {

const std::vector<std::pair<char, int>> kSerreTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'A', 7}, {'A', 8}, {'A', 9},
    {'D', 4}, {'D', 5}, {'D', 6}, {'D', 7}, {'D', 8}, {'E', 6}, {'E', 7}, {'E', 8}};

}  // namespace

TEST_SUITE("mesh") {
  TEST_CASE("small Hom spaces") {
    MeshCategory a1(build_diagram('A', 1));
    CHECK(a1.dim({0, 1}, {0, 1}) == 1);
    CHECK(a1.dim({0, 1}, {1, 1}) == 0);
    MeshCategory a2(build_diagram('A', 2));
    CHECK(a2.dim({0, 1}, {0, 2}) == 1);
    CHECK(a2.dim({0, 1}, {1, 1}) == 0);
    auto hb = hom_basis(a2, {0, 1}, {0, 2});
    REQUIRE(hb.basis.size() == 1);
    CHECK(hb.basis[0].size() == 2);  // a single arrow
  }

  TEST_CASE("composites in A_3") {
    MeshCategory a3(build_diagram('A', 3));
    const ZVertex x{0, 1}, y{0, 2}, z{0, 3}, w{1, 1};
    Vec f{1}, g{1};
    CHECK_FALSE(is_zero(a3.compose(x, y, z, f, g)));
    CHECK(a3.dim(x, w) == 0);
    CHECK(a3.dim(y, w) == 1);
    CHECK(a3.compose(x, y, w, f, Vec{1}).empty());
  }

  TEST_CASE("identity is neutral for composition") {
    MeshCategory d5(build_diagram('D', 5));
    const ZVertex x{0, 1};
    for (int p = 0; p < 4; ++p)
      for (int v = 1; v <= 5; ++v) {
        const ZVertex y{p, v};
        const int n = d5.dim(x, y);
        for (int k = 0; k < n; ++k) {
          Vec f = unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
          CHECK(d5.compose(x, x, y, Vec{1}, f) == f);
          CHECK(d5.compose(x, y, y, f, Vec{1}) == f);
        }
      }
  }

  TEST_CASE("brute-force path category modulo the mesh ideal") {
    for (auto [l, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'D', 4}}) {
      const DynkinDiagram d = build_diagram(l, r);
      const MeshCategory m(d);
      const int last = d.coxeter_number - 1;
      for (int v = 1; v <= r; ++v) {
        const auto dims = oracle::mesh_ideal_dims(d, v, last);
        const HammockTable h = hammock(d, default_window(d, {0, v}), {0, v});
        for (const auto& [y, k] : dims) {
          CHECK(k == m.dim({0, v}, y));
          CHECK(k == h.at(y));
          if (y.p == last) CHECK(k == 0);  // exhausted before the last slice
        }
      }
    }
  }

  TEST_CASE("Serre duality Hom(X,Y) = D Hom(Y, tau Sigma X)") {
    for (auto [l, r] : kSerreTypes) {
      const DynkinDiagram d = build_diagram(l, r);
      const MeshCategory m(d);
      const int h = d.coxeter_number;
      int bad = 0;
      for (int v = 1; v <= r; ++v) {
        const ZVertex x{0, v};
        const ZVertex sx = tau(apply_sigma(d, x));
        for (int p = -h; p <= 2 * h; ++p)
          for (int w = 1; w <= r; ++w) {
            const ZVertex y{p, w};
            if (m.dim(x, y) != m.dim(y, sx)) ++bad;
          }
      }
      CHECK_MESSAGE(bad == 0, d.name());
    }
  }

  TEST_CASE("hammock values are the root coefficients") {
    // dim Hom(P_v, -) summed over indecomposables is the v-coefficient sum
    // over positive roots, and the nonzero values are those coefficients.
    for (auto [l, r] : std::vector<std::pair<char, int>>{{'A', 6}, {'D', 4}, {'D', 6}, {'D', 8}, {'E', 6}, {'E', 7}, {'E', 8}}) {
      const DynkinDiagram d = build_diagram(l, r);
      const auto roots = oracle::positive_roots(d);
      for (int v = 1; v <= r; ++v) {
        const HammockTable h = hammock(d, default_window(d, {0, v}), {0, v});
        std::vector<int> got, want;
        for (int f : h.f)
          if (f) got.push_back(f);
        for (const auto& b : roots)
          if (b[static_cast<std::size_t>(v)]) want.push_back(b[static_cast<std::size_t>(v)]);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK_MESSAGE(got == want, d.name() << " vertex " << v);
      }
    }
  }

  TEST_CASE("D_N hammock of the tail end is a rectangle of ones") {
    for (int n : {4, 6, 8}) {
      const DynkinDiagram d = build_diagram('D', n);
      const ZVertex x{0, 1};
      const HammockTable h = hammock(d, default_window(d, x), x);
      int total = 0, peak = 0;
      for (int f : h.f) {
        total += f;
        peak = std::max(peak, f);
      }
      CHECK(peak == 1);
      CHECK(total == 2 * (n - 1));
      CHECK(h.at(tau(x, -(n - 2))) == 1);  // the hammock ends at tau^{-N+2} X
      CHECK(h.at(tau(x, -(n - 1))) == 0);
    }
  }

  TEST_CASE("slice check accepts Sigma and rejects a perturbed Sigma") {
    for (auto [l, r] : kSerreTypes) {
      const DynkinDiagram d = build_diagram(l, r);
      const MeshCategory m(d);
      CHECK_MESSAGE(slice_check(m).pass, d.name());
      const ShiftRule wrong = [&](ZVertex z, int i) { return tau(apply_sigma(d, z, i), i); };
      CHECK_MESSAGE(!slice_check(m, wrong).pass, d.name());
    }
  }
}
