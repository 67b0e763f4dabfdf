#include "doctest.h"
#include "orbitcy/algebra.hpp"
#include "orbitcy/linalg.hpp"
#include "orbitcy/quiver.hpp"

using namespace orbitcy;

TEST_SUITE("linalg") {
  TEST_CASE("rank and nullspace of a rank-one matrix") {
    Matrix m = Matrix::from_rows(3, {{1, 2, 3}, {2, 4, 6}});
    CHECK(rank(m) == 1);
    Matrix n = nullspace(m);
    CHECK(n.cols() == 2);
    CHECK((m * n).is_zero());
  }

  TEST_CASE("inverse is exact over the rationals") {
    Matrix m = Matrix::from_rows(2, {{Rational(1, 3), 2}, {5, 7}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix::from_rows(2, {{1, 2}, {2, 4}})).has_value());
  }

  TEST_CASE("solve finds a preimage or reports none") {
    Matrix a = Matrix::from_rows(2, {{1, 1}, {0, 1}});
    auto x = solve(a, {3, 1});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == Vec{3, 1});
    CHECK_FALSE(solve(Matrix::from_rows(1, {{0}, {0}}), {1, 0}).has_value());
  }

  TEST_CASE("quotient picks standard vectors greedily") {
    Quotient q(3, {{1, 1, 0}});
    CHECK(q.dim() == 2);
    CHECK(q.chosen() == std::vector<std::size_t>{0, 2});
    // e1 = -e0 modulo the span.
    CHECK(q.projection().column(1) == Vec{-1, 0});
  }

  TEST_CASE("span builder detects dependence") {
    SpanBuilder s(3);
    CHECK(s.add({1, 0, 1}));
    CHECK(s.add({0, 1, 1}));
    CHECK_FALSE(s.add({1, 1, 2}));
    CHECK(s.contains({2, -1, 1}));
  }
}

TEST_SUITE("quiver") {
  TEST_CASE("parse and format round trip in composition order") {
    Quiver q;
    q.n = 2;
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    PathElement e = parse_element(q, "b*a - 2*a*b");
    CHECK(e.size() == 2);
    CHECK(format_element(q, e) == format_element(q, parse_element(q, format_element(q, e))));
    Path ba{0, 0, {0, 1}};
    CHECK(e.at(ba) == 1);
  }

  TEST_CASE("path enumeration of a 2-cycle") {
    Quiver q;
    q.n = 2;
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    // Two idempotents, then two paths of each positive length.
    CHECK(enumerate_paths(q, 3).size() == 2 + 2 * 3);
  }

  TEST_CASE("quiver isomorphism ignores labels") {
    Quiver a = quiver_from_counts({{0, 1}, {0, 1}});
    Quiver b = quiver_from_counts({{1, 0}, {1, 0}});
    CHECK(quivers_isomorphic(a, b));
    CHECK_FALSE(quivers_isomorphic(a, quiver_from_counts({{0, 1}, {0, 0}})));
  }
}

TEST_SUITE("algebra") {
  TEST_CASE("dual numbers have a one-dimensional nilpotent radical") {
    AlgebraTable a;
    a.vertices = 1;
    a.vertex_labels = {"1"};
    a.labels = {"e", "x"};
    a.src = {0, 0};
    a.tgt = {0, 0};
    a.idem = {0};
    a.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {}}};
    CHECK(a.associative());
    CHECK(jacobson_radical(a).size() == 1);
    CHECK(radical_layers(a) == std::vector<int>{1, 0});
  }
}
