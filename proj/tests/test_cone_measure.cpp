#include <doctest.h>

#include "helpers.hpp"
#include "scc/cone_measure.hpp"
#include "scc/generators.hpp"

using namespace scc;
using namespace scc::test;

namespace {

const auto kTriangle = points({{1, 0}, {0, 1}, {-1, -1}});

std::size_t facet_with_normal(const Polytope& p, const Vec& a) {
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    if (same(p.normal(j), a)) return j;
  }
  FAIL("normal not found");
  return 0;
}

}  // namespace

TEST_CASE("cone volumes") {
  const auto sq = cube(2);
  CHECK(cone_volume(sq, facet_with_normal(sq, vec({1, 0}))) == 1);
  const auto tri = convex_hull(kTriangle);
  CHECK(cone_volume(tri, facet_with_normal(tri, vec({1, 1}))) == q(1, 2));
  const auto seg = cube(1);
  CHECK(cone_volume(seg, facet_with_normal(seg, vec({1}))) == 1);
  CHECK_THROWS_AS(cone_volume(sq, 4), Error);
  CHECK_THROWS_AS(cone_volume(translate(sq, vec({1, 0})), 0), Error);
}

TEST_CASE("cone volume measure") {
  auto m = cone_volume_measure(cube(2));
  CHECK(m.atoms.size() == 4);
  for (const auto& a : m.atoms) CHECK(a.weight == 1);
  CHECK(m.total == 4);

  m = cone_volume_measure(convex_hull(kTriangle));
  CHECK(m.atoms.size() == 3);
  for (const auto& a : m.atoms) CHECK(a.weight == q(1, 2));
  CHECK(m.total == q(3, 2));

  m = cone_volume_measure(cube(1));
  REQUIRE(m.atoms.size() == 2);
  CHECK(same(m.atoms[0].normal, vec({-1})));
  CHECK(m.atoms[0].weight == 1);
  CHECK(m.total == 2);
  try {
    cone_volume_measure(translate(cube(2), vec({2, 0})));
    FAIL("expected OriginNotInterior");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OriginNotInterior);
  }
}

TEST_CASE("pyramid formula") {
  auto c = pyramid_formula_check(cube(2));
  CHECK(c.lhs == 4);
  CHECK(c.rhs == 4);
  CHECK(c.equal);
  c = pyramid_formula_check(convex_hull(kTriangle));
  CHECK(c.lhs == q(3, 2));
  CHECK(c.equal);
  CHECK(pyramid_formula_check(random_centered(3, 10, 1)).equal);
  for (Index n = 1; n <= 5; ++n) {
    for (const auto& p : {cube(n), cross_polytope(n), centered_simplex(n)}) {
      const auto m = cone_volume_measure(p);
      CHECK(m.total == volume(p));
      for (const auto& a : m.atoms) CHECK(a.weight > 0);
    }
  }
}

TEST_CASE("facet cone functional") {
  const auto sq = cube(2);
  const std::size_t right = facet_with_normal(sq, vec({1, 0}));
  const IndexSet one{right};
  CHECK(facet_cone_functional(sq, one, vec({0, 0})) == 1);
  CHECK(facet_cone_functional(sq, one, vec({1, 0})) == 0);

  const auto tri = convex_hull(kTriangle);
  // Facets through the vertex (1, 0).
  IndexSet at_vertex;
  for (std::size_t j = 0; j < tri.num_facets(); ++j) {
    if (tri.normal(j).dot(vec({1, 0})) == 1) at_vertex.push_back(j);
  }
  REQUIRE(at_vertex.size() == 2);
  CHECK(facet_cone_functional(tri, at_vertex, vec({1, 0})) == 0);
}

TEST_CASE("facet cone functional is affine and sums to the volume") {
  const auto p = random_centered(3, 9, 4);
  IndexSet all;
  for (std::size_t j = 0; j < p.num_facets(); ++j) all.push_back(j);
  CHECK(facet_cone_functional(p, all, Vec::Zero(3)) == volume(p));
  // For x in P the functional over all facets is vol(P) as well.
  CHECK(facet_cone_functional(p, all, Vec(p.vertex(0) / 2)) == volume(p));
  const IndexSet some{0, 2};
  const Vec x = vec({q(1, 3), -1, 2});
  const Vec y = vec({-2, q(1, 2), 0});
  const Rational lambda = q(2, 7);
  CHECK(facet_cone_functional(p, some, Vec(lambda * x + (1 - lambda) * y)) ==
        lambda * facet_cone_functional(p, some, x) + (1 - lambda) * facet_cone_functional(p, some, y));
}

TEST_CASE("cone volumes scale with the n-th power") {
  const auto p = random_centered(3, 8, 12);
  const Rational lambda = q(3, 2);
  const auto big = scale(p, lambda);
  const auto m = cone_volume_measure(p);
  const auto mb = cone_volume_measure(big);
  REQUIRE(m.atoms.size() == mb.atoms.size());
  for (std::size_t j = 0; j < m.atoms.size(); ++j) {
    const Vec rescaled = m.atoms[j].normal / lambda;
    std::size_t k = 0;
    while (!same(mb.atoms[k].normal, rescaled)) ++k;
    CHECK(mb.atoms[k].weight == power(lambda, 3) * m.atoms[j].weight);
  }
}
