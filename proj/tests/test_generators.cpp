#include <doctest.h>

#include "helpers.hpp"
#include "scc/generators.hpp"

using namespace scc;
using namespace scc::test;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("canonical shapes") {
  for (Index n = 1; n <= 5; ++n) {
    const auto c = cube(n);
    CHECK(c.num_vertices() == (std::size_t{1} << n));
    CHECK(c.num_facets() == static_cast<std::size_t>(2 * n));
    CHECK(volume(c) == power(Rational(2), static_cast<unsigned>(n)));
    CHECK(is_centered(c));

    const auto x = cross_polytope(n);
    CHECK(x.num_vertices() == static_cast<std::size_t>(2 * n));
    CHECK(volume(x) == power(Rational(2), static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n)));
    CHECK(x == polar(c));

    const auto s = centered_simplex(n);
    CHECK(is_simplex(s));
    CHECK(is_centered(s));
    CHECK(volume(s) == Rational(n + 1) / factorial(static_cast<unsigned>(n)));
  }
  for (Index n = 2; n <= 4; ++n) {
    const auto p = prism(n);
    CHECK(is_centered(p));
    CHECK(is_simple(p));
    CHECK_FALSE(is_simplex(p));
    CHECK(p.num_vertices() == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("dimension limits") {
  CHECK(code_of([] { cube(7); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { cube(0); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] { prism(1); }) == ErrorCode::DegenerateInput);
  CHECK(cube(7, 7).dim() == 7);
}

TEST_CASE("pyramid_over") {
  VPolytope base;
  base.vertices = points({{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}});
  const auto p = pyramid_over(base, vec({0, 0, 1}));
  CHECK(is_centered(p));
  CHECK(volume(p) == q(4, 3));
  CHECK(is_pyramid(p).has_value());
  CHECK(code_of([&] { pyramid_over(base, vec({3, 3, 0})); }) == ErrorCode::DegenerateInput);
  VPolytope line;
  line.vertices = points({{0, 0, 0}, {1, 0, 0}});
  CHECK(code_of([&] { pyramid_over(line, vec({0, 0, 1})); }) == ErrorCode::DegenerateInput);
}

TEST_CASE("random generators are deterministic and centered") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (Index n = 2; n <= 4; ++n) {
      const auto a = random_centered(n, static_cast<std::size_t>(2 * n + 2), seed);
      const auto b = random_centered(n, static_cast<std::size_t>(2 * n + 2), seed);
      CHECK(a == b);
      CHECK(is_centered(a));
      CHECK(a.dim() == n);

      const auto pyr = random_pyramid(n, static_cast<std::size_t>(n + 2), seed);
      CHECK(is_centered(pyr));
      CHECK(is_pyramid(pyr).has_value());

      const auto j = random_join(n, seed);
      CHECK(is_centered(j));
      CHECK(j == random_join(n, seed));
    }
  }
  CHECK_FALSE(random_centered(3, 8, 1) == random_centered(3, 8, 2));
  CHECK(code_of([] { random_centered(3, 3, 1); }) == ErrorCode::DegenerateInput);
}

TEST_CASE("join_centered") {
  VPolytope a, b;
  a.vertices = points({{-1, 0, 1}, {1, 0, 1}});
  b.vertices = points({{0, -1, -1}, {0, 1, -1}});
  const auto j = join_centered(a, b);
  CHECK(is_centered(j));
  CHECK(j.num_vertices() == 4);
  CHECK(is_simplex(j));
  b.vertices = points({{0, -1, 1}, {0, 1, 1}});
  CHECK(code_of([&] { join_centered(a, b); }) == ErrorCode::NotComplementary);
}

TEST_CASE("generator specs") {
  CHECK(parse_kind("cube") == GeneratorKind::Cube);
  CHECK(parse_kind("pyramid_over") == GeneratorKind::Pyramid);
  CHECK(kind_name(GeneratorKind::Random) == "random");
  CHECK(code_of([] { parse_kind("sphere"); }) == ErrorCode::ParseError);
  for (auto kind : {GeneratorKind::Cube, GeneratorKind::Cross, GeneratorKind::Simplex, GeneratorKind::Prism,
                    GeneratorKind::Pyramid, GeneratorKind::Join, GeneratorKind::Random}) {
    CHECK(parse_kind(kind_name(kind)) == kind);
    for (std::uint64_t seed : {0, 3}) {
      const auto p = generate({kind, 3, 0, seed});
      CHECK(p.dim() == 3);
      CHECK(is_centered(p));
    }
  }
  CHECK(generate({GeneratorKind::Cube, 3, 0, 0}) == cube(3));
  CHECK(is_pyramid(generate({GeneratorKind::Pyramid, 3, 0, 0})).has_value());
  CHECK(generate({GeneratorKind::Random, 3, 10, 9}).num_vertices() <= 10);
}
