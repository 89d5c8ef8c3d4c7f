#include "scc/generators.hpp"

#include <random>
#include <string>

#include "scc/error.hpp"

namespace scc {

namespace {

constexpr int kMaxRetries = 100;

void check_dim(Index n, Index cap, Index lowest = 1) {
  if (n < lowest) {
    throw Error(ErrorCode::DegenerateInput, "dimension " + std::to_string(n) + " is below " + std::to_string(lowest));
  }
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded, "dimension " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
  }
}

Vec unit(Index n, Index k, const Rational& value = 1) {
  Vec e = Vec::Zero(n);
  e(k) = value;
  return e;
}

Rational draw_coordinate(std::mt19937_64& rng, Index box) {
  const auto span = static_cast<std::uint64_t>(2 * box + 1);
  const auto numerator = static_cast<long>(rng() % span) - static_cast<long>(box);
  const auto denominator = static_cast<long>(rng() % 3) + 1;
  return Rational(numerator, denominator);
}

// `count` points in R^dim whose affine hull is all of R^dim.
std::vector<Vec> draw_spanning_points(std::mt19937_64& rng, Index dim, std::size_t count, Index box) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < count; ++i) {
      Vec v(dim);
      for (Index k = 0; k < dim; ++k) v(k) = draw_coordinate(rng, box);
      pts.push_back(std::move(v));
    }
    if (affine_dimension(pts) == dim) return pts;
  }
  throw Error(ErrorCode::GeneratorFailure, "no full-dimensional draw after " + std::to_string(kMaxRetries) + " tries");
}

HullOptions hull_options(Index cap) {
  HullOptions o;
  o.dimension_cap = cap;
  return o;
}

// Embeds x in R^a as (x, 0, h) and y in R^b as (0, y, h) within R^{a+b+1}.
Vec embed(const Vec& x, Index offset, Index n, const Rational& height) {
  Vec out = Vec::Zero(n);
  out.segment(offset, x.size()) = x;
  out(n - 1) = height;
  return out;
}

std::vector<Vec> simplex_points(Index n) {
  std::vector<Vec> pts;
  if (n == 0) return {Vec(0)};
  Vec last = Vec::Constant(n, Rational(-1));
  for (Index k = 0; k < n; ++k) pts.push_back(unit(n, k));
  pts.push_back(last);
  return pts;
}

}  // namespace

Polytope cube(Index n, Index dim_cap) {
  check_dim(n, dim_cap);
  std::vector<Vec> vertices;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Vec v(n);
    for (Index k = 0; k < n; ++k) v(k) = (mask >> k) & 1 ? 1 : -1;
    vertices.push_back(std::move(v));
  }
  std::vector<Vec> normals;
  for (Index k = 0; k < n; ++k) {
    normals.push_back(unit(n, k));
    normals.push_back(unit(n, k, -1));
  }
  std::vector<Rational> rhs(normals.size(), Rational(1));
  return Polytope::from_representations(std::move(vertices), std::move(normals), std::move(rhs));
}

Polytope cross_polytope(Index n, Index dim_cap) { return polar(cube(n, dim_cap)); }

Polytope centered_simplex(Index n, Index dim_cap) {
  check_dim(n, dim_cap);
  return convex_hull(simplex_points(n), hull_options(dim_cap));
}

Polytope prism(Index n, Index dim_cap) {
  check_dim(n, dim_cap, 2);
  std::vector<Vec> pts;
  for (const auto& v : simplex_points(n - 1)) {
    for (int s : {-1, 1}) pts.push_back(embed(v, 0, n, s));
  }
  return convex_hull(pts, hull_options(dim_cap));
}

Polytope pyramid_over(const VPolytope& base, const Vec& apex, Index dim_cap) {
  if (base.vertices.empty()) throw Error(ErrorCode::EmptyInput, "pyramid over an empty base");
  const Index n = apex.size();
  check_dim(n, dim_cap);
  for (const auto& v : base.vertices) {
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "base and apex dimensions differ");
  }
  const auto plane = affine_hull(base.vertices);
  if (plane.dim() != n - 1) {
    throw Error(ErrorCode::DegenerateInput, "base spans a flat of dimension " + std::to_string(plane.dim()));
  }
  if (plane.contains(apex)) throw Error(ErrorCode::DegenerateInput, "apex lies in the base hyperplane");

  std::vector<Vec> pts = base.vertices;
  pts.push_back(apex);
  const Polytope p = convex_hull(pts, hull_options(dim_cap));
  std::size_t base_facet = p.num_facets();
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    if (p.normal(j).dot(apex) != p.rhs()[j]) base_facet = j;
  }
  const Vec expected = facet_centroid(p, base_facet) * Rational(n, n + 1) + apex * Rational(1, n + 1);
  const Vec c = centroid(p);
  if (!equal(c, expected)) {
    throw Error(ErrorCode::InvariantViolation, "pyramid centroid " + to_string(c) + " differs from " + to_string(expected));
  }
  return translate(p, -c);
}

Polytope random_pyramid(Index n, std::size_t base_points, std::uint64_t seed, Index dim_cap) {
  check_dim(n, dim_cap, 2);
  if (base_points < static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DegenerateInput, "a base in dimension " + std::to_string(n - 1) + " needs at least " +
                                                std::to_string(n) + " points");
  }
  std::mt19937_64 rng(seed);
  VPolytope base{n, {}};
  for (const auto& x : draw_spanning_points(rng, n - 1, base_points, 10)) base.vertices.push_back(embed(x, 0, n, 0));
  Vec apex(n);
  for (Index k = 0; k + 1 < n; ++k) apex(k) = draw_coordinate(rng, 10);
  apex(n - 1) = Rational(static_cast<long>(rng() % 10) + 1);
  return pyramid_over(base, apex, dim_cap);
}

Polytope random_centered(Index n, std::size_t m, std::uint64_t seed, Index coordinate_box, Index dim_cap) {
  check_dim(n, dim_cap);
  if (m < static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::DegenerateInput, std::to_string(m) + " points cannot span dimension " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  const auto pts = draw_spanning_points(rng, n, m, coordinate_box);
  return translate_to_centroid(convex_hull(pts, hull_options(dim_cap)));
}

Polytope join_centered(const VPolytope& q1, const VPolytope& q2, Index dim_cap) {
  if (!q1.vertices.empty()) check_dim(q1.vertices.front().size(), dim_cap);
  return translate_to_centroid(join(q1, q2, hull_options(dim_cap)));
}

Polytope random_join(Index n, std::uint64_t seed, Index dim_cap) {
  check_dim(n, dim_cap, 2);
  const Index a = (n - 1) / 2;
  const Index b = n - 1 - a;
  std::mt19937_64 rng(seed);
  std::vector<Vec> first{Vec(0)};
  if (a > 0) {
    const std::size_t count = static_cast<std::size_t>(a) + 1 + rng() % 3;
    first = draw_spanning_points(rng, a, count, 10);
  }
  const std::size_t count = static_cast<std::size_t>(b) + 1 + rng() % 3;
  std::vector<Vec> second = draw_spanning_points(rng, b, count, 10);
  VPolytope q1{n, {}};
  VPolytope q2{n, {}};
  for (const auto& x : first) q1.vertices.push_back(embed(x, 0, n, 1));
  for (const auto& y : second) q2.vertices.push_back(embed(y, a, n, -1));
  return join_centered(q1, q2, dim_cap);
}

std::string_view kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Cube: return "cube";
    case GeneratorKind::Cross: return "cross";
    case GeneratorKind::Simplex: return "simplex";
    case GeneratorKind::Prism: return "prism";
    case GeneratorKind::Pyramid: return "pyramid";
    case GeneratorKind::Join: return "join";
    case GeneratorKind::Random: return "random";
  }
  return "unknown";
}

GeneratorKind parse_kind(std::string_view name) {
  for (auto k : {GeneratorKind::Cube, GeneratorKind::Cross, GeneratorKind::Simplex, GeneratorKind::Prism,
                 GeneratorKind::Pyramid, GeneratorKind::Join, GeneratorKind::Random}) {
    if (kind_name(k) == name) return k;
  }
  if (name == "pyramid_over") return GeneratorKind::Pyramid;
  throw Error(ErrorCode::ParseError, "unknown generator kind '" + std::string(name) + "'");
}

Polytope generate(const GeneratorSpec& spec) {
  const Index n = spec.dim;
  switch (spec.kind) {
    case GeneratorKind::Cube: return cube(n, spec.dim_cap);
    case GeneratorKind::Cross: return cross_polytope(n, spec.dim_cap);
    case GeneratorKind::Simplex: return centered_simplex(n, spec.dim_cap);
    case GeneratorKind::Prism: return prism(n, spec.dim_cap);
    case GeneratorKind::Pyramid: {
      if (spec.seed != 0) {
        const std::size_t k = spec.points ? spec.points : static_cast<std::size_t>(n) + 2;
        return random_pyramid(n, k, spec.seed, spec.dim_cap);
      }
      check_dim(n, spec.dim_cap, 2);
      VPolytope base{n, {}};
      const Polytope square = cube(n - 1, spec.dim_cap);
      for (const auto& v : square.vertices()) base.vertices.push_back(embed(v, 0, n, 0));
      return pyramid_over(base, unit(n, n - 1), spec.dim_cap);
    }
    case GeneratorKind::Join: {
      if (spec.seed != 0) return random_join(n, spec.seed, spec.dim_cap);
      check_dim(n, spec.dim_cap, 2);
      const Index a = (n - 1) / 2;
      VPolytope q1{n, {}};
      VPolytope q2{n, {}};
      for (const auto& x : simplex_points(a)) q1.vertices.push_back(embed(x, 0, n, 1));
      for (const auto& y : simplex_points(n - 1 - a)) q2.vertices.push_back(embed(y, a, n, -1));
      return join_centered(q1, q2, spec.dim_cap);
    }
    case GeneratorKind::Random: {
      const std::size_t m = spec.points ? spec.points : static_cast<std::size_t>(2 * n + 2);
      return random_centered(n, m, spec.seed, 10, spec.dim_cap);
    }
  }
  throw Error(ErrorCode::ParseError, "unknown generator kind");
}

}  // namespace scc
