#pragma once

// Canonical and seeded random centered polytopes. Every generator returns an
// exactly centered polytope.

#include <cstdint>
#include <string>
#include <string_view>

#include "scc/polytope.hpp"

namespace scc {

constexpr Index kDefaultGeneratorCap = 6;

/// [-1, 1]^n.
Polytope cube(Index n, Index dim_cap = kDefaultGeneratorCap);
/// conv{+-e_i}.
Polytope cross_polytope(Index n, Index dim_cap = kDefaultGeneratorCap);
/// conv{e_1, ..., e_n, -(e_1 + ... + e_n)}.
Polytope centered_simplex(Index n, Index dim_cap = kDefaultGeneratorCap);
/// centered_simplex(n - 1) x [-1, 1], for n >= 2. Simple but not a simplex.
Polytope prism(Index n, Index dim_cap = kDefaultGeneratorCap);

/// conv(base u {apex}) moved to its centroid. The base points must span a
/// hyperplane of R^n not containing the apex. The centroid is cross-checked
/// against n/(n+1) c(base) + 1/(n+1) apex.
Polytope pyramid_over(const VPolytope& base, const Vec& apex, Index dim_cap = kDefaultGeneratorCap);

/// Pyramid over the hull of `base_points` random points in x_n = 0 with a
/// random apex, centered.
Polytope random_pyramid(Index n, std::size_t base_points, std::uint64_t seed, Index dim_cap = kDefaultGeneratorCap);

/// Hull of m random points moved to its centroid. Coordinates are c/q with
/// c uniform in [-K, K] and q in {1, 2, 3}, both taken from std::mt19937_64
/// outputs reduced modulo the range. Affinely degenerate draws are redrawn up
/// to 100 times before GeneratorFailure.
Polytope random_centered(Index n, std::size_t m, std::uint64_t seed, Index coordinate_box = 10,
                         Index dim_cap = kDefaultGeneratorCap);

/// join(q1, q2) moved to its centroid. Throws NotComplementary.
Polytope join_centered(const VPolytope& q1, const VPolytope& q2, Index dim_cap = kDefaultGeneratorCap);

/// Join of two random polytopes of dimensions floor((n-1)/2) and the rest,
/// placed in the parallel flats x_n = 1 and x_n = -1.
Polytope random_join(Index n, std::uint64_t seed, Index dim_cap = kDefaultGeneratorCap);

enum class GeneratorKind { Cube, Cross, Simplex, Prism, Pyramid, Join, Random };

std::string_view kind_name(GeneratorKind kind);
/// Accepts the names above in lower case; "pyramid_over" is an alias of "pyramid".
GeneratorKind parse_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Cube;
  Index dim = 2;
  /// Point count for random kinds (0 picks a default).
  std::size_t points = 0;
  /// For pyramid, 0 selects the cube base and apex e_n; for join, 0 uses simplices.
  std::uint64_t seed = 0;
  Index dim_cap = kDefaultGeneratorCap;
};

Polytope generate(const GeneratorSpec& spec);

}  // namespace scc
