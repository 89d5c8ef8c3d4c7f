#pragma once

// Pyramid lifts pyr(Q) = conv((Q x {1}) u {-(k+1) e_{k+1}}) and the tower of
// iterated lifts used to reduce the affine concentration bound to the linear one.

#include <vector>

#include "scc/concentration.hpp"
#include "scc/polytope.hpp"

namespace scc {

/// One level up. Needs the origin in the interior of q; q need not be centered.
/// Facets are the lifted facets of q followed by the cap x_{k+1} <= 1 (in
/// canonical order).
Polytope pyr(const Polytope& q);

/// x -> ((k+2)/(k+1) x, -1/(k+1)) for x in R^k, k >= 1.
Vec phi(Index k, const Vec& x);

/// Closed form of the j-fold lift of a normal a in R^n:
/// ((n+j+1)/(n+1) a, c_{n+1}, ..., c_{n+j}) with c_{n+k} = -(n+j+1)/((n+k)(n+k+1)).
Vec lifted_normal(const Vec& a, Index j);

struct TowerOptions {
  Index max_levels = 20;
  /// Levels up to this dimension are cross-checked against an independent hull.
  Index verify_hull_through_dim = 5;
};

struct TowerLevel {
  Polytope polytope;
  Rational volume;
  Vec centroid;
  /// Index in polytope.normals() of the lift of each base facet.
  IndexSet lifted_facet;
  /// Cone volume over each lifted base facet.
  std::vector<Rational> cone_volumes;
  bool hull_verified = false;
};

/// Level j is pyr applied j times to the base (level 0). Volumes, centroids
/// and cone volumes are computed from lifted triangulations of the base, so
/// high levels stay cheap.
struct LiftTower {
  Index base_dim = 0;
  std::vector<TowerLevel> levels;

  const Polytope& base() const { return levels.front().polytope; }
  const Vec& lifted_normal_at(std::size_t level, std::size_t base_facet) const {
    const auto& l = levels.at(level);
    return l.polytope.normal(l.lifted_facet.at(base_facet));
  }
};

/// Builds levels 0..j_max and checks at each level: the facet list equals the
/// closed form, vol = (n+j+1)/(n+1) vol(P), centroid = 0, and lifted cone
/// volumes equal the base ones. Throws InvariantViolation on any mismatch,
/// NotCentered for a non-centered base, CapExceeded when j_max > max_levels.
LiftTower build_tower(const Polytope& p, Index j_max, const TowerOptions& options = {});

/// ((d+1)/(n+j)) ((n+j+1)/(n+1)) vol(P) for a proper flat of dimension d, j >= 1.
Rational tower_bound(const CenteredPolytope& p, const AffineFlat& flat, Index j);
Rational tower_bound(const Polytope& p, const AffineFlat& flat, Index j);

/// The linear bound at level j for L = lin{lifted a_i : a_i in A}.
struct TowerCertificate {
  Index level = 0;
  Index span_dim = 0;   // expected d + 1
  Rational lhs;         // cone volumes over lifted normals in L
  Rational rhs;         // (dim L / (n + j)) vol(level j)
  Rational bound;       // tower_bound(P, A, j)
  bool valid = false;   // span_dim == d+1, rhs == bound, lhs <= rhs
};

TowerCertificate tower_certificate(const LiftTower& tower, const AffineFlat& flat, std::size_t level);

}  // namespace scc
