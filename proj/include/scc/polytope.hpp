#pragma once

// Paired V/H representations, exact hulls, volumes, centroids, polarity,
// sections and pyramid/join structure.

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <span>
#include <vector>

#include "scc/kernel.hpp"
#include "scc/rational.hpp"

namespace scc {

struct VPolytope {
  Index dim = 0;
  std::vector<Vec> vertices;
};

/// {x : <normals[i], x> <= rhs[i]}.
struct HPolytope {
  Index dim = 0;
  std::vector<Vec> normals;
  std::vector<Rational> rhs;
  bool irredundant = false;
};

struct HullOptions {
  /// Largest ambient dimension accepted by hull computations.
  Index dimension_cap = 6;
};

/// Full-dimensional polytope with both representations and the vertex-facet
/// incidence. Vertices are sorted lexicographically. Facet rows (a, b) are
/// scaled to b = 1 when b > 0 and to coprime integers otherwise, then sorted
/// lexicographically; when the origin is interior every rhs is 1.
class Polytope {
 public:
  Polytope() = default;

  /// Pairs two representations that are known to describe the same
  /// polytope. Throws InvariantViolation if a vertex violates a constraint, a
  /// constraint does not define a facet, or a listed point is not a vertex.
  static Polytope from_representations(std::vector<Vec> vertices, std::vector<Vec> normals,
                                       std::vector<Rational> rhs);

  Index dim() const { return dim_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_facets() const { return normals_.size(); }

  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& normals() const { return normals_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const Vec& vertex(std::size_t i) const { return vertices_.at(i); }
  const Vec& normal(std::size_t j) const { return normals_.at(j); }

  bool incident(std::size_t vertex, std::size_t facet) const { return facet_masks_.at(facet).test(vertex); }
  /// Vertices on facet j, as a mask over the vertex list.
  const boost::dynamic_bitset<>& facet_mask(std::size_t facet) const { return facet_masks_.at(facet); }
  IndexSet facet_vertices(std::size_t facet) const;
  IndexSet vertex_facets(std::size_t vertex) const;

  bool origin_interior() const { return origin_interior_; }
  bool contains(const Vec& x) const;

  VPolytope v_rep() const { return {dim_, vertices_}; }
  HPolytope h_rep() const { return {dim_, normals_, rhs_, true}; }

  bool operator==(const Polytope& other) const;

 private:
  Index dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Vec> normals_;
  std::vector<Rational> rhs_;
  std::vector<boost::dynamic_bitset<>> facet_masks_;
  bool origin_interior_ = false;
};

Polytope convex_hull(std::span<const Vec> points, const HullOptions& options = {});

HPolytope v_to_h(const VPolytope& p, const HullOptions& options = {});
VPolytope h_to_v(const HPolytope& p);
Polytope polytope_from_h(const HPolytope& p);

/// Irredundant H-representation with every right-hand side equal to 1.
HPolytope normalize_unit_rhs(const HPolytope& p);

Polytope translate(const Polytope& p, const Vec& offset);
Polytope scale(const Polytope& p, const Rational& factor);

/// Simplices are stored with their vertices as matrix columns.
using Simplex = Mat;

Rational simplex_volume(const Simplex& s);
Vec simplex_centroid(const Simplex& s);

/// Pulling triangulation: fan from the lexicographically smallest vertex over
/// the recursively triangulated faces that avoid it. Returns vertex indices.
std::vector<IndexSet> triangulation(const Polytope& p);
std::vector<IndexSet> face_triangulation(const Polytope& p, const boost::dynamic_bitset<>& face,
                                         Index face_dim);
std::vector<IndexSet> facet_triangulation(const Polytope& p, std::size_t facet);
Simplex simplex_of(const Polytope& p, const IndexSet& indices);

Rational volume(const Polytope& p);
Vec centroid(const Polytope& p);

/// Centroid of facet j within its own affine hull.
Vec facet_centroid(const Polytope& p, std::size_t facet);

bool is_centered(const Polytope& p);
Polytope translate_to_centroid(const Polytope& p);

/// conv{a_1, ..., a_m}. Vertex j of the polar corresponds to facet j of p and
/// facet i of the polar to vertex i of p.
Polytope polar(const Polytope& p);

Index face_dimension(const Polytope& p, const IndexSet& face);
bool is_face(const Polytope& p, const IndexSet& vertices);
/// All nonempty proper faces as vertex index sets, ordered by size then lexicographically.
std::vector<IndexSet> faces(const Polytope& p);
/// Face of polar(p) dual to the face given by vertex indices of p; the result
/// indexes vertices of polar(p).
IndexSet polar_face(const Polytope& p, const IndexSet& face);

bool is_simple(const Polytope& p);
bool is_simplex(const Polytope& p);

/// vol_{n-1}((t u + u^perp) n P) / |u|, computed by projecting the section
/// onto the coordinate hyperplane that drops the first k with u_k != 0.
Rational section_profile_q(const Polytope& p, const Vec& u, const Rational& t);

struct PyramidStructure {
  std::size_t apex = 0;
  std::size_t base_facet = 0;
};

/// First vertex (lexicographically) that lies on every facet but one.
std::optional<PyramidStructure> is_pyramid(const Polytope& p);
std::optional<std::size_t> pyramid_apex_over(const Polytope& p, std::size_t base_facet);
std::optional<std::size_t> pyramid_base_under(const Polytope& p, std::size_t apex);

/// Section profile along u = -a_base, with the base at alpha and the apex at beta.
struct ProfileSupport {
  Vec direction;
  Rational alpha;
  Rational beta;
};

ProfileSupport pyramid_profile_support(const Polytope& p, const PyramidStructure& pyramid);

/// q(t) (beta - alpha)^{n-1} == q(alpha) (beta - t)^{n-1}.
bool pyramid_profile_identity_holds(const Polytope& p, const PyramidStructure& pyramid,
                                    const Rational& t);

/// conv(Q1 u Q2) for polytopes in complementary affine subspaces.
Polytope join(const VPolytope& q1, const VPolytope& q2, const HullOptions& options = {});

}  // namespace scc
