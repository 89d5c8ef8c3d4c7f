#include "scc/polytope.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

#include "scc/double_description.hpp"
#include "scc/error.hpp"

namespace scc {

namespace {

struct FacetRow {
  Vec normal;
  Rational rhs;
};

bool row_less(const FacetRow& a, const FacetRow& b) {
  if (lex_less(a.normal, b.normal)) return true;
  if (lex_less(b.normal, a.normal)) return false;
  return a.rhs < b.rhs;
}

bool row_equal(const FacetRow& a, const FacetRow& b) { return equal(a.normal, b.normal) && a.rhs == b.rhs; }

FacetRow canonical_row(const Vec& normal, const Rational& rhs) {
  if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; })) {
    throw Error(ErrorCode::DegenerateInput, "zero facet normal");
  }
  if (rhs > 0) return {normal / rhs, Rational(1)};
  Vec full(normal.size() + 1);
  full.head(normal.size()) = normal;
  full(normal.size()) = rhs;
  const Vec scaled = to_rational(primitive_integer(full));
  return {scaled.head(normal.size()), scaled(normal.size())};
}

std::vector<Vec> sorted_unique(std::vector<Vec> points) {
  std::sort(points.begin(), points.end(), [](const Vec& a, const Vec& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end(), [](const Vec& a, const Vec& b) { return equal(a, b); }),
               points.end());
  return points;
}

std::vector<Vec> select(const std::vector<Vec>& points, const boost::dynamic_bitset<>& mask) {
  std::vector<Vec> out;
  for (auto i = mask.find_first(); i != boost::dynamic_bitset<>::npos; i = mask.find_next(i)) {
    out.push_back(points[i]);
  }
  return out;
}

IndexSet indices_of(const boost::dynamic_bitset<>& mask) {
  IndexSet out;
  for (auto i = mask.find_first(); i != boost::dynamic_bitset<>::npos; i = mask.find_next(i)) out.push_back(i);
  return out;
}

boost::dynamic_bitset<> mask_of(const IndexSet& indices, std::size_t size) {
  boost::dynamic_bitset<> mask(size);
  for (const auto i : indices) {
    if (i >= size) throw Error(ErrorCode::IndexOutOfRange, "vertex index " + std::to_string(i));
    mask.set(i);
  }
  return mask;
}

// Vertices of {x : <a_i, x> <= b_i}; empty when infeasible. Throws Unbounded
// when the region is nonempty and unbounded.
std::vector<Vec> feasible_vertices(std::span<const Vec> normals, std::span<const Rational> rhs, Index n) {
  std::vector<Vec> rows;
  rows.reserve(normals.size() + 1);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "normal of wrong dimension");
    Vec r(n + 1);
    r.head(n) = -normals[i];
    r(n) = rhs[i];
    rows.push_back(std::move(r));
  }
  Vec t_nonneg = Vec::Zero(n + 1);
  t_nonneg(n) = 1;
  rows.push_back(std::move(t_nonneg));

  const auto rays = extreme_rays(rows, n + 1);
  if (!rays) throw Error(ErrorCode::Unbounded, "constraint normals do not span R^" + std::to_string(n));
  std::vector<Vec> vertices;
  bool recession = false;
  for (const auto& ray : rays->rays) {
    const Vec r = to_rational(ray);
    if (r(n) > 0) vertices.push_back(r.head(n) / r(n));
    else recession = true;
  }
  if (!vertices.empty() && recession) throw Error(ErrorCode::Unbounded, "region has a recession direction");
  return sorted_unique(std::move(vertices));
}

// Keeps the constraints that define facets of conv(vertices).
Polytope assemble_from_constraints(std::vector<Vec> vertices, std::span<const Vec> normals,
                                   std::span<const Rational> rhs) {
  const Index n = vertices.front().size();
  std::vector<Vec> kept_normals;
  std::vector<Rational> kept_rhs;
  for (std::size_t j = 0; j < normals.size(); ++j) {
    std::vector<Vec> tight;
    for (const auto& v : vertices) {
      if (normals[j].dot(v) == rhs[j]) tight.push_back(v);
    }
    if (affine_dimension(tight) == n - 1) {
      kept_normals.push_back(normals[j]);
      kept_rhs.push_back(rhs[j]);
    }
  }
  return Polytope::from_representations(std::move(vertices), std::move(kept_normals), std::move(kept_rhs));
}

void pull(const Polytope& p, const boost::dynamic_bitset<>& face, Index face_dim, IndexSet& prefix,
          std::vector<IndexSet>& out) {
  const auto apex = face.find_first();
  if (face_dim == 0) {
    IndexSet simplex = prefix;
    simplex.push_back(apex);
    std::sort(simplex.begin(), simplex.end());
    out.push_back(std::move(simplex));
    return;
  }
  std::vector<boost::dynamic_bitset<>> subfaces;
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    boost::dynamic_bitset<> s = face & p.facet_mask(j);
    if (s == face || s.test(apex) || static_cast<Index>(s.count()) < face_dim) continue;
    if (std::find(subfaces.begin(), subfaces.end(), s) != subfaces.end()) continue;
    if (affine_dimension(select(p.vertices(), s)) != face_dim - 1) continue;
    subfaces.push_back(std::move(s));
  }
  prefix.push_back(apex);
  for (const auto& s : subfaces) pull(p, s, face_dim - 1, prefix, out);
  prefix.pop_back();
}

Mat drop_coordinate(const Mat& m, Index k) {
  Mat out(m.rows() - 1, m.cols());
  out.topRows(k) = m.topRows(k);
  out.bottomRows(m.rows() - 1 - k) = m.bottomRows(m.rows() - 1 - k);
  return out;
}

}  // namespace

Polytope Polytope::from_representations(std::vector<Vec> vertices, std::vector<Vec> normals,
                                        std::vector<Rational> rhs) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyInput, "polytope without vertices");
  if (normals.size() != rhs.size()) {
    throw Error(ErrorCode::DimensionMismatch, "normal and right-hand side counts differ");
  }
  Polytope p;
  p.dim_ = vertices.front().size();
  const Index n = p.dim_;
  for (const auto& v : vertices) {
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vertices of mixed dimension");
  }
  p.vertices_ = sorted_unique(std::move(vertices));

  std::vector<FacetRow> rows;
  for (std::size_t j = 0; j < normals.size(); ++j) {
    if (normals[j].size() != n) throw Error(ErrorCode::DimensionMismatch, "normal of wrong dimension");
    rows.push_back(canonical_row(normals[j], rhs[j]));
  }
  std::sort(rows.begin(), rows.end(), row_less);
  rows.erase(std::unique(rows.begin(), rows.end(), row_equal), rows.end());

  const std::size_t nv = p.vertices_.size();
  for (auto& row : rows) {
    boost::dynamic_bitset<> mask(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      const Rational value = row.normal.dot(p.vertices_[i]);
      if (value > row.rhs) {
        throw Error(ErrorCode::InvariantViolation,
                    "vertex " + to_string(p.vertices_[i]) + " violates <" + to_string(row.normal) +
                        ", x> <= " + to_string(row.rhs));
      }
      if (value == row.rhs) mask.set(i);
    }
    if (affine_dimension(select(p.vertices_, mask)) != n - 1) {
      throw Error(ErrorCode::InvariantViolation,
                  "constraint with normal " + to_string(row.normal) + " does not define a facet");
    }
    p.normals_.push_back(std::move(row.normal));
    p.rhs_.push_back(std::move(row.rhs));
    p.facet_masks_.push_back(std::move(mask));
  }
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<Vec> tight;
    for (std::size_t j = 0; j < p.normals_.size(); ++j) {
      if (p.facet_masks_[j].test(i)) tight.push_back(p.normals_[j]);
    }
    if (tight.empty() || rank(rows_of(tight, n)) != n) {
      throw Error(ErrorCode::InvariantViolation, to_string(p.vertices_[i]) + " is not a vertex");
    }
  }
  p.origin_interior_ = std::all_of(p.rhs_.begin(), p.rhs_.end(), [](const Rational& b) { return b > 0; });
  return p;
}

IndexSet Polytope::facet_vertices(std::size_t facet) const { return indices_of(facet_masks_.at(facet)); }

IndexSet Polytope::vertex_facets(std::size_t vertex) const {
  IndexSet out;
  for (std::size_t j = 0; j < facet_masks_.size(); ++j) {
    if (facet_masks_[j].test(vertex)) out.push_back(j);
  }
  return out;
}

bool Polytope::contains(const Vec& x) const {
  for (std::size_t j = 0; j < normals_.size(); ++j) {
    if (normals_[j].dot(x) > rhs_[j]) return false;
  }
  return true;
}

bool Polytope::operator==(const Polytope& other) const {
  if (dim_ != other.dim_ || vertices_.size() != other.vertices_.size() ||
      normals_.size() != other.normals_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!equal(vertices_[i], other.vertices_[i])) return false;
  }
  for (std::size_t j = 0; j < normals_.size(); ++j) {
    if (!equal(normals_[j], other.normals_[j]) || rhs_[j] != other.rhs_[j]) return false;
  }
  return true;
}

Polytope convex_hull(std::span<const Vec> points, const HullOptions& options) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "convex hull of an empty point set");
  const Index n = points.front().size();
  if (n < 1) throw Error(ErrorCode::DegenerateInput, "points of dimension 0");
  if (n > options.dimension_cap) {
    throw Error(ErrorCode::CapExceeded, "dimension " + std::to_string(n) + " exceeds the cap of " +
                                            std::to_string(options.dimension_cap));
  }
  std::vector<Vec> pts = sorted_unique(std::vector<Vec>(points.begin(), points.end()));
  const Index affine_dim = affine_dimension(pts);
  if (affine_dim < n) {
    throw Error(ErrorCode::DegenerateInput, "points have affine rank " + std::to_string(affine_dim + 1) +
                                                " in R^" + std::to_string(n) + " (need " +
                                                std::to_string(n + 1) + ")");
  }
  std::vector<Vec> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    Vec r(n + 1);
    r.head(n) = -p;
    r(n) = 1;
    rows.push_back(std::move(r));
  }
  const auto rays = extreme_rays(rows, n + 1);
  if (!rays) throw Error(ErrorCode::DegenerateInput, "points do not span the ambient space");

  std::vector<Vec> normals;
  std::vector<Rational> rhs;
  for (const auto& ray : rays->rays) {
    const Vec r = to_rational(ray);
    normals.push_back(r.head(n));
    rhs.push_back(r(n));
  }
  std::vector<Vec> vertices;
  for (const auto& p : pts) {
    std::vector<Vec> tight;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (normals[j].dot(p) == rhs[j]) tight.push_back(normals[j]);
    }
    if (!tight.empty() && rank(rows_of(tight, n)) == n) vertices.push_back(p);
  }
  return Polytope::from_representations(std::move(vertices), std::move(normals), std::move(rhs));
}

HPolytope v_to_h(const VPolytope& p, const HullOptions& options) {
  return convex_hull(p.vertices, options).h_rep();
}

VPolytope h_to_v(const HPolytope& p) {
  if (p.normals.size() != p.rhs.size()) {
    throw Error(ErrorCode::DimensionMismatch, "normal and right-hand side counts differ");
  }
  auto vertices = feasible_vertices(p.normals, p.rhs, p.dim);
  if (vertices.empty()) throw Error(ErrorCode::DegenerateInput, "constraints are infeasible");
  const Index d = affine_dimension(vertices);
  if (d < p.dim) {
    throw Error(ErrorCode::DegenerateInput, "region has dimension " + std::to_string(d) + " in R^" +
                                                std::to_string(p.dim));
  }
  return {p.dim, std::move(vertices)};
}

Polytope polytope_from_h(const HPolytope& p) {
  auto v = h_to_v(p);
  return assemble_from_constraints(std::move(v.vertices), p.normals, p.rhs);
}

HPolytope normalize_unit_rhs(const HPolytope& p) {
  const Polytope full = polytope_from_h(p);
  if (!full.origin_interior()) {
    throw Error(ErrorCode::OriginNotInterior, "the origin is not an interior point");
  }
  return full.h_rep();
}

Polytope translate(const Polytope& p, const Vec& offset) {
  std::vector<Vec> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(v + offset);
  std::vector<Rational> rhs;
  for (std::size_t j = 0; j < p.num_facets(); ++j) rhs.push_back(p.rhs()[j] + p.normal(j).dot(offset));
  return Polytope::from_representations(std::move(vertices), p.normals(), std::move(rhs));
}

Polytope scale(const Polytope& p, const Rational& factor) {
  if (factor <= 0) throw Error(ErrorCode::DegenerateInput, "scale factor must be positive");
  std::vector<Vec> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(v * factor);
  std::vector<Rational> rhs;
  for (const auto& b : p.rhs()) rhs.push_back(b * factor);
  return Polytope::from_representations(std::move(vertices), p.normals(), std::move(rhs));
}

Rational simplex_volume(const Simplex& s) {
  const Index n = s.rows();
  if (s.cols() != n + 1) throw Error(ErrorCode::DimensionMismatch, "an n-simplex needs n+1 vertices");
  Mat edges(n, n);
  for (Index k = 0; k < n; ++k) edges.col(k) = s.col(k + 1) - s.col(0);
  return abs(determinant(edges)) / factorial(n);
}

Vec simplex_centroid(const Simplex& s) {
  Vec c = Vec::Zero(s.rows());
  for (Index k = 0; k < s.cols(); ++k) c += s.col(k);
  return c / Rational(s.cols());
}

std::vector<IndexSet> face_triangulation(const Polytope& p, const boost::dynamic_bitset<>& face, Index face_dim) {
  std::vector<IndexSet> out;
  IndexSet prefix;
  pull(p, face, face_dim, prefix, out);
  return out;
}

std::vector<IndexSet> triangulation(const Polytope& p) {
  boost::dynamic_bitset<> all(p.num_vertices());
  all.set();
  return face_triangulation(p, all, p.dim());
}

std::vector<IndexSet> facet_triangulation(const Polytope& p, std::size_t facet) {
  if (facet >= p.num_facets()) throw Error(ErrorCode::IndexOutOfRange, "facet " + std::to_string(facet));
  return face_triangulation(p, p.facet_mask(facet), p.dim() - 1);
}

Simplex simplex_of(const Polytope& p, const IndexSet& indices) {
  Simplex s(p.dim(), static_cast<Index>(indices.size()));
  for (Index k = 0; k < s.cols(); ++k) s.col(k) = p.vertex(indices[k]);
  return s;
}

Rational volume(const Polytope& p) {
  Rational total = 0;
  for (const auto& s : triangulation(p)) total += simplex_volume(simplex_of(p, s));
  return total;
}

Vec centroid(const Polytope& p) {
  Rational total = 0;
  Vec moment = Vec::Zero(p.dim());
  for (const auto& idx : triangulation(p)) {
    const Simplex s = simplex_of(p, idx);
    const Rational v = simplex_volume(s);
    total += v;
    moment += v * simplex_centroid(s);
  }
  return moment / total;
}

Vec facet_centroid(const Polytope& p, std::size_t facet) {
  const Index n = p.dim();
  const auto pieces = facet_triangulation(p, facet);
  if (n == 1) return p.vertex(pieces.front().front());
  const Vec& a = p.normal(facet);
  Index k = 0;
  while (a(k) == 0) ++k;
  // Projection along e_k scales every (n-1)-volume in the facet hyperplane by the same factor.
  Rational total = 0;
  Vec moment = Vec::Zero(n);
  for (const auto& idx : pieces) {
    const Simplex s = simplex_of(p, idx);
    const Mat projected = drop_coordinate(s, k);
    Mat edges(n - 1, n - 1);
    for (Index c = 0; c + 1 < n; ++c) edges.col(c) = projected.col(c + 1) - projected.col(0);
    const Rational w = abs(determinant(edges));
    total += w;
    moment += w * simplex_centroid(s);
  }
  return moment / total;
}

bool is_centered(const Polytope& p) {
  const Vec c = centroid(p);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

Polytope translate_to_centroid(const Polytope& p) { return translate(p, -centroid(p)); }

Polytope polar(const Polytope& p) {
  if (!p.origin_interior()) throw Error(ErrorCode::OriginNotInterior, "polar requires 0 in int P");
  return Polytope::from_representations(p.normals(), p.vertices(),
                                        std::vector<Rational>(p.num_vertices(), Rational(1)));
}

Index face_dimension(const Polytope& p, const IndexSet& face) {
  std::vector<Vec> pts;
  for (const auto i : face) pts.push_back(p.vertex(i));
  return affine_dimension(pts);
}

namespace {

boost::dynamic_bitset<> face_closure(const Polytope& p, const boost::dynamic_bitset<>& set) {
  boost::dynamic_bitset<> closure(p.num_vertices());
  closure.set();
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    if (set.is_subset_of(p.facet_mask(j))) closure &= p.facet_mask(j);
  }
  return closure;
}

}  // namespace

bool is_face(const Polytope& p, const IndexSet& vertices) {
  if (vertices.empty()) return false;
  const auto mask = mask_of(vertices, p.num_vertices());
  if (mask.all()) return false;
  return face_closure(p, mask) == mask;
}

std::vector<IndexSet> faces(const Polytope& p) {
  std::set<IndexSet> seen;
  std::vector<boost::dynamic_bitset<>> frontier;
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    if (seen.insert(indices_of(p.facet_mask(j))).second) frontier.push_back(p.facet_mask(j));
  }
  while (!frontier.empty()) {
    std::vector<boost::dynamic_bitset<>> next;
    for (const auto& f : frontier) {
      for (std::size_t j = 0; j < p.num_facets(); ++j) {
        const auto g = f & p.facet_mask(j);
        if (g.none() || g == f) continue;
        if (seen.insert(indices_of(g)).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  std::vector<IndexSet> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
  return out;
}

IndexSet polar_face(const Polytope& p, const IndexSet& face) {
  if (!p.origin_interior()) throw Error(ErrorCode::OriginNotInterior, "polar requires 0 in int P");
  if (!is_face(p, face)) throw Error(ErrorCode::NotAFace, "vertex set is not a nonempty proper face");
  const auto mask = mask_of(face, p.num_vertices());
  IndexSet out;
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    if (mask.is_subset_of(p.facet_mask(j))) out.push_back(j);
  }
  return out;
}

bool is_simple(const Polytope& p) {
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    if (static_cast<Index>(p.vertex_facets(i).size()) != p.dim()) return false;
  }
  return true;
}

bool is_simplex(const Polytope& p) { return static_cast<Index>(p.num_vertices()) == p.dim() + 1; }

Rational section_profile_q(const Polytope& p, const Vec& u, const Rational& t) {
  const Index n = p.dim();
  if (u.size() != n) throw Error(ErrorCode::DimensionMismatch, "direction dimension differs from polytope");
  Index k = 0;
  while (k < n && u(k) == 0) ++k;
  if (k == n) throw Error(ErrorCode::DegenerateInput, "section direction must be nonzero");
  const Rational level = t * u.squaredNorm();
  if (n == 1) {
    const Vec x = Vec::Constant(1, level / u(0));
    return p.contains(x) ? Rational(1 / abs(u(0))) : Rational(0);
  }
  // Substitute x_k = (level - sum_{j != k} u_j y_j) / u_k into every constraint.
  std::vector<Vec> normals;
  std::vector<Rational> rhs;
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    const Vec& a = p.normal(j);
    Vec reduced(n - 1);
    for (Index c = 0, r = 0; c < n; ++c) {
      if (c == k) continue;
      reduced(r++) = a(c) - a(k) * u(c) / u(k);
    }
    normals.push_back(std::move(reduced));
    rhs.push_back(p.rhs()[j] - a(k) * level / u(k));
  }
  auto vertices = feasible_vertices(normals, rhs, n - 1);
  if (vertices.empty() || affine_dimension(vertices) < n - 1) return 0;
  HullOptions unlimited;
  unlimited.dimension_cap = n;
  return volume(convex_hull(vertices, unlimited)) / abs(u(k));
}

std::optional<std::size_t> pyramid_apex_over(const Polytope& p, std::size_t base_facet) {
  const auto& base = p.facet_mask(base_facet);
  if (base.count() + 1 != p.num_vertices()) return std::nullopt;
  boost::dynamic_bitset<> off = ~base;
  return off.find_first();
}

std::optional<std::size_t> pyramid_base_under(const Polytope& p, std::size_t apex) {
  std::optional<std::size_t> base;
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    if (p.facet_mask(j).test(apex)) continue;
    if (base) return std::nullopt;
    base = j;
  }
  return base;
}

std::optional<PyramidStructure> is_pyramid(const Polytope& p) {
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    if (const auto base = pyramid_base_under(p, i)) return PyramidStructure{i, *base};
  }
  return std::nullopt;
}

ProfileSupport pyramid_profile_support(const Polytope& p, const PyramidStructure& pyramid) {
  const Vec& a = p.normal(pyramid.base_facet);
  const Rational norm2 = a.squaredNorm();
  return {Vec(-a), Rational(-p.rhs()[pyramid.base_facet] / norm2),
          Rational(-a.dot(p.vertex(pyramid.apex)) / norm2)};
}

bool pyramid_profile_identity_holds(const Polytope& p, const PyramidStructure& pyramid, const Rational& t) {
  const auto support = pyramid_profile_support(p, pyramid);
  const Index e = p.dim() - 1;
  const Rational q_t = section_profile_q(p, support.direction, t);
  const Rational q_alpha = section_profile_q(p, support.direction, support.alpha);
  return q_t * power(support.beta - support.alpha, e) == q_alpha * power(support.beta - t, e);
}

Polytope join(const VPolytope& q1, const VPolytope& q2, const HullOptions& options) {
  if (q1.vertices.empty() || q2.vertices.empty()) throw Error(ErrorCode::EmptyInput, "join of an empty polytope");
  if (q1.vertices.front().size() != q2.vertices.front().size()) {
    throw Error(ErrorCode::DimensionMismatch, "join operands live in different spaces");
  }
  if (!flats_complementary(affine_hull(q1.vertices), affine_hull(q2.vertices))) {
    throw Error(ErrorCode::NotComplementary, "affine hulls are not complementary");
  }
  std::vector<Vec> points = q1.vertices;
  points.insert(points.end(), q2.vertices.begin(), q2.vertices.end());
  return convex_hull(points, options);
}

}  // namespace scc
