#include "scc/concentration.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "scc/error.hpp"

namespace scc {

namespace {

std::vector<Vec> select(std::span<const Vec> points, const IndexSet& idx) {
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (const auto i : idx) out.push_back(points[i]);
  return out;
}

IndexSet complement(const IndexSet& set, std::size_t n) {
  IndexSet out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < set.size() && set[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

template <typename Space>
IndexSet members_of(const Space& space, std::span<const Vec> points) {
  IndexSet out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (space.contains(points[i])) out.push_back(i);
  }
  return out;
}

Rational sum_weights(const ConeVolumeMeasure& measure, const IndexSet& members) {
  Rational s = 0;
  for (const auto i : members) s += measure.atoms[i].weight;
  return s;
}

void finish(ConcentrationReport& r) {
  r.slack = r.rhs - r.lhs;
  r.equality = r.slack.is_zero();
}

// Closure enumeration shared by affine and linear flats: grow each flat by one
// outside point per level. `make` builds the flat spanned by a point list.
template <typename Space, typename Make>
std::vector<std::pair<Space, IndexSet>> closure_enumerate(std::span<const Vec> points, Index lowest,
                                                          Index max_dim, Make make) {
  std::vector<std::pair<Space, IndexSet>> all;
  std::set<IndexSet> seen;
  std::vector<std::pair<Space, IndexSet>> level;

  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Vec> seed{points[i]};
    Space s = make(seed);
    if (s.dim() != lowest) continue;
    IndexSet members = members_of(s, points);
    if (seen.insert(members).second) level.emplace_back(std::move(s), std::move(members));
  }

  for (Index d = lowest; d <= max_dim && !level.empty(); ++d) {
    std::vector<std::pair<Space, IndexSet>> next;
    for (const auto& [space, members] : level) {
      if (d == max_dim) break;
      std::vector<bool> covered(points.size(), false);
      for (const auto i : members) covered[i] = true;
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (covered[j]) continue;
        auto gens = select(points, members);
        gens.push_back(points[j]);
        Space bigger = make(gens);
        IndexSet grown = members_of(bigger, points);
        for (const auto k : grown) covered[k] = true;
        if (seen.insert(grown).second) next.emplace_back(std::move(bigger), std::move(grown));
      }
    }
    for (auto& entry : level) all.push_back(std::move(entry));
    level = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.first.dim() != y.first.dim()) return x.first.dim() < y.first.dim();
    return x.second < y.second;
  });
  return all;
}

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap) {
    throw Error(ErrorCode::TooManyFacets,
                std::to_string(count) + " points exceed the enumeration cap of " + std::to_string(cap));
  }
}

}  // namespace

CenteredPolytope::CenteredPolytope(Polytope p) : polytope_(std::move(p)) {
  if (!is_centered(polytope_)) {
    throw Error(ErrorCode::NotCentered, "centroid is " + to_string(centroid(polytope_)));
  }
  measure_ = cone_volume_measure(polytope_);
  volume_ = measure_.total;
}

ConcentrationReport linear_scc(const CenteredPolytope& cp, const LinearSubspace& subspace) {
  const auto& p = cp.polytope();
  if (subspace.ambient_dim() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspace and polytope live in different dimensions");
  }
  ConcentrationReport r;
  r.kind = FlatKind::Linear;
  r.flat = subspace;
  r.flat_dim = subspace.dim();
  r.members = members_of(subspace, p.normals());
  r.lhs = sum_weights(cp.measure(), r.members);
  r.rhs = Rational(subspace.dim(), p.dim()) * cp.volume();
  finish(r);
  if (r.equality) {
    const IndexSet rest = complement(r.members, p.num_facets());
    const auto others = select(p.normals(), rest);
    auto other = LinearSubspace::span(others, p.dim());
    if (subspaces_complementary(subspace, other)) {
      r.witness = std::move(other);
      r.witness_members = rest;
    }
  }
  return r;
}

ConcentrationReport linear_scc(const Polytope& p, std::span<const Vec> spanning_vectors) {
  return linear_scc(CenteredPolytope(p), LinearSubspace::span(spanning_vectors, p.dim()));
}

ConcentrationReport affine_scc(const CenteredPolytope& cp, const AffineFlat& flat) {
  const auto& p = cp.polytope();
  if (flat.ambient_dim() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "flat and polytope live in different dimensions");
  }
  if (flat.dim() < 0) throw Error(ErrorCode::EmptyInput, "empty flat");
  ConcentrationReport r;
  r.kind = FlatKind::Affine;
  r.flat = flat;
  r.flat_dim = flat.dim();
  r.members = members_of(flat, p.normals());
  r.lhs = sum_weights(cp.measure(), r.members);
  r.rhs = Rational(flat.dim() + 1, p.dim() + 1) * cp.volume();
  finish(r);
  if (r.equality) {
    const IndexSet rest = complement(r.members, p.num_facets());
    if (!rest.empty()) {
      auto other = affine_hull(select(p.normals(), rest));
      if (flats_complementary(flat, other)) {
        r.witness = std::move(other);
        r.witness_members = rest;
      }
    }
  }
  return r;
}

ConcentrationReport affine_scc(const Polytope& p, const AffineFlat& flat) {
  return affine_scc(CenteredPolytope(p), flat);
}

std::vector<PointFlat> enumerate_flats(std::span<const Vec> points, Index max_dim, std::size_t cap) {
  check_cap(points.size(), cap);
  std::vector<PointFlat> out;
  if (points.empty() || max_dim < 0) return out;
  auto raw = closure_enumerate<AffineFlat>(points, 0, max_dim,
                                           [](std::span<const Vec> pts) { return AffineFlat::hull(pts); });
  for (auto& [flat, members] : raw) out.push_back({std::move(flat), std::move(members)});
  return out;
}

std::vector<PointSpan> enumerate_spans(std::span<const Vec> vectors, Index max_dim, std::size_t cap) {
  check_cap(vectors.size(), cap);
  std::vector<PointSpan> out;
  if (vectors.empty() || max_dim < 1) return out;
  const Index n = vectors.front().size();
  auto raw = closure_enumerate<LinearSubspace>(
      vectors, 1, max_dim, [n](std::span<const Vec> v) { return LinearSubspace::span(v, n); });
  for (auto& [span, members] : raw) out.push_back({std::move(span), std::move(members)});
  return out;
}

std::vector<PointFlat> enumerate_normal_flats(const Polytope& p, Index max_dim, std::size_t facet_cap) {
  return enumerate_flats(p.normals(), max_dim, facet_cap);
}

std::vector<ConcentrationReport> full_audit(const CenteredPolytope& cp, const AuditOptions& options) {
  const auto& p = cp.polytope();
  const Index n = p.dim();
  const Index max_dim = options.max_flat_dim < 0 ? n - 1 : std::min(options.max_flat_dim, n - 1);
  check_cap(p.num_facets(), options.facet_cap);
  std::vector<ConcentrationReport> reports;
  if (options.affine) {
    for (const auto& f : enumerate_normal_flats(p, max_dim, options.facet_cap)) {
      reports.push_back(affine_scc(cp, f.flat));
    }
  }
  if (options.linear) {
    for (const auto& s : enumerate_spans(p.normals(), max_dim, options.facet_cap)) {
      reports.push_back(linear_scc(cp, s.span));
    }
  }
  return reports;
}

std::optional<JoinSplit> detect_join_structure(const Polytope& p, std::size_t vertex_cap) {
  const Index n = p.dim();
  const auto& verts = p.vertices();
  if (verts.size() > vertex_cap) {
    throw Error(ErrorCode::CapExceeded, std::to_string(verts.size()) + " vertices exceed the join search cap of " +
                                            std::to_string(vertex_cap));
  }
  if (n < 1) return std::nullopt;
  // One side of any split has dimension at most (n - 1) / 2.
  std::optional<std::pair<IndexSet, IndexSet>> best;
  for (const auto& f : enumerate_flats(verts, (n - 1) / 2, vertex_cap)) {
    IndexSet rest = complement(f.members, verts.size());
    if (rest.empty()) continue;
    const auto rest_points = select(verts, rest);
    if (affine_dimension(rest_points) != n - 1 - f.flat.dim()) continue;
    if (!flats_complementary(f.flat, affine_hull(rest_points))) continue;
    IndexSet first = f.members;
    IndexSet second = std::move(rest);
    if (first.front() != 0) std::swap(first, second);
    if (!best || first < best->first) best.emplace(std::move(first), std::move(second));
  }
  if (!best) return std::nullopt;
  JoinSplit split;
  split.first = best->first;
  split.second = best->second;
  split.q1 = {n, select(verts, split.first)};
  split.q2 = {n, select(verts, split.second)};
  return split;
}

JoinDualityResult join_duality_roundtrip(const Polytope& p, std::size_t vertex_cap) {
  if (!p.origin_interior()) throw Error(ErrorCode::OriginNotInterior, "polarity needs the origin in the interior");
  JoinDualityResult r;
  r.primal_join = detect_join_structure(p, vertex_cap).has_value();
  r.polar_join = detect_join_structure(polar(p), vertex_cap).has_value();
  return r;
}

std::vector<EqualityCase> classify_equality_cases(const CenteredPolytope& cp) {
  const auto& p = cp.polytope();
  const Index n = p.dim();
  std::vector<EqualityCase> out;

  auto add = [&](EqualityKind kind, const AffineFlat& flat, IndexSet anchor, bool structure) {
    auto report = affine_scc(cp, flat);
    if (!report.equality && !structure) return;
    EqualityCase c;
    c.kind = kind;
    c.flat = flat;
    c.members = std::move(report.members);
    c.anchor = std::move(anchor);
    c.slack = report.slack;
    c.structure = structure;
    c.consistent = report.equality == structure;
    out.push_back(std::move(c));
  };

  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    std::vector<Vec> single{p.normal(i)};
    add(EqualityKind::PyramidBase, affine_hull(single), {i}, pyramid_apex_over(p, i).has_value());
  }

  for (std::size_t v = 0; v < p.num_vertices(); ++v) {
    const auto normals = select(p.normals(), p.vertex_facets(v));
    auto flat = affine_hull(normals);
    if (flat.dim() != n - 1) continue;
    add(EqualityKind::PyramidApex, flat, {v}, pyramid_base_under(p, v).has_value());
  }

  if (is_simple(p)) {
    const bool simplex = is_simplex(p);
    for (const auto& face : faces(p)) {
      const Index k = face_dimension(p, face);
      if (k < 1 || k > n - 1) continue;
      IndexSet containing;
      for (std::size_t j = 0; j < p.num_facets(); ++j) {
        if (std::all_of(face.begin(), face.end(), [&](std::size_t v) { return p.incident(v, j); })) {
          containing.push_back(j);
        }
      }
      add(EqualityKind::Simplex, affine_hull(select(p.normals(), containing)), face, simplex);
    }
  }
  return out;
}

bool grunbaum_point_check(const CenteredPolytope& cp) {
  const auto& p = cp.polytope();
  const Rational scale_by(-1, p.dim());
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](const Vec& v) { return p.contains(Vec(v * scale_by)); });
}

bool grunbaum_point_check(const Polytope& p) { return grunbaum_point_check(CenteredPolytope(p)); }

}  // namespace scc
