#include "scc/lifting.hpp"

#include <algorithm>
#include <string>

#include "scc/error.hpp"

namespace scc {

namespace {

// Appends a row of ones and the apex -(k+1) e_{k+1} as a final column.
Mat lift_columns(const Mat& s) {
  const Index k = s.rows();
  Mat out = Mat::Zero(k + 1, s.cols() + 1);
  out.topLeftCorner(k, s.cols()) = s;
  out.row(k).head(s.cols()).setConstant(Rational(1));
  out(k, s.cols()) = Rational(-(k + 1));
  return out;
}

std::size_t find_normal(const Polytope& p, const Vec& a) {
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    if (equal(p.normal(j), a)) return j;
  }
  throw Error(ErrorCode::InvariantViolation, "lifted normal " + to_string(a) + " is not a facet normal");
}

void require(bool ok, std::size_t level, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvariantViolation, "tower level " + std::to_string(level) + ": " + what);
}

Rational cone_sum(const std::vector<Mat>& cones) {
  if (cones.empty()) return 0;
  Rational total = 0;
  for (const auto& c : cones) total += abs(determinant(c));
  return total / factorial(cones.front().rows());
}

}  // namespace

Polytope pyr(const Polytope& q) {
  if (!q.origin_interior()) throw Error(ErrorCode::OriginNotInterior, "pyr needs the origin in the interior");
  const Index k = q.dim();
  std::vector<Vec> vertices;
  for (const auto& v : q.vertices()) {
    Vec w(k + 1);
    w.head(k) = v;
    w(k) = 1;
    vertices.push_back(std::move(w));
  }
  Vec apex = Vec::Zero(k + 1);
  apex(k) = -(k + 1);
  vertices.push_back(std::move(apex));

  std::vector<Vec> normals;
  for (const auto& a : q.normals()) normals.push_back(phi(k, a));
  Vec cap = Vec::Zero(k + 1);
  cap(k) = 1;
  normals.push_back(std::move(cap));
  std::vector<Rational> rhs(normals.size(), Rational(1));
  return Polytope::from_representations(std::move(vertices), std::move(normals), std::move(rhs));
}

Vec phi(Index k, const Vec& x) {
  if (k < 1 || x.size() != k) {
    throw Error(ErrorCode::DimensionMismatch,
                "phi_" + std::to_string(k) + " applied to a vector of size " + std::to_string(x.size()));
  }
  Vec out(k + 1);
  out.head(k) = x * Rational(k + 2, k + 1);
  out(k) = Rational(-1, k + 1);
  return out;
}

Vec lifted_normal(const Vec& a, Index j) {
  const Index n = a.size();
  Vec out(n + j);
  out.head(n) = a * Rational(n + j + 1, n + 1);
  for (Index k = 1; k <= j; ++k) out(n + k - 1) = Rational(-(n + j + 1), (n + k) * (n + k + 1));
  return out;
}

LiftTower build_tower(const Polytope& p, Index j_max, const TowerOptions& options) {
  if (j_max < 0 || j_max > options.max_levels) {
    throw Error(ErrorCode::CapExceeded,
                std::to_string(j_max) + " levels requested, at most " + std::to_string(options.max_levels));
  }
  if (!is_centered(p)) throw Error(ErrorCode::NotCentered, "the tower needs a centered base");
  const Index n = p.dim();

  std::vector<Mat> simplices;
  for (const auto& idx : triangulation(p)) simplices.push_back(simplex_of(p, idx));
  // For each base facet, the cones over its triangulation with the origin.
  std::vector<std::vector<Mat>> facet_cones(p.num_facets());
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    for (const auto& idx : facet_triangulation(p, i)) {
      Mat m(n, n);
      for (Index c = 0; c < n; ++c) m.col(c) = p.vertex(idx[c]);
      facet_cones[i].push_back(std::move(m));
    }
  }

  LiftTower tower;
  tower.base_dim = n;
  {
    TowerLevel base;
    base.polytope = p;
    base.volume = 0;
    for (const auto& s : simplices) base.volume += simplex_volume(s);
    base.centroid = Vec::Zero(n);
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
      base.lifted_facet.push_back(i);
      base.cone_volumes.push_back(cone_sum(facet_cones[i]));
    }
    base.hull_verified = true;
    tower.levels.push_back(std::move(base));
  }
  const Rational base_volume = tower.levels.front().volume;
  const std::vector<Rational> base_cones = tower.levels.front().cone_volumes;

  for (Index j = 1; j <= j_max; ++j) {
    const TowerLevel& prev = tower.levels.back();
    const Index k = n + j - 1;
    TowerLevel level;
    level.polytope = pyr(prev.polytope);
    const Polytope& q = level.polytope;
    const auto lj = static_cast<std::size_t>(j);

    // Closed-form normals; every facet is a lift of a previous facet or the new cap.
    level.cone_volumes.assign(q.num_facets(), Rational(0));
    for (std::size_t f = 0; f < prev.polytope.num_facets(); ++f) {
      level.cone_volumes[find_normal(q, phi(k, prev.polytope.normal(f)))] = prev.cone_volumes[f];
    }
    Vec cap = Vec::Zero(k + 1);
    cap(k) = 1;
    level.cone_volumes[find_normal(q, cap)] = prev.volume / (k + 1);
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
      level.lifted_facet.push_back(find_normal(q, lifted_normal(p.normal(i), j)));
    }

    Rational vol = 0;
    Vec moment = Vec::Zero(k + 1);
    for (auto& s : simplices) {
      s = lift_columns(s);
      const Rational v = simplex_volume(s);
      vol += v;
      moment += v * simplex_centroid(s);
    }
    level.volume = vol;
    level.centroid = moment / vol;
    require(vol == Rational(n + j + 1, n + 1) * base_volume, lj, "volume scaling fails");
    require(std::all_of(level.centroid.begin(), level.centroid.end(), [](const Rational& x) { return x.is_zero(); }),
            lj, "centroid is " + to_string(level.centroid));

    for (std::size_t i = 0; i < p.num_facets(); ++i) {
      for (auto& c : facet_cones[i]) c = lift_columns(c);
      const Rational cone = cone_sum(facet_cones[i]);
      require(cone == base_cones[i], lj, "cone volume of lifted facet " + std::to_string(i) + " changed");
      require(level.cone_volumes[level.lifted_facet[i]] == cone, lj, "cone bookkeeping mismatch");
    }
    Rational total = 0;
    for (const auto& w : level.cone_volumes) total += w;
    require(total == vol, lj, "cone volumes do not sum to the volume");

    if (k + 1 <= options.verify_hull_through_dim) {
      HullOptions hull;
      hull.dimension_cap = k + 1;
      require(convex_hull(q.vertices(), hull) == q, lj, "independent hull differs from the closed form");
      require(volume(q) == vol, lj, "triangulated volume differs");
      const auto measure = cone_volume_measure(q);
      for (std::size_t f = 0; f < q.num_facets(); ++f) {
        require(measure.atoms[f].weight == level.cone_volumes[f], lj, "cone volume differs from direct triangulation");
      }
      level.hull_verified = true;
    }
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

Rational tower_bound(const CenteredPolytope& p, const AffineFlat& flat, Index j) {
  const Index n = p.dim();
  if (j < 1) throw Error(ErrorCode::DegenerateInput, "tower levels start at 1");
  if (flat.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "flat and polytope dimensions differ");
  if (flat.dim() < 0 || flat.dim() > n - 1) throw Error(ErrorCode::DegenerateInput, "flat must be proper");
  const Index d = flat.dim();
  return Rational(d + 1, n + j) * Rational(n + j + 1, n + 1) * p.volume();
}

Rational tower_bound(const Polytope& p, const AffineFlat& flat, Index j) {
  return tower_bound(CenteredPolytope(p), flat, j);
}

TowerCertificate tower_certificate(const LiftTower& tower, const AffineFlat& flat, std::size_t level) {
  if (level < 1 || level >= tower.levels.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "tower level " + std::to_string(level));
  }
  const Index n = tower.base_dim;
  const auto j = static_cast<Index>(level);
  if (flat.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "flat and polytope dimensions differ");
  if (flat.dim() < 0 || flat.dim() > n - 1) throw Error(ErrorCode::DegenerateInput, "flat must be proper");
  const Index d = flat.dim();
  const auto& lv = tower.levels[level];

  std::vector<Vec> lifted;
  for (const auto& x : flat.points()) lifted.push_back(lifted_normal(x, j));
  const auto span = LinearSubspace::span(lifted, n + j);

  TowerCertificate c;
  c.level = j;
  c.span_dim = span.dim();
  c.lhs = 0;
  for (std::size_t f = 0; f < lv.polytope.num_facets(); ++f) {
    if (span.contains(lv.polytope.normal(f))) c.lhs += lv.cone_volumes[f];
  }
  c.rhs = Rational(c.span_dim, n + j) * lv.volume;
  c.bound = Rational(d + 1, n + j) * Rational(n + j + 1, n + 1) * tower.levels.front().volume;
  c.valid = c.span_dim == d + 1 && c.rhs == c.bound && c.lhs <= c.rhs;
  return c;
}

}  // namespace scc
