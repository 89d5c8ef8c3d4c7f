#pragma once

// Linear and affine subspace concentration audits for centered polytopes,
// together with the structural equality cases (pyramids, simplices, joins).

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "scc/cone_measure.hpp"
#include "scc/kernel.hpp"
#include "scc/polytope.hpp"

namespace scc {

/// A polytope whose centroid is exactly the origin, with its cone-volume
/// measure and volume computed once.
class CenteredPolytope {
 public:
  /// Throws NotCentered unless centroid(p) == 0.
  explicit CenteredPolytope(Polytope p);

  const Polytope& polytope() const { return polytope_; }
  const ConeVolumeMeasure& measure() const { return measure_; }
  const Rational& volume() const { return volume_; }
  Index dim() const { return polytope_.dim(); }

 private:
  Polytope polytope_;
  ConeVolumeMeasure measure_;
  Rational volume_;
};

enum class FlatKind { Affine, Linear };

using Flat = std::variant<AffineFlat, LinearSubspace>;

struct ConcentrationReport {
  FlatKind kind = FlatKind::Affine;
  Flat flat;
  Index flat_dim = 0;
  IndexSet members;  // facets whose normal lies in the flat
  Rational lhs;
  Rational rhs;
  Rational slack;
  bool equality = false;
  /// Complementary flat containing every other normal, when one was found.
  std::optional<Flat> witness;
  IndexSet witness_members;
};

/// lhs = sum of cone volumes over normals in L, rhs = (dim L / n) vol(P).
ConcentrationReport linear_scc(const CenteredPolytope& p, const LinearSubspace& subspace);
ConcentrationReport linear_scc(const Polytope& p, std::span<const Vec> spanning_vectors);

/// lhs = sum of cone volumes over normals in A, rhs = (dim A + 1)/(n + 1) vol(P).
/// On equality the only witness tried is aff{a_i not in A}.
ConcentrationReport affine_scc(const CenteredPolytope& p, const AffineFlat& flat);
ConcentrationReport affine_scc(const Polytope& p, const AffineFlat& flat);

/// A flat spanned by a subset of a point list, identified with the indices
/// of every listed point it contains.
struct PointFlat {
  AffineFlat flat;
  IndexSet members;
};

struct PointSpan {
  LinearSubspace span;
  IndexSet members;
};

constexpr std::size_t kDefaultFacetCap = 14;
constexpr std::size_t kDefaultVertexCap = 24;

/// All distinct affine hulls of subsets of points with dimension <= max_dim,
/// ordered by dimension and then by member list. Throws TooManyFacets when
/// there are more than cap points.
std::vector<PointFlat> enumerate_flats(std::span<const Vec> points, Index max_dim,
                                       std::size_t cap = kDefaultFacetCap);
std::vector<PointSpan> enumerate_spans(std::span<const Vec> vectors, Index max_dim,
                                       std::size_t cap = kDefaultFacetCap);

std::vector<PointFlat> enumerate_normal_flats(const Polytope& p, Index max_dim,
                                              std::size_t facet_cap = kDefaultFacetCap);

struct AuditOptions {
  /// Largest flat dimension audited; negative means n - 1.
  Index max_flat_dim = -1;
  bool affine = true;
  bool linear = true;
  std::size_t facet_cap = kDefaultFacetCap;
};

/// Affine reports for every normal flat, then linear reports for every proper
/// linear span of normals.
std::vector<ConcentrationReport> full_audit(const CenteredPolytope& p, const AuditOptions& options = {});

struct JoinSplit {
  IndexSet first;   // contains vertex 0
  IndexSet second;
  VPolytope q1;
  VPolytope q2;
};

/// Partition of the vertices into two sets with complementary affine hulls,
/// the lexicographically smallest one when several exist.
std::optional<JoinSplit> detect_join_structure(const Polytope& p, std::size_t vertex_cap = kDefaultVertexCap);

struct JoinDualityResult {
  bool primal_join = false;
  bool polar_join = false;
};

/// Join detection on P and on its polar; the two answers always agree.
JoinDualityResult join_duality_roundtrip(const Polytope& p, std::size_t vertex_cap = kDefaultVertexCap);

enum class EqualityKind {
  PyramidBase,  // singleton flat {a_i}
  PyramidApex,  // hyperplane through the normals of the facets at a vertex
  Simplex,      // flat from the facets containing a k-face, 1 <= k <= n-1, P simple
};

struct EqualityCase {
  EqualityKind kind = EqualityKind::PyramidBase;
  AffineFlat flat;
  IndexSet members;
  /// Facet index for PyramidBase, vertex index for PyramidApex, and the face's
  /// vertex set for Simplex.
  IndexSet anchor;
  Rational slack;
  /// Whether P has the structure the equality characterizes.
  bool structure = false;
  /// slack == 0 exactly when the structure is present.
  bool consistent = false;
};

/// Every flat of the three kinds above where the slack vanishes or the
/// structure is present. Inconsistent entries indicate a library bug.
std::vector<EqualityCase> classify_equality_cases(const CenteredPolytope& p);

/// For every vertex v, -v/n satisfies every facet inequality.
bool grunbaum_point_check(const CenteredPolytope& p);
bool grunbaum_point_check(const Polytope& p);

}  // namespace scc
