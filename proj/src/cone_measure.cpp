#include "scc/cone_measure.hpp"

#include <string>

#include "scc/error.hpp"

namespace scc {

namespace {

void require_origin_interior(const Polytope& p) {
  if (!p.origin_interior()) {
    throw Error(ErrorCode::OriginNotInterior, "cone volumes need the origin in the interior");
  }
}

Rational cone_volume_unchecked(const Polytope& p, std::size_t facet) {
  const Index n = p.dim();
  Rational total = 0;
  for (const auto& idx : facet_triangulation(p, facet)) {
    total += abs(determinant(simplex_of(p, idx)));
  }
  return total / factorial(n);
}

}  // namespace

Rational cone_volume(const Polytope& p, std::size_t facet) {
  if (facet >= p.num_facets()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "facet " + std::to_string(facet) + " of " + std::to_string(p.num_facets()));
  }
  require_origin_interior(p);
  return cone_volume_unchecked(p, facet);
}

ConeVolumeMeasure cone_volume_measure(const Polytope& p) {
  require_origin_interior(p);
  ConeVolumeMeasure measure;
  measure.total = 0;
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    Rational w = cone_volume_unchecked(p, j);
    measure.total += w;
    measure.atoms.push_back({p.normal(j), std::move(w)});
  }
  return measure;
}

PyramidFormulaCheck pyramid_formula_check(const Polytope& p) {
  PyramidFormulaCheck check;
  check.lhs = volume(p);
  check.rhs = cone_volume_measure(p).total;
  check.equal = check.lhs == check.rhs;
  return check;
}

Rational facet_cone_functional(const Polytope& p, std::span<const std::size_t> facets, const Vec& x) {
  require_origin_interior(p);
  if (x.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from polytope");
  Rational value = 0;
  for (const auto j : facets) {
    value += (1 - p.normal(j).dot(x)) * cone_volume(p, j);
  }
  return value;
}

}  // namespace scc
