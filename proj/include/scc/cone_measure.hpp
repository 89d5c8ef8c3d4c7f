#pragma once

#include <span>
#include <vector>

#include "scc/polytope.hpp"

namespace scc {

struct MeasureAtom {
  Vec normal;
  Rational weight;
};

/// Discrete cone-volume measure keyed by the exact unit-rhs facet normals.
struct ConeVolumeMeasure {
  std::vector<MeasureAtom> atoms;
  Rational total;
};

/// vol(conv({0} u F_j)), from a triangulation of the facet coned at the origin.
Rational cone_volume(const Polytope& p, std::size_t facet);

ConeVolumeMeasure cone_volume_measure(const Polytope& p);

struct PyramidFormulaCheck {
  Rational lhs;  // vol(P)
  Rational rhs;  // sum of cone volumes
  bool equal = false;
};

PyramidFormulaCheck pyramid_formula_check(const Polytope& p);

/// sum_{i in facets} (1 - <a_i, x>) vol(C_i). Affine in x; for x in P it
/// equals sum_i vol(conv(F_i u {x})).
Rational facet_cone_functional(const Polytope& p, std::span<const std::size_t> facets, const Vec& x);

}  // namespace scc
