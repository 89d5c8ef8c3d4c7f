#pragma once

// Motzkin's double description method for the cone {x : <r, x> >= 0 for all rows r}.

#include <optional>
#include <span>
#include <vector>

#include "scc/rational.hpp"

namespace scc {

struct ExtremeRays {
  /// Primitive integer generators, one per extreme ray, in discovery order.
  std::vector<VectorX<Integer>> rays;
};

/// Extreme rays of a pointed polyhedral cone. Returns std::nullopt when the
/// constraint rows have rank below the ambient dimension (the cone then has a
/// nontrivial lineality space).
std::optional<ExtremeRays> extreme_rays(std::span<const Vec> rows, Index dim);

}  // namespace scc
