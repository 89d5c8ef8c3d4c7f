#pragma once

// Exact linear algebra over Eigen dense types and affine flats encoded by
// homogenization. The templates accept any Eigen expression; elimination
// routines assume the scalar is a field except where noted.

#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "scc/error.hpp"
#include "scc/rational.hpp"

namespace scc {

template <typename Scalar>
struct RrefResult {
  MatrixX<Scalar> matrix;
  Index rank = 0;
  std::vector<Index> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination over a field.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out;
  out.matrix = input;
  auto& m = out.matrix;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(row).swap(m.row(pivot));
    const Scalar p = m(row, col);
    if (p != 1) {
      for (Index j = col; j < m.cols(); ++j) m(row, j) /= p;
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      for (Index j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

namespace detail {

/// Scales every row by the lcm of its denominators. Returns the scaled
/// integer matrix and the product of the row factors.
std::pair<MatrixX<Integer>, Integer> clear_denominators(const Mat& m);

/// Fraction-free echelon reduction in place; returns the rank.
Index bareiss_rank(MatrixX<Integer>& m);

/// Fraction-free determinant of a square integer matrix.
Integer bareiss_determinant(MatrixX<Integer> m);

}  // namespace detail

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    auto scaled = detail::clear_denominators(m.eval()).first;
    return detail::bareiss_rank(scaled);
  } else if constexpr (std::is_same_v<Scalar, Integer>) {
    MatrixX<Integer> copy = m;
    return detail::bareiss_rank(copy);
  } else {
    return rref(m).rank;
  }
}

/// Exact determinant via fraction-free elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NonSquare, "determinant of a " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  }
  if constexpr (std::is_same_v<Scalar, Rational>) {
    auto [scaled, factor] = detail::clear_denominators(m.eval());
    return Rational(detail::bareiss_determinant(std::move(scaled)), factor);
  } else {
    static_assert(std::is_same_v<Scalar, Integer>, "determinant expects an exact scalar");
    return detail::bareiss_determinant(m.eval());
  }
}

/// Stacks vectors as the rows of a matrix.
Mat rows_of(std::span<const Vec> vectors, Index cols);

/// Rows (1, v) for each v.
Mat homogenize(std::span<const Vec> points);

/// Dimension of the affine hull (-1 for an empty list).
Index affine_dimension(std::span<const Vec> points);

/// Affine subspace of R^n stored as the canonical RREF of its homogenized
/// generators, with the homogenizing coordinate placed first. Two flats are
/// equal iff their canonical forms are equal.
class AffineFlat {
 public:
  AffineFlat() = default;

  static AffineFlat hull(std::span<const Vec> points);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return canonical_.rows() - 1; }

  bool contains(const Vec& point) const;

  /// Rows are [1 | p] for one point p of the flat, then [0 | d_k] for a basis
  /// of directions, in reduced echelon form.
  const Mat& canonical_form() const { return canonical_; }

  /// Affinely independent points spanning the flat, as rows (a, 1).
  Mat homogenized_basis() const;
  std::vector<Vec> points() const;

  bool operator==(const AffineFlat& other) const;

 private:
  Index ambient_ = 0;
  Mat canonical_;
  std::vector<Index> pivots_;
};

AffineFlat affine_hull(std::span<const Vec> points);

/// True iff the homogenized spans meet trivially and jointly span R^{n+1},
/// i.e. the flats are disjoint, dim A + dim B = n - 1 and aff(A u B) = R^n.
bool flats_complementary(const AffineFlat& a, const AffineFlat& b);

/// Linear subspace stored as an RREF basis.
class LinearSubspace {
 public:
  LinearSubspace() = default;

  static LinearSubspace span(std::span<const Vec> vectors, Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool contains(const Vec& v) const;
  const Mat& basis() const { return basis_; }

  bool operator==(const LinearSubspace& other) const;

 private:
  Index ambient_ = 0;
  Mat basis_;
  std::vector<Index> pivots_;
};

/// L + L' = R^n with L n L' = {0}.
bool subspaces_complementary(const LinearSubspace& a, const LinearSubspace& b);

}  // namespace scc
