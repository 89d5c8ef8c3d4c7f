#include "scc/kernel.hpp"

#include <string>

namespace scc {

namespace detail {

std::pair<MatrixX<Integer>, Integer> clear_denominators(const Mat& m) {
  MatrixX<Integer> out(m.rows(), m.cols());
  Integer product = 1;
  for (Index i = 0; i < m.rows(); ++i) {
    Integer lcm_den = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      lcm_den = boost::multiprecision::lcm(lcm_den, denominator(m(i, j)));
    }
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = numerator(m(i, j)) * (lcm_den / denominator(m(i, j)));
    }
    product *= lcm_den;
  }
  return {std::move(out), std::move(product)};
}

Index bareiss_rank(MatrixX<Integer>& m) {
  Index r = 0;
  Integer prev = 1;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(r).swap(m.row(p));
    for (Index i = r + 1; i < m.rows(); ++i) {
      for (Index j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

Integer bareiss_determinant(MatrixX<Integer> m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return negate ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

}  // namespace detail

Mat rows_of(std::span<const Vec> vectors, Index cols) {
  Mat m(static_cast<Index>(vectors.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) {
    if (vectors[i].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "expected vectors of dimension " + std::to_string(cols));
    }
    m.row(i) = vectors[i].transpose();
  }
  return m;
}

Mat homogenize(std::span<const Vec> points) {
  const Index n = points.empty() ? 0 : points.front().size();
  Mat m(static_cast<Index>(points.size()), n + 1);
  for (Index i = 0; i < m.rows(); ++i) {
    if (points[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "points of mixed dimension");
    }
    m(i, 0) = 1;
    m.row(i).tail(n) = points[i].transpose();
  }
  return m;
}

Index affine_dimension(std::span<const Vec> points) {
  if (points.empty()) return -1;
  return rank(homogenize(points)) - 1;
}

namespace {

// Reduces w against RREF rows in place; w lies in the row space iff the result is zero.
bool reduces_to_zero(const Mat& rref_rows, const std::vector<Index>& pivots, Vec w) {
  for (Index r = 0; r < rref_rows.rows(); ++r) {
    const Rational f = w(pivots[r]);
    if (f != 0) w -= f * rref_rows.row(r).transpose();
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

AffineFlat AffineFlat::hull(std::span<const Vec> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "affine hull of an empty point set");
  AffineFlat flat;
  flat.ambient_ = points.front().size();
  auto reduced = rref(homogenize(points));
  flat.canonical_ = reduced.matrix.topRows(reduced.rank);
  flat.pivots_ = std::move(reduced.pivot_columns);
  return flat;
}

bool AffineFlat::contains(const Vec& point) const {
  if (point.size() != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension differs from the flat's ambient space");
  }
  Vec w(ambient_ + 1);
  w(0) = 1;
  w.tail(ambient_) = point;
  return reduces_to_zero(canonical_, pivots_, std::move(w));
}

Mat AffineFlat::homogenized_basis() const {
  Mat out(canonical_.rows(), ambient_ + 1);
  const Vec base = canonical_.row(0).tail(ambient_).transpose();
  for (Index r = 0; r < canonical_.rows(); ++r) {
    Vec p = base;
    if (r > 0) p += canonical_.row(r).tail(ambient_).transpose();
    out.row(r).head(ambient_) = p.transpose();
    out(r, ambient_) = 1;
  }
  return out;
}

std::vector<Vec> AffineFlat::points() const {
  const Mat basis = homogenized_basis();
  std::vector<Vec> out;
  for (Index r = 0; r < basis.rows(); ++r) out.push_back(basis.row(r).head(ambient_).transpose());
  return out;
}

bool AffineFlat::operator==(const AffineFlat& other) const {
  return ambient_ == other.ambient_ && canonical_.rows() == other.canonical_.rows() &&
         canonical_ == other.canonical_;
}

AffineFlat affine_hull(std::span<const Vec> points) { return AffineFlat::hull(points); }

bool flats_complementary(const AffineFlat& a, const AffineFlat& b) {
  const Index n = a.ambient_dim();
  if (b.ambient_dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "flats live in different ambient spaces");
  }
  const Index ha = a.dim() + 1;
  const Index hb = b.dim() + 1;
  if (ha + hb != n + 1) return false;
  Mat stacked(ha + hb, n + 1);
  stacked.topRows(ha) = a.canonical_form();
  stacked.bottomRows(hb) = b.canonical_form();
  return rank(stacked) == n + 1;
}

LinearSubspace LinearSubspace::span(std::span<const Vec> vectors, Index ambient_dim) {
  LinearSubspace out;
  out.ambient_ = ambient_dim;
  if (vectors.empty()) {
    out.basis_.resize(0, ambient_dim);
    return out;
  }
  auto reduced = rref(rows_of(vectors, ambient_dim));
  out.basis_ = reduced.matrix.topRows(reduced.rank);
  out.pivots_ = std::move(reduced.pivot_columns);
  return out;
}

bool LinearSubspace::contains(const Vec& v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "vector dimension differs from the subspace's ambient space");
  }
  return reduces_to_zero(basis_, pivots_, v);
}

bool LinearSubspace::operator==(const LinearSubspace& other) const {
  return ambient_ == other.ambient_ && basis_.rows() == other.basis_.rows() && basis_ == other.basis_;
}

bool subspaces_complementary(const LinearSubspace& a, const LinearSubspace& b) {
  const Index n = a.ambient_dim();
  if (b.ambient_dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  if (a.dim() + b.dim() != n) return false;
  if (n == 0) return true;
  Mat stacked(n, n);
  stacked.topRows(a.dim()) = a.basis();
  stacked.bottomRows(b.dim()) = b.basis();
  return rank(stacked) == n;
}

}  // namespace scc
