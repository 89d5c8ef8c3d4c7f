#include "scc/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include "scc/kernel.hpp"

namespace scc {

namespace {

struct Ray {
  VectorX<Integer> v;
  boost::dynamic_bitset<> zeros;  // processed constraints tight at v
};

Integer dot(const VectorX<Integer>& a, const VectorX<Integer>& b) {
  Integer s = 0;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != 0 && b(i) != 0) s += a(i) * b(i);
  }
  return s;
}

VectorX<Integer> make_primitive(VectorX<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

}  // namespace

std::optional<ExtremeRays> extreme_rays(std::span<const Vec> rows, Index dim) {
  std::vector<VectorX<Integer>> constraints;
  for (const auto& r : rows) {
    if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return x != 0; })) {
      constraints.push_back(primitive_integer(r));
    }
  }
  const std::size_t m = constraints.size();

  // Greedy choice of dim linearly independent constraints for the initial simplicial cone.
  std::vector<std::size_t> basis;
  std::vector<bool> in_basis(m, false);
  Mat chosen(0, dim);
  for (std::size_t i = 0; i < m && static_cast<Index>(basis.size()) < dim; ++i) {
    Mat trial(chosen.rows() + 1, dim);
    trial.topRows(chosen.rows()) = chosen;
    trial.row(chosen.rows()) = to_rational(constraints[i]).transpose();
    if (rank(trial) == trial.rows()) {
      chosen = std::move(trial);
      basis.push_back(i);
      in_basis[i] = true;
    }
  }
  if (static_cast<Index>(basis.size()) < dim) return std::nullopt;

  // Columns of the inverse are the rays of the initial cone: row k of the
  // basis is tight on every ray except the k-th.
  Mat augmented(dim, 2 * dim);
  augmented.leftCols(dim) = chosen;
  augmented.rightCols(dim) = Mat::Identity(dim, dim);
  const Mat inverse = rref(augmented).matrix.rightCols(dim);

  std::vector<Ray> rays;
  for (Index j = 0; j < dim; ++j) {
    Ray ray{primitive_integer(inverse.col(j)), boost::dynamic_bitset<>(m)};
    for (Index k = 0; k < dim; ++k) {
      if (k != j) ray.zeros.set(basis[k]);
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t h = 0; h < m; ++h) {
    if (in_basis[h]) continue;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(constraints[h], rays[i].v);
      if (value[i] > 0) pos.push_back(i);
      else if (value[i] < 0) neg.push_back(i);
      else rays[i].zeros.set(h);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] >= 0) next.push_back(rays[i]);
    }
    for (const std::size_t p : pos) {
      for (const std::size_t n : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
        if (static_cast<Index>(common.count()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != n && common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        VectorX<Integer> v = value[p] * rays[n].v - value[n] * rays[p].v;
        common.set(h);
        next.push_back(Ray{make_primitive(std::move(v)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  ExtremeRays out;
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace scc
