#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "scc/rational.hpp"

namespace scc::test {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline Vec vec(std::initializer_list<Rational> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index k = 0;
  for (const auto& x : xs) v(k++) = x;
  return v;
}

inline std::vector<Vec> points(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) out.push_back(vec(r));
  return out;
}

inline Mat mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  const auto pts = points(rows);
  Mat m(static_cast<Index>(pts.size()), pts.empty() ? 0 : pts.front().size());
  for (Index r = 0; r < m.rows(); ++r) m.row(r) = pts[static_cast<std::size_t>(r)].transpose();
  return m;
}

inline bool same(const Vec& a, const Vec& b) { return equal(a, b); }

}  // namespace scc::test
