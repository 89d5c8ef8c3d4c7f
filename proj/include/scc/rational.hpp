#pragma once

// Exact scalar types and the Eigen aliases used throughout the library.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace scc {

/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VectorX<Rational>;
using Mat = MatrixX<Rational>;
using Index = Eigen::Index;

/// Sorted list of indices into a vertex or facet list.
using IndexSet = std::vector<std::size_t>;

/// "p/q" with the denominator omitted when it is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Accepts "p/q", "p", and finite decimals such as "-1.25" (converted exactly).
Rational parse_rational(std::string_view text);

/// Decimal rendering with 12 significant digits, for human-facing output only.
std::string to_decimal(const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

template <typename Scalar>
bool lex_less(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <typename Scalar>
bool equal(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

inline Rational power(const Rational& base, Index exponent) {
  Rational r = 1;
  for (Index k = 0; k < exponent; ++k) r *= base;
  return r;
}

/// Exact n! as a rational.
Rational factorial(Index n);

/// Rescales v by a positive factor so that its entries are coprime integers.
VectorX<Integer> primitive_integer(const Vec& v);

Vec to_rational(const VectorX<Integer>& v);

std::string to_string(const Vec& v);

}  // namespace scc
