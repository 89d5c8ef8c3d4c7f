#include "scc/rational.hpp"

#include <cctype>
#include <cstdio>

#include "scc/error.hpp"

namespace scc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(trim(s.substr(0, slash)), text);
    const Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !is_integer_literal(int_part)) ||
        (!frac_part.empty() && !is_integer_literal(frac_part)) ||
        (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+'))) {
      throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
    }
    const std::string digits = std::string(int_part) + std::string(frac_part);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational value(Integer(digits.empty() ? "0" : digits), scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(s, text));
}

std::string to_decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.convert_to<double>());
  return buf;
}

Rational factorial(Index n) {
  Rational f = 1;
  for (Index k = 2; k <= n; ++k) f *= k;
  return f;
}

VectorX<Integer> primitive_integer(const Vec& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  VectorX<Integer> out(v.size());
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    out(i) = numerator(v(i)) * (lcm_den / denominator(v(i)));
    g = boost::multiprecision::gcd(g, out(i));
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

Vec to_rational(const VectorX<Integer>& v) {
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v(i));
  }
  return s + ")";
}

}  // namespace scc
