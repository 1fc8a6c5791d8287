#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace berge {

/// Exact rational used for every bound comparison.
using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor(const Rational& q) {
  std::int64_t f = q.numerator() / q.denominator();
  if (q.numerator() < 0 && f * q.denominator() != q.numerator()) --f;
  return f;
}

/// "5/2", or "3" when the value is an integer.
inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace berge
