#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace sparse_ramsey {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

inline std::int64_t ceil(const Rational& r) { return -floor(-r); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace sparse_ramsey
