#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bnwall {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVec = std::vector<Rational>;

/// "p/q" in lowest terms, "p" when q = 1.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

inline RatVec zeros(int len) { return RatVec(static_cast<std::size_t>(len), Rational(0)); }

inline RatVec unit_vector(int len, int i) {
  RatVec v = zeros(len);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace bnwall
