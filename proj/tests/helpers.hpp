#pragma once

#include "bnwall/cone.hpp"
#include "bnwall/quiver.hpp"
#include "bnwall/representation.hpp"

#include <initializer_list>

namespace testing {

inline bnwall::RatVec vec(std::initializer_list<int> xs) {
  bnwall::RatVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline bnwall::DimVector dv(std::initializer_list<int> xs) { return bnwall::DimVector{std::vector<int>(xs)}; }

inline bnwall::Walk walk(const char* text) { return bnwall::parse_walk(text); }

}  // namespace testing
