#pragma once

// *-classes of strings on (Q(n), I(n)): the trivial walks, the single cycle
// class {b_{n-1} a_{n-1}, its star}, and the alternating strings, which are
// parameterised by triples (a, b, eta) with 0 <= a < b <= n.

#include "bnwall/quiver.hpp"

#include <compare>
#include <string>
#include <vector>

namespace bnwall {

struct StringClass {
  enum class Kind : std::uint8_t { Trivial, Cycle, Interval };

  Kind kind = Kind::Trivial;
  int vertex = 0;  // Trivial
  int a = 0;       // Interval
  int b = 0;
  int eta = 0;     // +1 or -1

  static StringClass trivial(int i) { return {Kind::Trivial, i, 0, 0, 0}; }
  static StringClass cycle() { return {Kind::Cycle, 0, 0, 0, 0}; }
  static StringClass interval(int a, int b, int eta) { return {Kind::Interval, 0, a, b, eta}; }

  auto operator<=>(const StringClass&) const = default;
};

/// f_w as a list: entry j is f_w(j); length m+1.
using Profile = std::vector<int>;

Profile profile(const Walk& w);

/// The class of a string.  Throws std::invalid_argument on non-strings.
StringClass phi(const Walk& w, const QuiverPresentation& q);

/// Canonical representative: increasing profile for Interval classes,
/// b_{n-1} a_{n-1} for the Cycle class.
Walk psi(const StringClass& c, int n);

/// Trivial classes 0..n, the Cycle class, then intervals ordered by (a, b, eta).
std::vector<StringClass> star_classes(int n);

std::string to_string(const StringClass& c);
/// Accepts "e<i>", "cycle", or "a,b,eta".
StringClass parse_string_class(const std::string& text);

}  // namespace bnwall
