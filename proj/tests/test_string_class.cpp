#include "bnwall/string_class.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace bnwall;
using testing::walk;

TEST_SUITE("string_class") {
  TEST_CASE("profile examples") {
    CHECK(profile(walk("a1*b0")) == Profile{0, 1, 2});
    CHECK(profile(walk("e3")) == Profile{3});
    CHECK(profile(walk("b0a0")) == Profile{1, 0, 1});
  }

  TEST_CASE("phi examples") {
    const auto q1 = build_quiver(1);
    const auto q2 = build_quiver(2);
    CHECK(phi(walk("b0"), q1) == StringClass::interval(0, 1, 1));
    CHECK(phi(walk("a0"), q1) == StringClass::interval(0, 1, -1));
    CHECK(phi(walk("a1*b0"), q2) == StringClass::interval(0, 2, 1));
    CHECK(phi(walk("b0a0"), q1) == StringClass::cycle());
    CHECK(phi(walk("e1"), q1) == StringClass::trivial(1));
    CHECK_THROWS_AS(phi(walk("b1b0"), q2), std::invalid_argument);
  }

  TEST_CASE("psi examples") {
    CHECK(psi(StringClass::interval(0, 2, 1), 2) == walk("a1*b0"));
    CHECK(psi(StringClass::interval(0, 2, -1), 2) == walk("b1a0*"));
    CHECK(psi(StringClass::interval(1, 2, -1), 2) == walk("a1*"));
    CHECK(psi(StringClass::cycle(), 3) == walk("b2a2"));
    CHECK(psi(StringClass::trivial(2), 3) == walk("e2"));
  }

  TEST_CASE("class counts") {
    CHECK(star_classes(1).size() == 5);
    CHECK(star_classes(2).size() == 10);
    CHECK(star_classes(3).size() == 17);
    CHECK(star_classes(4).size() == 26);
  }

  TEST_CASE("phi is a bijection from *-classes onto the parameter set") {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      const auto q = build_quiver(n);
      std::map<StringClass, std::set<Walk>> fibres;
      for (const auto& w : enumerate_strings(q)) fibres[phi(w, q)].insert(w);
      CHECK(fibres.size() == star_classes(n).size());
      for (const auto& [c, ws] : fibres) {
        CAPTURE(to_string(c));
        const Walk rep = *ws.begin();
        std::set<Walk> cls = {rep, star(rep)};
        CHECK(ws == cls);
        CHECK(ws.count(psi(c, n)) == 1);
      }
    }
  }

  TEST_CASE("canonical representatives have increasing profile") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& c : star_classes(n)) {
        if (c.kind != StringClass::Kind::Interval) continue;
        const Profile f = profile(psi(c, n));
        CHECK(f.front() == c.a);
        CHECK(f.back() == c.b);
        for (std::size_t j = 1; j < f.size(); ++j) CHECK(f[j] == f[j - 1] + 1);
      }
  }

  TEST_CASE("parse and print") {
    for (const auto& c : star_classes(3)) CHECK(parse_string_class(to_string(c)) == c);
    CHECK(parse_string_class("0,2,-1") == StringClass::interval(0, 2, -1));
    CHECK(parse_string_class("cycle") == StringClass::cycle());
    CHECK_THROWS_AS(parse_string_class("2,0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_string_class("0,2,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_string_class("x"), std::invalid_argument);
  }

  TEST_CASE("psi rejects out-of-range classes") {
    CHECK_THROWS_AS(psi(StringClass::interval(0, 3, 1), 2), std::invalid_argument);
    CHECK_THROWS_AS(psi(StringClass::trivial(5), 2), std::invalid_argument);
  }
}
