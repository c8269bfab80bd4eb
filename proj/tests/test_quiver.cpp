#include "bnwall/quiver.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace bnwall;
using testing::walk;

namespace {

// Strings by brute force: every reduced walk up to a length bound whose
// equally oriented neighbouring letters avoid the (length-2) relation paths.
std::set<Walk> brute_force_strings(const QuiverPresentation& q, int max_len) {
  std::vector<Letter> letters;
  for (const auto& a : q.arrows) {
    letters.push_back(letter(a));
    letters.push_back(letter(a, true));
  }
  auto forbidden2 = [&](const Letter& x, const Letter& y) {
    if (x.inverted != y.inverted) return false;
    Path p = x.inverted ? Path{{y.kind, y.index}, {x.kind, x.index}} : Path{{x.kind, x.index}, {y.kind, y.index}};
    return q.forbidden_paths.count(p) > 0;
  };
  std::set<Walk> out;
  for (int v = 0; v <= q.n; ++v) out.insert(Walk::trivial(v));
  std::vector<std::vector<Letter>> layer;
  for (const auto& l : letters) layer.push_back({l});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& ls : layer) {
      bool ok = true;
      for (std::size_t k = 0; k + 1 < ls.size(); ++k)
        ok &= ls[k + 1] != ls[k].inverse() && !forbidden2(ls[k], ls[k + 1]);
      if (!ok) continue;
      out.insert(Walk(ls));
      for (const auto& l : letters) {
        if (l.target() != ls.back().source()) continue;
        auto ext = ls;
        ext.push_back(l);
        next.push_back(ext);
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("relation paths") {
    const auto q2 = build_quiver(2);
    for (Path p : {Path{alpha(0), alpha(1)}, Path{beta(1), beta(0)}, Path{alpha(0), beta(0)}, Path{beta(0), alpha(0)},
                   Path{alpha(1), beta(1)}})
      CHECK(q2.forbidden_paths.count(p) == 1);
    CHECK(q2.forbidden_paths.count(Path{beta(1), alpha(1)}) == 0);
    CHECK(q2.relations.size() == 4);

    const auto q1 = build_quiver(1);
    CHECK(q1.forbidden_paths == std::set<Path>{Path{alpha(0), beta(0)}});

    const auto q3 = build_quiver(3);
    CHECK(q3.forbidden_paths.count(Path{beta(2), alpha(2)}) == 0);
    CHECK(q3.forbidden_paths.count(Path{beta(1), alpha(1)}) == 1);
    CHECK(q3.arrows.size() == 6);
  }

  TEST_CASE("n must be positive") {
    CHECK_THROWS_AS(build_quiver(0), std::invalid_argument);
    CHECK_THROWS_AS(build_quiver(-3), std::invalid_argument);
  }

  TEST_CASE("arrow endpoints") {
    CHECK(alpha(2).source() == 3);
    CHECK(alpha(2).target() == 2);
    CHECK(beta(2).source() == 2);
    CHECK(beta(2).target() == 3);
    CHECK(letter(beta(0), true).source() == 1);
  }

  TEST_CASE("walk composition and endpoints") {
    const Walk w = walk("a1*b0");
    CHECK(w.length() == 2);
    CHECK(w.source() == 0);
    CHECK(w.target() == 2);
    CHECK_THROWS_AS(walk("a1b0"), std::invalid_argument);
    CHECK_THROWS_AS(walk("c0"), std::invalid_argument);
    CHECK_THROWS_AS(walk(""), std::invalid_argument);
    CHECK(walk("e4").is_trivial());
    CHECK(walk("e4").source() == 4);
    CHECK(to_string(walk("b2a2")) == "b2a2");
  }

  TEST_CASE("star") {
    CHECK(star(walk("a1*b0")) == walk("b0*a1"));
    CHECK(star(walk("e2")) == walk("e2"));
    CHECK(star(star(walk("b2a1*b0"))) == walk("b2a1*b0"));
  }

  TEST_CASE("validate_walk rejects walks outside Q(n)") {
    CHECK_THROWS_AS(validate_walk(walk("a2"), build_quiver(2)), std::invalid_argument);
    CHECK_THROWS_AS(validate_walk(walk("e3"), build_quiver(2)), std::invalid_argument);
    CHECK_NOTHROW(validate_walk(walk("a1"), build_quiver(2)));
  }

  TEST_CASE("is_string examples") {
    const auto q = build_quiver(2);
    CHECK(is_string(walk("a1*b0"), q));
    CHECK_FALSE(is_string(walk("b0*a1b1"), q));
    CHECK_FALSE(is_string(walk("b1b0"), q));
    CHECK_FALSE(is_string(walk("a0a0*"), q));
    CHECK(is_string(walk("b1a1"), q));
    CHECK_FALSE(is_string(walk("b0a0"), q));
  }

  TEST_CASE("string enumeration n=1") {
    const auto q = build_quiver(1);
    const auto got = enumerate_strings(q);
    const std::set<Walk> expected = {walk("e0"), walk("e1"), walk("a0"), walk("a0*"),
                                     walk("b0"), walk("b0*"), walk("b0a0"), walk("a0*b0*")};
    CHECK(std::set<Walk>(got.begin(), got.end()) == expected);
    CHECK(got.size() == 8);
  }

  TEST_CASE("string enumeration agrees with brute force") {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      const auto q = build_quiver(n);
      const auto got = enumerate_strings(q);
      const auto oracle = brute_force_strings(q, 2 * n + 3);
      CHECK(std::set<Walk>(got.begin(), got.end()) == oracle);
      // trivial walks, the cycle and its star, two directions per alternating string
      CHECK(static_cast<int>(got.size()) == (n + 1) + 2 + 2 * n * (n + 1));
      for (const auto& w : got) CHECK(is_string(star(w), q));
    }
  }

  TEST_CASE("bands") {
    const auto q1 = build_quiver(1);
    CHECK_FALSE(is_band(walk("b0a0"), q1));
    CHECK_FALSE(is_band(walk("e0"), q1));
    CHECK_FALSE(is_band(walk("a0a0*"), q1));
    for (int n = 1; n <= 6; ++n) CHECK(find_bands(build_quiver(n)).empty());
  }

  TEST_CASE("walk power") {
    CHECK(walk("b0a0").power(2) == walk("b0a0b0a0"));
    CHECK_THROWS_AS(walk("b0").power(2), std::invalid_argument);
    CHECK_THROWS_AS(walk("b0a0").power(0), std::invalid_argument);
  }
}
