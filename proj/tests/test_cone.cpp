#include "bnwall/cone.hpp"

#include "bnwall/linalg.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace bnwall;
using testing::vec;

namespace {

ConeH cone(int dim, std::vector<RatVec> eqs, std::vector<RatVec> ineqs) { return ConeH{dim, eqs, ineqs}; }

// Brute force over small integer points: every point of the box lying in the
// cone must be a nonnegative combination of the rays plus lineality, checked
// by membership in the round-tripped H-form.
void check_round_trip(const ConeH& c) {
  const ConeV v = double_description(c);
  for (const auto& r : v.rays) CHECK(contains_point(c, r));
  for (const auto& l : v.lineality) {
    CHECK(contains_point(c, l));
    CHECK(contains_point(c, linalg::negate(l)));
  }
  const ConeH back = h_representation(v);
  CHECK(cone_equal(back, c));
  CHECK(cone_equal(minimal_h_representation(c), c));
  CHECK(cone_dim(c) == cone_dim(v));
}

}  // namespace

TEST_SUITE("cone") {
  TEST_CASE("a single ray") {
    const ConeV v = double_description(cone(2, {vec({1, 1})}, {vec({1, 0})}));
    CHECK(v.lineality.empty());
    CHECK(v.rays == std::vector<RatVec>{vec({-1, 1})});
  }

  TEST_CASE("the origin") {
    const ConeV v = double_description(cone(2, {vec({1, 0}), vec({0, 1})}, {}));
    CHECK(v.lineality.empty());
    CHECK(v.rays.empty());
    CHECK(cone_dim(v) == 0);
  }

  TEST_CASE("a two-dimensional slice") {
    const ConeV v = double_description(cone(3, {vec({1, 1, 1})}, {vec({1, 0, 0}), vec({0, 0, 1})}));
    CHECK(v.lineality.empty());
    CHECK(v.rays == std::vector<RatVec>{vec({-1, 1, 0}), vec({0, 1, -1})});
  }

  TEST_CASE("lineality") {
    const ConeV v = double_description(cone(2, {vec({1, 0})}, {}));
    CHECK(v.lineality == std::vector<RatVec>{vec({0, 1})});
    CHECK(cone_dim(v) == 1);
    CHECK(cone_dim(ConeH::full(3)) == 3);
    const ConeV half = double_description(cone(3, {}, {vec({0, 0, 1})}));
    CHECK(half.lineality.size() == 2);
    CHECK(half.rays == std::vector<RatVec>{vec({0, 0, -1})});
  }

  TEST_CASE("membership and inclusion") {
    const ConeH c = cone(3, {vec({1, 1, 1})}, {vec({1, 0, 0}), vec({0, 0, 1})});
    CHECK(contains_point(c, vec({-1, 1, 0})));
    CHECK(contains_point(c, vec({0, 0, 0})));
    CHECK_FALSE(contains_point(c, vec({1, -1, 0})));
    const ConeH line = cone(2, {vec({1, 1})}, {});
    const ConeH ray = cone(2, {vec({1, 1})}, {vec({0, -1})});
    CHECK(cone_subset(ray, line));
    CHECK_FALSE(cone_subset(line, ray));
    CHECK(cone_subset(double_description(ray), line));
    CHECK_FALSE(cone_equal(ray, line));
  }

  TEST_CASE("redundant constraints collapse") {
    const ConeH noisy = cone(3, {vec({1, 1, 1}), vec({2, 2, 2})},
                             {vec({1, 0, 0}), vec({0, 0, 1}), vec({1, 0, 1}), vec({3, 0, 0})});
    const ConeH m = minimal_h_representation(noisy);
    CHECK(m.equalities.size() == 1);
    CHECK(m.inequalities.size() == 2);
    CHECK(cone_equal(m, noisy));
  }

  TEST_CASE("implicit equalities are detected") {
    const ConeH c = cone(2, {}, {vec({1, 0}), vec({-1, 0})});
    CHECK(cone_dim(c) == 1);
    const ConeH m = minimal_h_representation(c);
    CHECK(m.equalities.size() == 1);
    CHECK(m.inequalities.empty());
  }

  TEST_CASE("round trips on random cones") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
      const int dim = 2 + trial % 3;
      ConeH c = ConeH::full(dim);
      const int neq = trial % 4 == 0 ? 1 : 0;
      const int nin = 1 + trial % 5;
      auto random_vec = [&] {
        RatVec v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = coef(rng);
        return v;
      };
      for (int k = 0; k < neq; ++k) c.equalities.push_back(random_vec());
      for (int k = 0; k < nin; ++k) c.inequalities.push_back(random_vec());
      CAPTURE(trial);
      check_round_trip(c);
    }
  }

  TEST_CASE("relative interior points") {
    const ConeH c = cone(3, {vec({1, 1, 1})}, {vec({1, 0, 0}), vec({0, 0, 1})});
    const ConeV v = double_description(c);
    for (int attempt = 0; attempt < 4; ++attempt) {
      const RatVec p = relative_interior_point(v, attempt);
      CHECK(contains_point(c, p));
      for (const auto& b : c.inequalities) CHECK(sgn(linalg::dot(b, p)) < 0);
    }
  }

  TEST_CASE("reversal") {
    const ConeH c = cone(3, {vec({1, 1, 0})}, {vec({1, 0, 0})});
    const ConeH r = reversed(c);
    CHECK(r.equalities.front() == vec({0, 1, 1}));
    CHECK(r.inequalities.front() == vec({0, 0, 1}));
  }
}
