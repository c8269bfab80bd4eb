#include "bnwall/stability.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace bnwall;
using testing::vec;

namespace {

ConeH h(int dim, std::vector<RatVec> eqs, std::vector<RatVec> ineqs) { return ConeH{dim, eqs, ineqs}; }

ConeH cone_of(const ModuleLabel& m, int n) { return stability_cone(module_for(m, n)); }

ModuleLabel cls(int a, int b, int eta) { return ModuleLabel::string(StringClass::interval(a, b, eta)); }

}  // namespace

TEST_SUITE("stability") {
  TEST_CASE("n=1 cones") {
    CHECK(cone_equal(cone_of(ModuleLabel::string(StringClass::trivial(0)), 1), h(2, {vec({1, 0})}, {})));
    CHECK(cone_equal(cone_of(ModuleLabel::string(StringClass::cycle()), 1), h(2, {vec({1, 0}), vec({0, 1})}, {})));
    const ConeV ray = double_description(cone_of(cls(0, 1, -1), 1));
    CHECK(ray.rays == std::vector<RatVec>{vec({-1, 1})});
  }

  TEST_CASE("n=2 cones") {
    CHECK(cone_equal(cone_of(cls(0, 2, -1), 2), h(3, {vec({1, 1, 1})}, {vec({1, 0, 0}), vec({0, 0, 1})})));
    CHECK(cone_equal(cone_of(cls(0, 1, 1), 2), h(3, {vec({1, 1, 0})}, {vec({-1, 0, 0})})));
    CHECK(cone_equal(cone_of(cls(1, 2, -1), 2), h(3, {vec({0, 1, 1})}, {vec({0, 1, 0})})));
    CHECK(cone_equal(cone_of(cls(0, 2, 1), 2), h(3, {vec({1, 1, 1})}, {vec({-1, 0, 0}), vec({0, 0, -1})})));
  }

  TEST_CASE("closed form examples") {
    CHECK(cone_equal(closed_form_cone(StringClass::interval(0, 1, 1), 2), h(3, {vec({1, 1, 0})}, {vec({-1, 0, 0})})));
    CHECK(cone_equal(closed_form_cone(StringClass::trivial(1), 2), h(3, {vec({0, 1, 0})}, {})));
    CHECK_THROWS_AS(closed_form_cone(StringClass::cycle(), 2), std::invalid_argument);
  }

  TEST_CASE("closed form equals the oracle") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& c : star_classes(n)) {
        if (c.kind == StringClass::Kind::Cycle) continue;
        CAPTURE(to_string(c));
        CHECK(cone_equal(closed_form_cone(c, n), cone_of(ModuleLabel::string(c), n)));
      }
  }

  TEST_CASE("indecomposable subobjects suffice") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& e : enumerate_indecomposables(n)) {
        std::set<DimVector> intervals;
        for (const auto& d : subobject_dimvectors(e.rep))
          if (has_interval_support(d)) intervals.insert(d);
        CHECK(cone_equal(stability_cone_from(e.rep.dims, intervals), stability_cone(e.rep)));
      }
  }

  TEST_CASE("non-thin cones") {
    const ConeH cyc2 = nonthin_cone(ModuleLabel::string(StringClass::cycle()), 2);
    CHECK(cone_equal(cyc2, h(3, {vec({0, 0, 1}), vec({0, 1, 0})}, {})));
    CHECK(cone_dim(nonthin_cone(ModuleLabel::biserial(0), 2)) == 0);
    CHECK(cone_dim(nonthin_cone(ModuleLabel::string(StringClass::cycle()), 1)) == 0);
    for (int n = 1; n <= 4; ++n) {
      CHECK(cone_equal(nonthin_cone(ModuleLabel::string(StringClass::cycle()), n),
                       cone_of(ModuleLabel::string(StringClass::cycle()), n)));
      for (int i = 0; i + 2 <= n; ++i)
        CHECK(cone_equal(nonthin_cone(ModuleLabel::biserial(i), n), cone_of(ModuleLabel::biserial(i), n)));
    }
    CHECK_THROWS_AS(nonthin_cone(cls(0, 1, 1), 2), std::invalid_argument);
  }

  TEST_CASE("semistability agrees with cone membership") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const auto& e : enumerate_indecomposables(3)) {
      const ConeH c = stability_cone(e.rep);
      const ConeV v = double_description(c);
      for (int trial = 0; trial < 30; ++trial) {
        StabilityVector s{zeros(4)};
        if (trial % 2 == 0 && !(v.rays.empty() && v.lineality.empty())) {
          s.v = relative_interior_point(v, trial);
        } else {
          for (auto& x : s.v) x = coef(rng);
        }
        CHECK(is_semistable(e.rep, s) == contains_point(c, s.v));
      }
    }
  }

  TEST_CASE("walls") {
    CHECK(walls(1).size() == 4);
    CHECK(walls(2).size() == 9);
    CHECK(walls(3).size() == 16);
    for (const auto& w : walls(3)) {
      CHECK(w.label.is_thin());
      CHECK(cone_dim(w.cone) == 3);
    }
  }

  TEST_CASE("stability spaces") {
    // every thin module at n=2 plus the cycle module; R(0) gives only the origin
    CHECK(stability_spaces(2).size() == 10);
    for (const auto& r : stability_spaces(3)) CHECK(r.dim_of_cone > 0);
  }

  TEST_CASE("thin reduction") {
    for (int n = 1; n <= 4; ++n) {
      const auto recs = stability_sweep(enumerate_indecomposables(n));
      for (const auto& m : recs) {
        bool covered = false;
        for (const auto& l : recs) covered |= l.label.is_thin() && cone_subset(m.cone, l.cone);
        CHECK(covered);
      }
    }
  }

  TEST_CASE("interval sums") {
    CHECK(interval_sum(1, 2, 3) == vec({0, 1, 1, 0}));
    CHECK_THROWS_AS(interval_sum(2, 1, 3), std::invalid_argument);
  }
}
