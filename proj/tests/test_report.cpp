#include "bnwall/report.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <map>

using namespace bnwall;
using testing::vec;

namespace {

Json record(const std::string& module, int n, Order order, bool rays = false) {
  const ModuleLabel label = parse_module_label(module);
  for (const auto& r : stability_sweep(enumerate_indecomposables(n)))
    if (r.label == label) return stability_record_json(r, n, order, rays);
  FAIL("module not found");
  return {};
}

std::vector<std::string> strings(const Json& arr) {
  std::vector<std::string> out;
  for (const auto& x : arr) out.push_back(x.get<std::string>());
  return out;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("coordinate names") {
    CHECK(coordinate_name(2, 2, Order::Descending) == "x");
    CHECK(coordinate_name(0, 2, Order::Descending) == "z");
    CHECK(coordinate_name(1, 1, Order::Descending) == "x");
    CHECK(coordinate_name(3, 3, Order::Descending) == "v3");
    CHECK(coordinate_name(0, 2, Order::Ascending) == "v0");
  }

  TEST_CASE("linear forms") {
    CHECK(format_linear(vec({1, 1, 1}), 2, Order::Descending) == "x+y+z");
    CHECK(format_linear(vec({0, 0, 0}), 2, Order::Ascending) == "0");
    CHECK(format_equality(vec({1, 1, 0}), 2, Order::Descending) == "y+z=0");
    CHECK(format_inequality(vec({-1, 0, 0}), 2, Order::Descending) == "z≥0");
    CHECK(format_inequality(vec({0, 0, 1}), 2, Order::Descending) == "x≤0");
    CHECK(in_order(vec({1, 2, 3}), Order::Descending) == vec({3, 2, 1}));
  }

  TEST_CASE("n=2 cones print as in the worked example") {
    const std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> expected = {
        {"S0", {{"z=0"}, {}}},
        {"S1", {{"y=0"}, {}}},
        {"S2", {{"x=0"}, {}}},
        {"M(0,1,-1)", {{"y+z=0"}, {"z≤0"}}},
        {"M(0,1,1)", {{"y+z=0"}, {"z≥0"}}},
        {"M(1,2,-1)", {{"x+y=0"}, {"y≤0"}}},
        {"M(1,2,1)", {{"x+y=0"}, {"y≥0"}}},
        {"M(0,2,-1)", {{"x+y+z=0"}, {"x≤0", "z≤0"}}},
        {"M(0,2,1)", {{"x+y+z=0"}, {"x≥0", "z≥0"}}},
    };
    for (const auto& [module, forms] : expected) {
      CAPTURE(module);
      const Json j = record(module, 2, Order::Descending);
      CHECK(strings(j["equalities_text"]) == forms.first);
      CHECK(strings(j["inequalities_text"]) == forms.second);
      CHECK(j["wall"].get<bool>());
    }
    const Json cyc = record("M(cycle)", 2, Order::Descending);
    CHECK_FALSE(cyc["wall"].get<bool>());
    CHECK(cyc["cone_dim"].get<int>() == 1);
  }

  TEST_CASE("rays in JSON") {
    const Json j = record("M(0,1,-1)", 1, Order::Ascending, true);
    CHECK(j["rays"] == Json::parse(R"([["-1","1"]])"));
    CHECK(j["lineality"].empty());
    const Json d = record("M(0,1,-1)", 1, Order::Descending, true);
    CHECK(d["rays"] == Json::parse(R"([["1","-1"]])"));
    CHECK_FALSE(record("S0", 1, Order::Ascending).contains("rays"));
  }

  TEST_CASE("JSON round trip") {
    for (const Json& j : {strings_report(2), indecomposables_report(3, Order::Ascending),
                          stability_report(2, Order::Descending, true), walls_report(3, Order::Ascending, true)}) {
      const Json back = Json::parse(dump(j));
      CHECK(back == j);
      CHECK(dump(back) == dump(j));
    }
    const Json s = stability_report(3, Order::Ascending, true);
    for (const auto& rec : s)
      for (const auto& ray : rec["rays"])
        for (const auto& x : ray) CHECK(to_string(parse_rational(x.get<std::string>())) == x.get<std::string>());
  }

  TEST_CASE("strings report") {
    const Json j = strings_report(2);
    CHECK(j.size() == 10);
    CHECK(j[0]["class"] == "e0");
    CHECK(j[3]["word"] == "b1a1");
  }

  TEST_CASE("chambers report") {
    const FanResult f = chambers(1);
    CHECK(dump(chambers_report(f, false)) == R"({"n":1,"walls":4,"regions":6,"chambers":6})");
    const Json d = chambers_report(f, true);
    CHECK(d["merges"] == 0);
    CHECK(d["composition"].size() == 6);
    CHECK(d["region_signs"].size() == 6);
  }

  TEST_CASE("rational text") {
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS(parse_rational("x"));
  }
}
