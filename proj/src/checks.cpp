#include "bnwall/checks.hpp"

#include "bnwall/cone.hpp"
#include "bnwall/fan.hpp"
#include "bnwall/linalg.hpp"
#include "bnwall/quiver.hpp"
#include "bnwall/representation.hpp"
#include "bnwall/stability.hpp"
#include "bnwall/string_class.hpp"
#include "bnwall/subobjects.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace bnwall::checks {

namespace {

CheckResult make(int id, std::string name) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.passed = true;
  return r;
}

void fail(CheckResult& r, const std::string& why) {
  if (r.passed) r.detail = why;
  r.passed = false;
}

std::string nstr(int n) { return " (n=" + std::to_string(n) + ")"; }

// Cone given in descending coordinates (v_n, ..., v_0).
ConeH descending(int n, std::vector<std::vector<int>> eqs, std::vector<std::vector<int>> ineqs) {
  ConeH c;
  c.ambient_dim = n + 1;
  auto conv = [](const std::vector<int>& v) {
    RatVec r;
    for (auto it = v.rbegin(); it != v.rend(); ++it) r.emplace_back(*it);
    return r;
  };
  for (const auto& e : eqs) c.equalities.push_back(conv(e));
  for (const auto& b : ineqs) c.inequalities.push_back(conv(b));
  return c;
}

bool same_rows(std::vector<RatVec> a, std::vector<RatVec> b) {
  for (auto& r : a) r = linalg::primitive(r);
  for (auto& r : b) r = linalg::primitive(r);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

const StabilityRecord* find_record(const std::vector<StabilityRecord>& recs, const ModuleLabel& m) {
  for (const auto& r : recs)
    if (r.label == m) return &r;
  return nullptr;
}

}  // namespace

CheckResult string_class_count(int n) {
  CheckResult r = make(1, "string *-class count" + nstr(n));
  const int expected = (n + 1) * (n + 1) + 1;
  const int classes = static_cast<int>(star_classes(n).size());
  std::set<StringClass> grouped;
  const auto q = build_quiver(n);
  for (const auto& w : enumerate_strings(q)) grouped.insert(phi(w, q));
  std::ostringstream os;
  os << "classes=" << classes << " grouped=" << grouped.size() << " expected=" << expected;
  r.detail = os.str();
  if (classes != expected || static_cast<int>(grouped.size()) != expected) fail(r, os.str());
  return r;
}

CheckResult indecomposable_count(int n) {
  CheckResult r = make(2, "indecomposable count" + nstr(n));
  const int expected = n + (n + 1) * (n + 1);
  const int got = static_cast<int>(enumerate_indecomposables(n).size());
  r.detail = "modules=" + std::to_string(got) + " expected=" + std::to_string(expected);
  if (got != expected) fail(r, r.detail);
  return r;
}

CheckResult no_bands(int n) {
  CheckResult r = make(3, "no bands" + nstr(n));
  const auto bands = find_bands(build_quiver(n));
  r.detail = "bands=" + std::to_string(bands.size());
  if (!bands.empty()) fail(r, "found band " + to_string(bands.front()));
  return r;
}

CheckResult golden_cones_n1() {
  CheckResult r = make(4, "golden stability cones n=1");
  const int n = 1;
  const auto recs = stability_sweep(enumerate_indecomposables(n));
  struct Golden {
    ModuleLabel label;
    ConeH cone;
    std::vector<RatVec> rays;
    int lineality;
  };
  // Rays in ascending order: (v_1, v_0) = (1, -1) is (v_0, v_1) = (-1, 1).
  const std::vector<Golden> golden = {
      {ModuleLabel::string(StringClass::trivial(0)), descending(n, {{0, 1}}, {}), {}, 1},
      {ModuleLabel::string(StringClass::trivial(1)), descending(n, {{1, 0}}, {}), {}, 1},
      {ModuleLabel::string(StringClass::interval(0, 1, -1)), descending(n, {{1, 1}}, {{0, 1}}), {{-1, 1}}, 0},
      {ModuleLabel::string(StringClass::interval(0, 1, 1)), descending(n, {{1, 1}}, {{0, -1}}), {{1, -1}}, 0},
      {ModuleLabel::string(StringClass::cycle()), descending(n, {{1, 0}, {0, 1}}, {}), {}, 0},
  };
  for (const auto& g : golden) {
    const StabilityRecord* rec = find_record(recs, g.label);
    if (!rec) {
      fail(r, "missing " + to_string(g.label));
      continue;
    }
    if (!cone_equal(rec->cone, g.cone)) fail(r, to_string(g.label) + ": cone differs");
    if (rec->rays.rays != g.rays) fail(r, to_string(g.label) + ": rays differ");
    if (static_cast<int>(rec->rays.lineality.size()) != g.lineality) fail(r, to_string(g.label) + ": lineality differs");
  }
  if (r.passed) r.detail = "5 cones match";
  return r;
}

CheckResult golden_cones_n2() {
  CheckResult r = make(5, "golden stability cones n=2");
  const int n = 2;
  const auto recs = stability_sweep(enumerate_indecomposables(n));
  // (x, y, z) = (v_2, v_1, v_0).
  const std::vector<std::pair<ModuleLabel, ConeH>> golden = {
      {ModuleLabel::string(StringClass::trivial(0)), descending(n, {{0, 0, 1}}, {})},
      {ModuleLabel::string(StringClass::trivial(1)), descending(n, {{0, 1, 0}}, {})},
      {ModuleLabel::string(StringClass::trivial(2)), descending(n, {{1, 0, 0}}, {})},
      {ModuleLabel::string(StringClass::interval(0, 1, -1)), descending(n, {{0, 1, 1}}, {{0, 0, 1}})},
      {ModuleLabel::string(StringClass::interval(0, 1, 1)), descending(n, {{0, 1, 1}}, {{0, 0, -1}})},
      {ModuleLabel::string(StringClass::interval(1, 2, -1)), descending(n, {{1, 1, 0}}, {{0, 1, 0}})},
      {ModuleLabel::string(StringClass::interval(1, 2, 1)), descending(n, {{1, 1, 0}}, {{0, -1, 0}})},
      {ModuleLabel::string(StringClass::interval(0, 2, -1)), descending(n, {{1, 1, 1}}, {{1, 0, 0}, {0, 0, 1}})},
      {ModuleLabel::string(StringClass::interval(0, 2, 1)), descending(n, {{1, 1, 1}}, {{-1, 0, 0}, {0, 0, -1}})},
  };
  for (const auto& [label, cone] : golden) {
    const StabilityRecord* rec = find_record(recs, label);
    if (!rec) {
      fail(r, "missing " + to_string(label));
      continue;
    }
    if (!cone_equal(rec->cone, cone)) fail(r, to_string(label) + ": cone differs");
    const ConeH minimal = minimal_h_representation(rec->cone);
    if (!same_rows(minimal.equalities, cone.equalities) || !same_rows(minimal.inequalities, cone.inequalities))
      fail(r, to_string(label) + ": constraint sets differ from the printed ones");
    if (rec->dim_of_cone != n) fail(r, to_string(label) + ": not a wall");
  }
  if (r.passed) r.detail = "9 cones match constraint-for-constraint";
  return r;
}

CheckResult oracle_matches_closed_form(int n) {
  CheckResult r = make(6, "oracle cone = closed form" + nstr(n));
  const auto q = build_quiver(n);
  int strings = 0;
  for (const auto& w : enumerate_strings(q)) {
    const StringClass c = phi(w, q);
    if (c.kind == StringClass::Kind::Cycle) continue;
    const ConeH oracle = stability_cone(string_module(w, q));
    if (!cone_equal(oracle, closed_form_cone(c, n))) fail(r, to_string(w) + " in class " + to_string(c) + " differs");
    strings += c.kind == StringClass::Kind::Interval;
  }
  if (r.passed) r.detail = std::to_string(strings) + " alternating strings (plus simples) agree";
  return r;
}

CheckResult nonthin_spaces(int n) {
  CheckResult r = make(7, "non-thin stability spaces" + nstr(n));
  std::vector<ModuleLabel> labels = {ModuleLabel::string(StringClass::cycle())};
  for (int i = 0; i + 2 <= n; ++i) labels.push_back(ModuleLabel::biserial(i));
  for (const auto& m : labels) {
    const ConeH closed = nonthin_cone(m, n);
    const ConeH oracle = stability_cone(module_for(m, n));
    if (!cone_equal(closed, oracle)) fail(r, to_string(m) + ": oracle cone differs from the subspace form");
    const int expected = m.kind == ModuleLabel::Kind::Biserial ? n - 2 : n - 1;
    const int d = cone_dim(closed);
    if (d != expected) fail(r, to_string(m) + ": dimension " + std::to_string(d));
    if (n + 1 - d < 2) fail(r, to_string(m) + ": codimension below 2");
  }
  if (r.passed) r.detail = std::to_string(labels.size()) + " non-thin modules, none a wall";
  return r;
}

CheckResult thin_reduction(int n) {
  CheckResult r = make(8, "thin reduction" + nstr(n));
  const auto recs = stability_sweep(enumerate_indecomposables(n));
  for (const auto& m : recs) {
    bool found = false;
    for (const auto& l : recs) {
      if (!l.label.is_thin()) continue;
      if (cone_subset(m.rays, l.cone)) {
        found = true;
        break;
      }
    }
    if (!found) fail(r, to_string(m.label) + " lies in no thin stability space");
  }
  if (r.passed) r.detail = std::to_string(recs.size()) + " modules covered";
  return r;
}

CheckResult sub_quot_symmetry(int n) {
  CheckResult r = make(9, "sub/quotient symmetry of non-thin modules" + nstr(n));
  std::vector<ModuleLabel> labels = {ModuleLabel::string(StringClass::cycle())};
  for (int i = 0; i + 2 <= n; ++i) labels.push_back(ModuleLabel::biserial(i));
  for (const auto& m : labels) {
    const Representation rep = module_for(m, n);
    if (subobject_dimvectors(rep) != quotient_dimvectors(rep)) fail(r, to_string(m) + ": sets differ");
  }
  if (r.passed) r.detail = std::to_string(labels.size()) + " modules";
  return r;
}

CheckResult chambers_n1() {
  CheckResult r = make(10, "chambers n=1");
  const FanResult f = chambers(1);
  std::ostringstream os;
  os << "walls=" << f.wall_count << " regions=" << f.regions.size() << " merges=" << f.merges()
     << " chambers=" << f.chamber_count();
  r.detail = os.str();
  if (f.wall_count != 4 || f.regions.size() != 6 || f.merges() != 0 || f.chamber_count() != 6) fail(r, os.str());
  return r;
}

CheckResult property_suite(int n) {
  CheckResult r = make(11, "property suite" + nstr(n));
  const auto q = build_quiver(n);
  for (const auto& w : enumerate_strings(q)) {
    if (!w.is_trivial() && !w.is_cycle()) {
      const Profile f = profile(w);
      bool inc = true;
      bool dec = true;
      for (std::size_t j = 1; j < f.size(); ++j) {
        inc &= f[j] > f[j - 1];
        dec &= f[j] < f[j - 1];
      }
      if (!(inc || dec)) fail(r, "profile of " + to_string(w) + " not strictly monotone");
      if (static_cast<int>(f.size()) - 1 > n) fail(r, to_string(w) + " longer than n");
    }
    if (phi(w, q) != phi(star(w), q)) fail(r, "phi differs on " + to_string(w) + " and its star");
  }
  for (const auto& c : star_classes(n))
    if (phi(psi(c, n), q) != c) fail(r, "phi(psi(" + to_string(c) + ")) differs");
  for (const auto& e : enumerate_indecomposables(n))
    if (!check_relations(e.rep, q)) fail(r, to_string(e.label) + " violates I(n)");

  const int base = chambers(n).chamber_count();
  std::mt19937 rng(7919u + static_cast<unsigned>(n));
  const int hyperplanes = (n + 1) * (n + 2) / 2;
  for (int trial = 0; trial < 2; ++trial) {
    ChamberOptions opts;
    opts.permutation.resize(static_cast<std::size_t>(hyperplanes));
    std::iota(opts.permutation.begin(), opts.permutation.end(), 0);
    std::shuffle(opts.permutation.begin(), opts.permutation.end(), rng);
    const int permuted = chambers(n, opts).chamber_count();
    if (permuted != base) fail(r, "chamber count changes under hyperplane permutation");
  }
  if (r.passed) r.detail = "chambers=" + std::to_string(base);
  return r;
}

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> over(int lo, int hi, CheckResult (*fn)(int)) {
  std::vector<CheckResult> out;
  for (int n = lo; n <= hi; ++n) out.push_back(fn(n));
  return out;
}

Criterion criterion_plan(int id) {
  switch (id) {
    case 1: return {"string *-class counts, n=1..6", 1.0, [] { return over(1, 6, string_class_count); }};
    case 2: return {"indecomposable counts, n=1..6", 1.0, [] { return over(1, 6, indecomposable_count); }};
    case 3: return {"no bands, n=1..6", 5.0, [] { return over(1, 6, no_bands); }};
    case 4: return {"golden cones n=1", 1.0, [] { return std::vector{golden_cones_n1()}; }};
    case 5: return {"golden cones n=2", 1.0, [] { return std::vector{golden_cones_n2()}; }};
    case 6: return {"oracle vs closed form, n<=3", 30.0, [] { return over(1, 3, oracle_matches_closed_form); }};
    case 7: return {"non-thin stability spaces, n<=4", 10.0, [] { return over(1, 4, nonthin_spaces); }};
    case 8: return {"thin reduction, n<=4", 30.0, [] { return over(1, 4, thin_reduction); }};
    case 9: return {"sub/quotient symmetry, n<=5", 10.0, [] { return over(1, 5, sub_quot_symmetry); }};
    case 10: return {"chambers at n=1", 1.0, [] { return std::vector{chambers_n1()}; }};
    case 11: return {"property suites, n<=4", 60.0, [] { return over(1, 4, property_suite); }};
    default: throw std::invalid_argument("criterion id must be in 1..11");
  }
}

}  // namespace

CheckResult criterion(int id) {
  const Criterion s = criterion_plan(id);
  const auto t0 = std::chrono::steady_clock::now();
  const auto parts = s.run();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CheckResult r = make(id, s.name);
  r.seconds = secs;
  for (const auto& p : parts)
    if (!p.passed) fail(r, p.name + ": " + p.detail);
  if (r.passed) r.detail = std::to_string(parts.size()) + " sub-checks passed";
  if (secs > s.budget_seconds) {
    std::ostringstream os;
    os << "took " << secs << " s, budget " << s.budget_seconds << " s";
    fail(r, os.str());
  }
  return r;
}

std::vector<CheckResult> verify_for(int n, bool fail_fast) {
  std::vector<std::function<CheckResult()>> plan = {
      [n] { return string_class_count(n); },
      [n] { return indecomposable_count(n); },
      [n] { return no_bands(n); },
  };
  if (n == 1) plan.emplace_back(golden_cones_n1);
  if (n == 2) plan.emplace_back(golden_cones_n2);
  if (n <= 3) plan.emplace_back([n] { return oracle_matches_closed_form(n); });
  if (n <= 4) plan.emplace_back([n] { return nonthin_spaces(n); });
  if (n <= 4) plan.emplace_back([n] { return thin_reduction(n); });
  if (n <= 5) plan.emplace_back([n] { return sub_quot_symmetry(n); });
  if (n == 1) plan.emplace_back(chambers_n1);
  if (n <= 4) plan.emplace_back([n] { return property_suite(n); });

  std::vector<CheckResult> out;
  for (const auto& step : plan) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r = step();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
    if (!r.passed && fail_fast) break;
  }
  return out;
}

}  // namespace bnwall::checks
