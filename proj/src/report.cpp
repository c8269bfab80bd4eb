#include "bnwall/report.hpp"

#include "bnwall/linalg.hpp"

#include <algorithm>

namespace bnwall {

std::string coordinate_name(int vertex, int n, Order order) {
  if (order == Order::Descending && n <= 2) {
    static const char* names[] = {"x", "y", "z"};
    return names[n - vertex];
  }
  return "v" + std::to_string(vertex);
}

RatVec in_order(const RatVec& v, Order order) {
  RatVec r = v;
  if (order == Order::Descending) std::reverse(r.begin(), r.end());
  return r;
}

std::vector<int> in_order(const std::vector<int>& v, Order order) {
  std::vector<int> r = v;
  if (order == Order::Descending) std::reverse(r.begin(), r.end());
  return r;
}

std::string format_linear(const RatVec& coeffs, int n, Order order) {
  std::vector<int> vertices(coeffs.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) vertices[i] = static_cast<int>(i);
  if (order == Order::Descending) std::reverse(vertices.begin(), vertices.end());
  std::string out;
  for (int v : vertices) {
    const Rational& c = coeffs[v];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1) out += to_string(mag);
    out += coordinate_name(v, n, order);
  }
  return out.empty() ? "0" : out;
}

std::string format_equality(const RatVec& coeffs, int n, Order order) {
  return format_linear(coeffs, n, order) + "=0";
}

std::string format_inequality(const RatVec& coeffs, int n, Order order) {
  bool all_nonpositive = true;
  for (const auto& c : coeffs) all_nonpositive &= sgn(c) <= 0;
  if (all_nonpositive && !linalg::is_zero(coeffs)) return format_linear(linalg::negate(coeffs), n, order) + "≥" "0";
  return format_linear(coeffs, n, order) + "≤" "0";
}

Json to_json(const RatVec& v, Order order) {
  Json arr = Json::array();
  for (const auto& x : in_order(v, order)) arr.push_back(to_string(x));
  return arr;
}

namespace {

Json class_fields(const StringClass& c) {
  Json j;
  j["class"] = to_string(c);
  switch (c.kind) {
    case StringClass::Kind::Trivial:
      j["kind"] = "trivial";
      j["vertex"] = c.vertex;
      break;
    case StringClass::Kind::Cycle:
      j["kind"] = "cycle";
      break;
    case StringClass::Kind::Interval:
      j["kind"] = "interval";
      j["a"] = c.a;
      j["b"] = c.b;
      j["eta"] = c.eta;
      break;
  }
  return j;
}

Json rows_json(const std::vector<RatVec>& rows, Order order) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r, order));
  return arr;
}

// Display order: by the first coordinate in print order, then by value.
std::vector<RatVec> display_sorted(std::vector<RatVec> rows, Order order) {
  std::sort(rows.begin(), rows.end(), [&](const RatVec& a, const RatVec& b) {
    RatVec pa = in_order(a, order);
    RatVec pb = in_order(b, order);
    auto lead = [](const RatVec& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return i;
      return v.size();
    };
    if (lead(pa) != lead(pb)) return lead(pa) < lead(pb);
    return pa > pb;
  });
  return rows;
}

}  // namespace

Json strings_report(int n) {
  Json arr = Json::array();
  for (const auto& c : star_classes(n)) {
    Json j = class_fields(c);
    const Walk w = psi(c, n);
    j["word"] = to_string(w);
    j["star_word"] = to_string(star(w));
    j["length"] = w.length();
    j["profile"] = profile(w);
    arr.push_back(j);
  }
  return arr;
}

Json indecomposables_report(int n, Order order) {
  Json arr = Json::array();
  for (const auto& e : enumerate_indecomposables(n)) {
    Json j;
    j["id"] = to_string(e.label);
    j["kind"] = e.label.kind == ModuleLabel::Kind::Biserial ? "biserial" : "string";
    if (e.label.kind == ModuleLabel::Kind::String) j["word"] = to_string(psi(e.label.string_class, n));
    j["dim"] = in_order(e.rep.dims.entries, order);
    j["thin"] = is_thin(e.rep);
    arr.push_back(j);
  }
  return arr;
}

Json stability_record_json(const StabilityRecord& r, int n, Order order, bool emit_rays) {
  const ConeH h = minimal_h_representation(r.cone);
  const auto eqs = display_sorted(h.equalities, order);
  const auto ineqs = display_sorted(h.inequalities, order);
  Json j;
  j["id"] = to_string(r.label);
  j["dim"] = in_order(r.dim.entries, order);
  j["cone_dim"] = r.dim_of_cone;
  j["wall"] = r.label.is_thin() && r.dim_of_cone == n;
  Json text_eq = Json::array();
  for (const auto& e : eqs) text_eq.push_back(format_equality(e, n, order));
  Json text_in = Json::array();
  for (const auto& b : ineqs) text_in.push_back(format_inequality(b, n, order));
  j["equalities_text"] = text_eq;
  j["inequalities_text"] = text_in;
  j["equalities"] = rows_json(eqs, order);
  j["inequalities"] = rows_json(ineqs, order);
  if (emit_rays) {
    j["lineality"] = rows_json(r.rays.lineality, order);
    j["rays"] = rows_json(r.rays.rays, order);
  }
  return j;
}

Json stability_report(int n, Order order, bool emit_rays) {
  Json arr = Json::array();
  for (const auto& r : stability_sweep(enumerate_indecomposables(n)))
    arr.push_back(stability_record_json(r, n, order, emit_rays));
  return arr;
}

Json walls_report(int n, Order order, bool emit_rays) {
  Json arr = Json::array();
  for (const auto& r : walls(n)) arr.push_back(stability_record_json(r, n, order, emit_rays));
  return arr;
}

Json chambers_report(const FanResult& f, bool detail) {
  Json j;
  j["n"] = f.n;
  j["walls"] = f.wall_count;
  j["regions"] = static_cast<int>(f.regions.size());
  j["chambers"] = f.chamber_count();
  if (detail) {
    j["merges"] = f.merges();
    Json comp = Json::array();
    for (const auto& c : f.chambers) comp.push_back(c.region_ids);
    j["composition"] = comp;
    Json regions = Json::array();
    for (const auto& r : f.regions) {
      std::string s;
      for (auto x : r.signs) s += x > 0 ? '+' : '-';
      regions.push_back(s);
    }
    j["region_signs"] = regions;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(-1, ' ', false); }

}  // namespace bnwall
