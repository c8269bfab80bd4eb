#include "bnwall/stability.hpp"

#include "bnwall/linalg.hpp"

#include <stdexcept>

namespace bnwall {

ConeH stability_cone_from(const DimVector& dim, const std::set<DimVector>& subobjects) {
  ConeH c;
  c.ambient_dim = dim.size();
  c.equalities.push_back(dim.as_rational());
  for (const auto& d : subobjects) c.inequalities.push_back(d.as_rational());
  return c;
}

ConeH stability_cone(const Representation& rep, const OracleOptions& opts) {
  return stability_cone_from(rep.dims, subobject_dimvectors(rep, opts));
}

bool is_semistable(const Representation& rep, const StabilityVector& v) {
  if (static_cast<int>(v.v.size()) != rep.dims.size()) throw std::invalid_argument("is_semistable: length mismatch");
  if (sgn(linalg::dot(v.v, rep.dims.as_rational())) != 0) return false;
  for (const auto& d : subobject_dimvectors(rep))
    if (sgn(linalg::dot(v.v, d.as_rational())) > 0) return false;
  return true;
}

RatVec interval_sum(int a, int b, int n) {
  if (a < 0 || a > b || b > n) throw std::invalid_argument("interval_sum: need 0 <= a <= b <= n");
  RatVec v = zeros(n + 1);
  for (int i = a; i <= b; ++i) v[i] = 1;
  return v;
}

ConeH closed_form_cone(const StringClass& c, int n) {
  ConeH h;
  h.ambient_dim = n + 1;
  switch (c.kind) {
    case StringClass::Kind::Trivial:
      if (c.vertex < 0 || c.vertex > n) throw std::invalid_argument("closed_form_cone: vertex out of range");
      h.equalities.push_back(unit_vector(n + 1, c.vertex));
      return h;
    case StringClass::Kind::Cycle:
      throw std::invalid_argument("closed_form_cone: the cycle class is not thin; use nonthin_cone");
    case StringClass::Kind::Interval:
      break;
  }
  if (!(0 <= c.a && c.a < c.b && c.b <= n) || (c.eta != 1 && c.eta != -1))
    throw std::invalid_argument("closed_form_cone: bad class " + to_string(c));
  auto same_parity = [](int x, int y) { return (x - y) % 2 == 0; };
  h.equalities.push_back(interval_sum(c.a, c.b, n));
  for (int lo = c.a; lo <= c.b; ++lo) {
    if (!same_parity(lo, c.a)) continue;
    for (int hi = lo; hi <= c.b; ++hi) {
      if (lo == c.a && hi == c.b) continue;
      if (hi != c.b && !same_parity(hi, c.a)) continue;
      RatVec row = interval_sum(lo, hi, n);
      h.inequalities.push_back(c.eta == -1 ? row : linalg::negate(row));
    }
  }
  return h;
}

ConeH nonthin_cone(const ModuleLabel& m, int n) {
  ConeH h;
  h.ambient_dim = n + 1;
  if (m.kind == ModuleLabel::Kind::Biserial) {
    if (n < 2 || m.r_index < 0 || m.r_index > n - 2) throw std::invalid_argument("nonthin_cone: R(i) needs 0 <= i <= n-2");
    for (int k = 0; k < 3; ++k) h.equalities.push_back(unit_vector(n + 1, m.r_index + k));
    return h;
  }
  if (m.string_class.kind != StringClass::Kind::Cycle)
    throw std::invalid_argument("nonthin_cone: " + to_string(m) + " is thin");
  if (n < 1) throw std::invalid_argument("nonthin_cone: n must be at least 1");
  h.equalities.push_back(unit_vector(n + 1, n));
  h.equalities.push_back(unit_vector(n + 1, n - 1));
  return h;
}

namespace {

StabilityRecord make_record(const CatalogueEntry& e) {
  StabilityRecord r;
  r.label = e.label;
  r.dim = e.rep.dims;
  r.cone = stability_cone_from(e.rep.dims, serial::subobject_dimvectors(e.rep));
  r.rays = double_description(r.cone);
  r.dim_of_cone = cone_dim(r.rays);
  return r;
}

}  // namespace

std::vector<StabilityRecord> stability_sweep(const std::vector<CatalogueEntry>& catalogue) {
  std::vector<StabilityRecord> out(catalogue.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < catalogue.size(); ++k) out[k] = make_record(catalogue[k]);
  return out;
}

namespace serial {

std::vector<StabilityRecord> stability_sweep(const std::vector<CatalogueEntry>& catalogue) {
  std::vector<StabilityRecord> out;
  out.reserve(catalogue.size());
  for (const auto& e : catalogue) out.push_back(make_record(e));
  return out;
}

}  // namespace serial

std::vector<StabilityRecord> walls(int n) {
  std::vector<StabilityRecord> out;
  for (auto& r : stability_sweep(enumerate_indecomposables(n)))
    if (r.label.is_thin() && r.dim_of_cone == n) out.push_back(std::move(r));
  return out;
}

std::vector<StabilityRecord> stability_spaces(int n) {
  std::vector<StabilityRecord> out;
  for (auto& r : stability_sweep(enumerate_indecomposables(n)))
    if (r.dim_of_cone > 0) out.push_back(std::move(r));
  return out;
}

}  // namespace bnwall
