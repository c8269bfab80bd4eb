#include "bnwall/fan.hpp"

#include "bnwall/linalg.hpp"
#include "bnwall/stability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bnwall {

std::vector<RatVec> interval_hyperplanes(int n) {
  if (n < 1) throw std::invalid_argument("interval_hyperplanes: n must be at least 1");
  std::vector<RatVec> out;
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) out.push_back(interval_sum(a, b, n));
  return out;
}

namespace {

// Children of `r` after inserting hyperplane h (index k = r.signs.size()).
std::vector<Region> split_region(const Region& r, const std::vector<RatVec>& hyperplanes, const RatVec& h, int dim) {
  ConeH closure{dim, {}, {}};
  for (std::size_t j = 0; j < r.signs.size(); ++j)
    closure.inequalities.push_back(linalg::scale(hyperplanes[j], Rational(-r.signs[j])));

  std::vector<RatVec> gens;
  bool have_gens = false;
  auto generators = [&]() -> const std::vector<RatVec>& {
    if (!have_gens) {
      ConeV v = double_description(closure);
      gens = v.rays;
      for (const auto& l : v.lineality) {
        gens.push_back(l);
        gens.push_back(linalg::negate(l));
      }
      have_gens = true;
    }
    return gens;
  };

  std::vector<Region> out;
  const Rational at_witness = linalg::dot(h, r.witness);
  for (std::int8_t side : {std::int8_t{1}, std::int8_t{-1}}) {
    const Rational s = side;
    RatVec w;
    if (sgn(s * at_witness) > 0) {
      w = r.witness;
    } else {
      for (const auto& g : generators()) {
        const Rational along = s * linalg::dot(h, g);
        if (sgn(along) <= 0) continue;
        const Rational t = -s * at_witness / along + 1;
        w = linalg::add(r.witness, linalg::scale(g, t));
        break;
      }
      if (w.empty()) continue;
    }
    Region child{r.signs, std::move(w)};
    child.signs.push_back(side);
    out.push_back(std::move(child));
  }
  return out;
}

void sort_regions(std::vector<Region>& regions) {
  std::sort(regions.begin(), regions.end(), [](const Region& a, const Region& b) { return a.signs < b.signs; });
}

void check_hyperplanes(const std::vector<RatVec>& hyperplanes, int dim) {
  for (const auto& h : hyperplanes)
    if (static_cast<int>(h.size()) != dim || linalg::is_zero(h))
      throw std::invalid_argument("arrangement: hyperplane normals must be nonzero of length dim");
}

std::vector<Region> initial_regions(int dim) { return {Region{{}, zeros(dim)}}; }

// Regions whose sign vectors differ in exactly one entry, found by flipping
// each sign and looking the result up.
std::vector<std::pair<int, int>> adjacent_pairs(const std::vector<Region>& regions) {
  std::map<std::vector<std::int8_t>, int> index;
  for (int i = 0; i < static_cast<int>(regions.size()); ++i) index.emplace(regions[i].signs, i);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(regions.size()); ++i) {
    auto signs = regions[i].signs;
    for (std::size_t k = 0; k < signs.size(); ++k) {
      signs[k] = static_cast<std::int8_t>(-signs[k]);
      auto it = index.find(signs);
      if (it != index.end() && it->second > i) out.emplace_back(i, it->second);
      signs[k] = static_cast<std::int8_t>(-signs[k]);
    }
  }
  return out;
}

int separating_hyperplane(const Region& a, const Region& b) {
  for (std::size_t k = 0; k < a.signs.size(); ++k)
    if (a.signs[k] != b.signs[k]) return static_cast<int>(k);
  throw std::logic_error("regions are not separated");
}

// The segment between two witnesses meets the separating hyperplane in the
// relative interior of the shared facet: every other hyperplane keeps a
// strict sign along the whole segment.
RatVec facet_witness(const Region& a, const Region& b, const RatVec& h) {
  const Rational ha = linalg::dot(h, a.witness);
  const Rational hb = linalg::dot(h, b.witness);
  const Rational t = ha / (ha - hb);
  return linalg::add(a.witness, linalg::scale(linalg::sub(b.witness, a.witness), t));
}

bool facet_wall_free(const FanResult& f, const std::vector<ConeH>& walls, std::size_t k) {
  const auto [i, j] = f.facets[k];
  const int sep = separating_hyperplane(f.regions[i], f.regions[j]);
  const RatVec p = facet_witness(f.regions[i], f.regions[j], f.hyperplanes[sep]);
  for (const auto& w : walls)
    if (contains_point(w, p)) return false;
  return true;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void assemble_chambers(FanResult& f) {
  std::vector<int> parent(f.regions.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < f.facets.size(); ++k) {
    if (!f.facet_merged[k]) continue;
    int a = find_root(parent, f.facets[k].first);
    int b = find_root(parent, f.facets[k].second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, int> chamber_of_root;
  for (int r = 0; r < static_cast<int>(f.regions.size()); ++r) {
    const int root = find_root(parent, r);
    auto [it, fresh] = chamber_of_root.emplace(root, static_cast<int>(f.chambers.size()));
    if (fresh) f.chambers.push_back(Chamber{it->second, {}});
    f.chambers[it->second].region_ids.push_back(r);
  }
}

FanResult prepare(const std::vector<RatVec>& hyperplanes, const std::vector<ConeH>& walls, int dim,
                  std::vector<Region> regions) {
  for (const auto& w : walls)
    if (w.ambient_dim != dim) throw std::invalid_argument("chambers: wall has wrong ambient dimension");
  FanResult f;
  f.n = dim - 1;
  f.wall_count = static_cast<int>(walls.size());
  f.hyperplanes = hyperplanes;
  f.regions = std::move(regions);
  f.facets = adjacent_pairs(f.regions);
  f.facet_merged.assign(f.facets.size(), false);
  return f;
}

}  // namespace

int FanResult::merges() const {
  return static_cast<int>(std::count(facet_merged.begin(), facet_merged.end(), true));
}

std::vector<int> FanResult::chamber_of_region() const {
  std::vector<int> out(regions.size(), -1);
  for (const auto& c : chambers)
    for (int r : c.region_ids) out[r] = c.id;
  return out;
}

std::vector<Region> arrangement_regions(const std::vector<RatVec>& hyperplanes, int dim) {
  check_hyperplanes(hyperplanes, dim);
  std::vector<Region> regions = initial_regions(dim);
  for (const auto& h : hyperplanes) {
    std::vector<std::vector<Region>> children(regions.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t r = 0; r < regions.size(); ++r) children[r] = split_region(regions[r], hyperplanes, h, dim);
    std::vector<Region> next;
    for (auto& c : children)
      for (auto& reg : c) next.push_back(std::move(reg));
    regions = std::move(next);
  }
  sort_regions(regions);
  return regions;
}

FanResult chambers_from(const std::vector<RatVec>& hyperplanes, const std::vector<ConeH>& walls, int dim) {
  FanResult f = prepare(hyperplanes, walls, dim, arrangement_regions(hyperplanes, dim));
  std::vector<char> merged(f.facets.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < f.facets.size(); ++k) merged[k] = facet_wall_free(f, walls, k);
  for (std::size_t k = 0; k < merged.size(); ++k) f.facet_merged[k] = merged[k] != 0;
  assemble_chambers(f);
  return f;
}

FanResult chambers(int n, const ChamberOptions& opts) {
  std::vector<RatVec> hyperplanes = interval_hyperplanes(n);
  if (!opts.permutation.empty()) {
    std::vector<int> check = opts.permutation;
    std::sort(check.begin(), check.end());
    std::vector<int> identity(hyperplanes.size());
    std::iota(identity.begin(), identity.end(), 0);
    if (check != identity) throw std::invalid_argument("chambers: permutation has wrong size or entries");
    std::vector<RatVec> permuted;
    for (int idx : opts.permutation) permuted.push_back(hyperplanes[idx]);
    hyperplanes = std::move(permuted);
  }
  std::vector<ConeH> wall_cones;
  int codim_one = 0;
  for (const auto& w : opts.strict ? stability_spaces(n) : walls(n)) {
    wall_cones.push_back(w.cone);
    codim_one += w.label.is_thin() && w.dim_of_cone == n;
  }
  FanResult f = chambers_from(hyperplanes, wall_cones, n + 1);
  f.n = n;
  f.wall_count = codim_one;
  return f;
}

namespace serial {

std::vector<Region> arrangement_regions(const std::vector<RatVec>& hyperplanes, int dim) {
  check_hyperplanes(hyperplanes, dim);
  std::vector<Region> regions = initial_regions(dim);
  for (const auto& h : hyperplanes) {
    std::vector<Region> next;
    for (const auto& r : regions)
      for (auto& c : split_region(r, hyperplanes, h, dim)) next.push_back(std::move(c));
    regions = std::move(next);
  }
  sort_regions(regions);
  return regions;
}

FanResult chambers_from(const std::vector<RatVec>& hyperplanes, const std::vector<ConeH>& walls, int dim) {
  FanResult f = prepare(hyperplanes, walls, dim, serial::arrangement_regions(hyperplanes, dim));
  for (std::size_t k = 0; k < f.facets.size(); ++k) f.facet_merged[k] = facet_wall_free(f, walls, k);
  assemble_chambers(f);
  return f;
}

}  // namespace serial

}  // namespace bnwall
