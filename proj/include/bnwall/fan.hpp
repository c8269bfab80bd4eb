#pragma once

// Wall-and-chamber decomposition of R^{n+1}.
//
// Every wall spans an interval-sum hyperplane v_a + ... + v_b = 0, so the
// chambers are unions of regions of that hyperplane arrangement.  Regions are
// built by incremental insertion; two regions separated by a single
// hyperplane share a facet, and they belong to the same chamber iff that
// facet lies in no wall.

#include "bnwall/cone.hpp"

#include <cstdint>
#include <vector>

namespace bnwall {

struct Region {
  /// +1 / -1 per hyperplane, in insertion order.
  std::vector<std::int8_t> signs;
  /// Strictly satisfies every sign.
  RatVec witness;
};

struct Chamber {
  int id = 0;
  std::vector<int> region_ids;
};

/// Normals of v_a + ... + v_b = 0 for 0 <= a <= b <= n, ordered by (a, b).
std::vector<RatVec> interval_hyperplanes(int n);

/// Full-dimensional regions of a central arrangement in R^dim, sorted by sign vector.
std::vector<Region> arrangement_regions(const std::vector<RatVec>& hyperplanes, int dim);

struct FanResult {
  int n = 0;
  int wall_count = 0;
  std::vector<RatVec> hyperplanes;
  std::vector<Region> regions;
  /// Adjacent region pairs (i < j) and whether their shared facet is wall-free.
  std::vector<std::pair<int, int>> facets;
  std::vector<bool> facet_merged;
  std::vector<Chamber> chambers;

  int merges() const;
  int chamber_count() const { return static_cast<int>(chambers.size()); }
  /// Chamber id of each region.
  std::vector<int> chamber_of_region() const;
};

/// Chambers cut out by arbitrary closed cones (walls) refined by `hyperplanes`.
/// Every wall must lie in the union of the hyperplanes.
FanResult chambers_from(const std::vector<RatVec>& hyperplanes, const std::vector<ConeH>& walls, int dim);

struct ChamberOptions {
  /// Also use the stability spaces of non-thin modules (they lie inside walls,
  /// so the answer must not change).
  bool strict = false;
  /// Insertion order of the interval hyperplanes; empty means natural order.
  std::vector<int> permutation;
};

FanResult chambers(int n, const ChamberOptions& opts = {});

namespace serial {

std::vector<Region> arrangement_regions(const std::vector<RatVec>& hyperplanes, int dim);
FanResult chambers_from(const std::vector<RatVec>& hyperplanes, const std::vector<ConeH>& walls, int dim);

}  // namespace serial

}  // namespace bnwall
