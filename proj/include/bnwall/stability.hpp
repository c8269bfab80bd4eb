#pragma once

// King semistability for B(n)-modules: a module M is v-semistable iff
// <v, dim M> = 0 and <v, dim N> <= 0 for every nonzero proper subobject N.
// D(M), the set of such v, is a rational polyhedral cone.

#include "bnwall/cone.hpp"
#include "bnwall/representation.hpp"
#include "bnwall/subobjects.hpp"

#include <vector>

namespace bnwall {

/// Stability vectors are indexed ascending by vertex, like dimension vectors.
struct StabilityVector {
  RatVec v;
};

/// D(M) from the subobject oracle: one equality, one inequality per subobject
/// dimension vector (sorted).
ConeH stability_cone(const Representation& rep, const OracleOptions& opts = {});

/// D(M) from subobject dimension vectors already computed.
ConeH stability_cone_from(const DimVector& dim, const std::set<DimVector>& subobjects);

bool is_semistable(const Representation& rep, const StabilityVector& v);

/// Interval-sum constraint vector: entry i is 1 for a <= i <= b.
RatVec interval_sum(int a, int b, int n);

/// Closed form of D(M(c)) for Trivial and Interval classes.  The inequalities
/// run over the proper intervals [a', b'] of [a, b] with a' = a mod 2 and
/// (b' = b or b' = a mod 2); they read "<= 0" for eta = -1 and ">= 0" for
/// eta = +1.  Cycle classes throw std::invalid_argument.
ConeH closed_form_cone(const StringClass& c, int n);

/// D of the non-thin modules: the Cycle module gives {v_n = v_{n-1} = 0},
/// R(i) gives {v_i = v_{i+1} = v_{i+2} = 0}.
ConeH nonthin_cone(const ModuleLabel& m, int n);

struct StabilityRecord {
  ModuleLabel label;
  DimVector dim;
  ConeH cone;
  ConeV rays;
  int dim_of_cone = 0;
};

/// D(M) for every catalogue entry, in catalogue order.
std::vector<StabilityRecord> stability_sweep(const std::vector<CatalogueEntry>& catalogue);

/// Stability cones of thin indecomposables of dimension exactly n, i.e. walls.
std::vector<StabilityRecord> walls(int n);

/// All indecomposables whose stability space is nonzero, walls or not.
std::vector<StabilityRecord> stability_spaces(int n);

namespace serial {

std::vector<StabilityRecord> stability_sweep(const std::vector<CatalogueEntry>& catalogue);

}  // namespace serial

}  // namespace bnwall
