#pragma once

// Exact rational polyhedral cones.
//
// H-form: { v : <e, v> = 0 for each equality e, <b, v> <= 0 for each b }.
// V-form: lineality basis plus extreme rays taken modulo the lineality.

#include "bnwall/rational.hpp"

#include <vector>

namespace bnwall {

struct ConeH {
  int ambient_dim = 0;
  std::vector<RatVec> equalities;
  std::vector<RatVec> inequalities;

  /// The whole space.
  static ConeH full(int dim) { return {dim, {}, {}}; }
};

struct ConeV {
  int ambient_dim = 0;
  /// Reduced row echelon basis, primitive integer rows with positive leading entry.
  std::vector<RatVec> lineality;
  /// Primitive integer vectors orthogonal to the lineality, sorted.
  std::vector<RatVec> rays;
};

/// Double description: exact V-form of an H-form cone.
ConeV double_description(const ConeH& c);

/// The H-form of a V-form cone, computed through its polar.
ConeH h_representation(const ConeV& v);

/// Equalities as a row echelon basis of the orthogonal complement of the
/// span, inequalities irredundant, each reduced to the sparsest equivalent
/// modulo the equalities (ties: lowest leading coordinate).  The result is a
/// function of the cone's input constraints only, not of their order.
ConeH minimal_h_representation(const ConeH& c);

int cone_dim(const ConeH& c);
int cone_dim(const ConeV& v);

bool contains_point(const ConeH& c, const RatVec& p);
bool cone_subset(const ConeH& a, const ConeH& b);
bool cone_subset(const ConeV& a, const ConeH& b);
bool cone_equal(const ConeH& a, const ConeH& b);

/// A point in the relative interior: a positive combination of the rays plus
/// a combination of the lineality, with weights chosen by `attempt`.
RatVec relative_interior_point(const ConeV& v, int attempt = 0);

/// Swap coordinates i and dim-1-i in every constraint vector.
ConeH reversed(const ConeH& c);

}  // namespace bnwall
