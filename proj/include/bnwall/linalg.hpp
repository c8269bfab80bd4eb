#pragma once

// Exact linear algebra over the rationals on small dense data.

#include "bnwall/rational.hpp"

#include <vector>

namespace bnwall::linalg {

using Rows = std::vector<RatVec>;

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& s);
RatVec negate(const RatVec& a);
bool is_zero(const RatVec& a);

/// Reduced row echelon form; zero rows are dropped.
Rows rref(Rows rows, int cols);

int rank(const Rows& rows, int cols);

/// Basis of { x : <r, x> = 0 for every row r }, one vector per free column
/// of the RREF, so the result is deterministic.
Rows nullspace(const Rows& rows, int cols);

/// Solve M x = b for square invertible M (rows given). Throws if singular.
RatVec solve(const Rows& m, const RatVec& b);

/// Scale to a primitive integer vector by a positive factor (direction kept).
RatVec primitive(const RatVec& v);

/// Primitive integer vector whose leading nonzero entry is positive.
RatVec primitive_signed(const RatVec& v);

/// Number of nonzero entries.
int support_size(const RatVec& v);

}  // namespace bnwall::linalg
