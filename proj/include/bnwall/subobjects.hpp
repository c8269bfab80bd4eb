#pragma once

// Dimension vectors of subobjects and quotients of B(n)-modules.
//
// Two routes: a combinatorial rule for thin string modules M(a, b, eta), and
// an exhaustive search over per-vertex subspaces closed under every arrow map.

#include "bnwall/representation.hpp"
#include "bnwall/string_class.hpp"

#include <compare>
#include <cstdint>
#include <set>

namespace bnwall {

struct SupportInterval {
  int lo;
  int hi;
  auto operator<=>(const SupportInterval&) const = default;
};

/// Supports [a', b'] of the indecomposable submodules of M(a, b, eta),
/// including the whole interval [a, b].
///   eta = -1: a' = a mod 2 and (b' = b or b' = a mod 2)
///   eta = +1: (a' = a or a' = a+1 mod 2) and (b' = b or b' = a+1 mod 2)
std::set<SupportInterval> thin_subobject_supports(const StringClass& c);

/// Supports of the indecomposable quotients; the eta = +1 quotients follow the
/// eta = -1 submodule rule and vice versa.
std::set<SupportInterval> thin_quotient_supports(const StringClass& c);

DimVector indicator(const SupportInterval& s, int n);

enum class Field : std::uint8_t { F2, RationalSampled };

struct OracleOptions {
  Field field = Field::F2;
  /// RationalSampled: number of random lines tried in each 2-dimensional space,
  /// on top of the coordinate lines and the diagonal.
  int samples = 6;
  std::uint32_t seed = 20240917;
};

/// Dimension vectors of the nonzero proper subrepresentations.  Every vertex
/// space must have dimension at most 2; larger inputs throw std::domain_error.
std::set<DimVector> subobject_dimvectors(const Representation& rep, const OracleOptions& opts = {});

/// { dim(rep) - d : d a proper nonzero subobject dimension vector }.
std::set<DimVector> quotient_dimvectors(const Representation& rep, const OracleOptions& opts = {});

/// Support of d is a nonempty interval of vertices.
bool has_interval_support(const DimVector& d);

namespace serial {

/// Single-threaded reference for the F2 search.
std::set<DimVector> subobject_dimvectors(const Representation& rep);

}  // namespace serial

}  // namespace bnwall
