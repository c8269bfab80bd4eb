#pragma once

// Representations of (Q(n), I(n)) over the rationals: string modules M(w),
// the projective-injective modules R(i), and the catalogue of indecomposables.

#include "bnwall/quiver.hpp"
#include "bnwall/rational.hpp"
#include "bnwall/string_class.hpp"

#include <compare>
#include <string>
#include <vector>

namespace bnwall {

/// Dimension vector indexed ascending by vertex (entry i = vertex i).
struct DimVector {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  int total() const;
  bool is_zero() const;
  RatVec as_rational() const;

  auto operator<=>(const DimVector&) const = default;
};

DimVector operator-(const DimVector& a, const DimVector& b);

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Rational(0)) {}
  static Matrix from_rows(const std::vector<std::vector<int>>& rows, int cols);

  Rational& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  bool is_zero() const;

  bool operator==(const Matrix&) const = default;
};

Matrix operator*(const Matrix& a, const Matrix& b);

struct Representation {
  int n = 0;
  DimVector dims;
  /// One matrix per arrow, indexed by Arrow::id(n); shape dims[t] x dims[s].
  std::vector<Matrix> maps;

  const Matrix& map(Arrow a) const { return maps[static_cast<std::size_t>(a.id(n))]; }
  Matrix& map(Arrow a) { return maps[static_cast<std::size_t>(a.id(n))]; }
};

/// Which indecomposable a catalogue entry is.
struct ModuleLabel {
  enum class Kind : std::uint8_t { String, Biserial };
  Kind kind = Kind::String;
  StringClass string_class;  // Kind::String
  int r_index = 0;           // Kind::Biserial, the i of R(i)

  static ModuleLabel string(StringClass c) { return {Kind::String, c, 0}; }
  static ModuleLabel biserial(int i) { return {Kind::Biserial, StringClass{}, i}; }

  bool is_thin() const;
  auto operator<=>(const ModuleLabel&) const = default;
};

/// "S2", "M(0,2,-1)", "M(cycle)", "R0".
std::string to_string(const ModuleLabel& m);
/// Accepts the forms produced by to_string, plus bare class syntax.
ModuleLabel parse_module_label(const std::string& text);

struct CatalogueEntry {
  ModuleLabel label;
  Representation rep;
};

Representation string_module(const Walk& w, const QuiverPresentation& q);
Representation biserial_module(int i, int n);
Representation module_for(const ModuleLabel& m, int n);

/// True iff every relation of I(n) holds. Shape mismatches throw.
bool check_relations(const Representation& rep, const QuiverPresentation& q);

/// One representative per isomorphism class: a string module per *-class in
/// star_classes order, then R(0), ..., R(n-2).
std::vector<CatalogueEntry> enumerate_indecomposables(int n);

DimVector dim_vector(const Representation& rep);
bool is_thin(const Representation& rep);

}  // namespace bnwall
