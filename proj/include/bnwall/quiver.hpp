#pragma once

// The quiver Q(n) with relations I(n): vertices 0..n, arrows
// alpha_i : i+1 -> i and beta_i : i -> i+1, together with walks, strings and
// bands on it.
//
// Walks are stored in composition order, exactly as written: the word
// g_1 g_2 ... g_m has t(g_{k+1}) = s(g_k), so the walk starts at s(g_m) and
// ends at t(g_1).

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bnwall {

enum class ArrowKind : std::uint8_t { Alpha, Beta };

struct Arrow {
  ArrowKind kind;
  int index;

  int source() const { return kind == ArrowKind::Alpha ? index + 1 : index; }
  int target() const { return kind == ArrowKind::Alpha ? index : index + 1; }

  /// Position in the arrow list of Q(n): alphas first, then betas.
  int id(int n) const { return kind == ArrowKind::Alpha ? index : n + index; }

  auto operator<=>(const Arrow&) const = default;
};

inline Arrow alpha(int i) { return {ArrowKind::Alpha, i}; }
inline Arrow beta(int i) { return {ArrowKind::Beta, i}; }

/// An arrow or its formal inverse.
struct Letter {
  ArrowKind kind;
  int index;
  bool inverted = false;

  Arrow honest() const { return {kind, index}; }
  Letter inverse() const { return {kind, index, !inverted}; }
  int source() const { return inverted ? honest().target() : honest().source(); }
  int target() const { return inverted ? honest().source() : honest().target(); }

  auto operator<=>(const Letter&) const = default;
};

inline Letter letter(Arrow a, bool inverted = false) { return {a.kind, a.index, inverted}; }

class Walk {
 public:
  static Walk trivial(int vertex);
  /// Throws std::invalid_argument unless consecutive letters compose.
  explicit Walk(std::vector<Letter> letters);

  bool is_trivial() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }

  int source() const;
  int target() const;
  bool is_cycle() const { return !is_trivial() && source() == target(); }
  /// No letter is followed by its own inverse.
  bool is_reduced() const;
  /// Honest and inverse letters strictly alternate.
  bool is_alternating() const;

  Walk power(int h) const;

  auto operator<=>(const Walk&) const = default;

 private:
  Walk() = default;
  int vertex_ = 0;  // meaningful for trivial walks only
  std::vector<Letter> letters_;
};

/// Paths are honest walks, written in composition order.
using Path = std::vector<Arrow>;

struct RelationTerm {
  int coefficient;
  Path path;
};

/// A generator of I(n): a monomial (one term) or a binomial (two terms).
struct Relation {
  std::vector<RelationTerm> terms;
};

struct QuiverPresentation {
  int n = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  /// Every monomial occurring in a generator of I(n).
  std::set<Path> forbidden_paths;
  /// The binomials beta_i alpha_i = alpha_{i+1} beta_{i+1}.
  std::vector<std::pair<Path, Path>> commuting_pairs;

  int vertex_count() const { return n + 1; }
  int arrow_count() const { return 2 * n; }
};

QuiverPresentation build_quiver(int n);

Walk star(const Walk& w);

/// Throws std::invalid_argument if the walk uses arrows or vertices outside Q(n).
void validate_walk(const Walk& w, const QuiverPresentation& q);

bool is_string(const Walk& w, const QuiverPresentation& q);

/// All strings, ordered by length and then lexicographically.
std::vector<Walk> enumerate_strings(const QuiverPresentation& q);

/// Band test: nontrivial reduced cycle (also across the wrap-around), w^h a
/// string for h = 1..max_power, and not a proper power of a shorter walk.
bool is_band(const Walk& w, const QuiverPresentation& q, int max_power = 2);

/// Scans every reduced cycle up to the longest possible string length plus a
/// margin and returns those passing is_band.
std::vector<Walk> find_bands(const QuiverPresentation& q, int max_power = 2);

/// Compact notation: "a1*b0" for alpha_1^* beta_0, "e2" for the trivial walk at 2.
std::string to_string(const Walk& w);
std::string to_string(const Letter& l);
Walk parse_walk(const std::string& text);

}  // namespace bnwall
