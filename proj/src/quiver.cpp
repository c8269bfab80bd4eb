#include "bnwall/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace bnwall {

Walk Walk::trivial(int vertex) {
  Walk w;
  w.vertex_ = vertex;
  return w;
}

Walk::Walk(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("Walk: use Walk::trivial for length 0");
  for (std::size_t k = 0; k + 1 < letters_.size(); ++k) {
    if (letters_[k + 1].target() != letters_[k].source())
      throw std::invalid_argument("Walk: letters do not compose: " + to_string(letters_[k]) +
                                  " after " + to_string(letters_[k + 1]));
  }
}

int Walk::source() const { return is_trivial() ? vertex_ : letters_.back().source(); }
int Walk::target() const { return is_trivial() ? vertex_ : letters_.front().target(); }

bool Walk::is_reduced() const {
  for (std::size_t k = 0; k + 1 < letters_.size(); ++k)
    if (letters_[k] == letters_[k + 1].inverse()) return false;
  return true;
}

bool Walk::is_alternating() const {
  for (std::size_t k = 0; k + 1 < letters_.size(); ++k)
    if (letters_[k].inverted == letters_[k + 1].inverted) return false;
  return true;
}

Walk Walk::power(int h) const {
  if (h < 1) throw std::invalid_argument("Walk::power: exponent must be positive");
  if (is_trivial()) return *this;
  if (!is_cycle()) throw std::invalid_argument("Walk::power: not a cycle");
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Walk(std::move(out));
}

QuiverPresentation build_quiver(int n) {
  if (n < 1) throw std::invalid_argument("build_quiver: n must be at least 1");
  QuiverPresentation q;
  q.n = n;
  for (int i = 0; i < n; ++i) q.arrows.push_back(alpha(i));
  for (int i = 0; i < n; ++i) q.arrows.push_back(beta(i));

  for (int i = 0; i + 2 <= n; ++i) {
    Path lhs{beta(i), alpha(i)};
    Path rhs{alpha(i + 1), beta(i + 1)};
    q.relations.push_back({{{1, lhs}, {-1, rhs}}});
    q.commuting_pairs.emplace_back(lhs, rhs);
    q.relations.push_back({{{1, {alpha(i), alpha(i + 1)}}}});
    q.relations.push_back({{{1, {beta(i + 1), beta(i)}}}});
  }
  q.relations.push_back({{{1, {alpha(0), beta(0)}}}});

  for (const auto& rel : q.relations)
    for (const auto& term : rel.terms) q.forbidden_paths.insert(term.path);
  return q;
}

Walk star(const Walk& w) {
  if (w.is_trivial()) return w;
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Walk(std::move(out));
}

void validate_walk(const Walk& w, const QuiverPresentation& q) {
  if (w.is_trivial()) {
    if (w.source() < 0 || w.source() > q.n)
      throw std::invalid_argument("walk: vertex out of range for Q(" + std::to_string(q.n) + ")");
    return;
  }
  for (const auto& l : w.letters())
    if (l.index < 0 || l.index >= q.n)
      throw std::invalid_argument("walk: arrow index out of range for Q(" + std::to_string(q.n) + ")");
}

bool is_string(const Walk& w, const QuiverPresentation& q) {
  validate_walk(w, q);
  if (w.is_trivial()) return true;
  if (!w.is_reduced()) return false;
  const auto& ls = w.letters();
  const std::size_t m = ls.size();
  // Every contiguous run of equally oriented letters is a path p or p^*.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m && ls[j].inverted == ls[i].inverted; ++j) {
      Path p;
      if (!ls[i].inverted) {
        for (std::size_t k = i; k <= j; ++k) p.push_back(ls[k].honest());
      } else {
        for (std::size_t k = j + 1; k-- > i;) p.push_back(ls[k].honest());
      }
      if (q.forbidden_paths.contains(p)) return false;
    }
  }
  return true;
}

namespace {

std::vector<Letter> all_letters(int n) {
  std::vector<Letter> out;
  for (int i = 0; i < n; ++i)
    for (ArrowKind k : {ArrowKind::Alpha, ArrowKind::Beta})
      for (bool inv : {false, true}) out.push_back({k, i, inv});
  std::sort(out.begin(), out.end());
  return out;
}

bool shortlex_less(const Walk& a, const Walk& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_trivial()) return a.source() < b.source();
  return a.letters() < b.letters();
}

}  // namespace

std::vector<Walk> enumerate_strings(const QuiverPresentation& q) {
  std::vector<Walk> out;
  for (int v = 0; v <= q.n; ++v) out.push_back(Walk::trivial(v));
  const auto letters = all_letters(q.n);

  std::deque<Walk> frontier;
  for (const auto& l : letters) frontier.emplace_back(std::vector<Letter>{l});
  // Strings are closed under taking subwords, so extending on the right
  // reaches every string.  Strings on B(n) have length at most max(n, 2).
  const int guard = 2 * q.n + 4;
  while (!frontier.empty()) {
    Walk w = std::move(frontier.front());
    frontier.pop_front();
    if (!is_string(w, q)) continue;
    if (w.length() > guard) throw std::logic_error("enumerate_strings: unbounded string growth");
    for (const auto& l : letters) {
      if (l.target() != w.source()) continue;
      std::vector<Letter> ext = w.letters();
      ext.push_back(l);
      frontier.emplace_back(std::move(ext));
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

bool is_band(const Walk& w, const QuiverPresentation& q, int max_power) {
  validate_walk(w, q);
  if (w.is_trivial() || !w.is_cycle() || !w.is_reduced()) return false;
  const auto& ls = w.letters();
  if (ls.back() == ls.front().inverse()) return false;
  for (int h = 1; h <= max_power; ++h)
    if (!is_string(w.power(h), q)) return false;
  const std::size_t m = ls.size();
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool periodic = true;
    for (std::size_t k = d; k < m && periodic; ++k) periodic = ls[k] == ls[k - d];
    if (periodic) return false;
  }
  return true;
}

std::vector<Walk> find_bands(const QuiverPresentation& q, int max_power) {
  const auto letters = all_letters(q.n);
  const int bound = std::max(q.n, 2) + 2;
  std::vector<Walk> bands;
  std::vector<Letter> stack;

  auto dfs = [&](auto&& self) -> void {
    const Letter last = stack.back();
    if (stack.size() >= 2 && stack.front().target() == last.source()) {
      Walk w(stack);
      if (is_band(w, q, max_power)) bands.push_back(w);
    }
    if (static_cast<int>(stack.size()) == bound) return;
    for (const auto& l : letters) {
      if (l.target() != last.source() || l == last.inverse()) continue;
      stack.push_back(l);
      self(self);
      stack.pop_back();
    }
  };
  for (const auto& l : letters) {
    stack.assign(1, l);
    dfs(dfs);
  }
  std::sort(bands.begin(), bands.end(), shortlex_less);
  return bands;
}

std::string to_string(const Letter& l) {
  std::string s = l.kind == ArrowKind::Alpha ? "a" : "b";
  s += std::to_string(l.index);
  if (l.inverted) s += '*';
  return s;
}

std::string to_string(const Walk& w) {
  if (w.is_trivial()) return "e" + std::to_string(w.source());
  std::string s;
  for (const auto& l : w.letters()) s += to_string(l);
  return s;
}

Walk parse_walk(const std::string& text) {
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("parse_walk: expected index in '" + text + "'");
    return std::stoi(text.substr(start, pos - start));
  };
  if (!text.empty() && text[0] == 'e') {
    pos = 1;
    int v = read_int();
    if (pos != text.size()) throw std::invalid_argument("parse_walk: trailing input in '" + text + "'");
    return Walk::trivial(v);
  }
  std::vector<Letter> ls;
  while (pos < text.size()) {
    char c = text[pos++];
    ArrowKind kind;
    if (c == 'a') {
      kind = ArrowKind::Alpha;
    } else if (c == 'b') {
      kind = ArrowKind::Beta;
    } else {
      throw std::invalid_argument("parse_walk: unexpected character in '" + text + "'");
    }
    int idx = read_int();
    bool inv = pos < text.size() && text[pos] == '*';
    if (inv) ++pos;
    ls.push_back({kind, idx, inv});
  }
  if (ls.empty()) throw std::invalid_argument("parse_walk: empty walk");
  return Walk(std::move(ls));
}

}  // namespace bnwall
