#include "bnwall/string_class.hpp"

#include <sstream>
#include <stdexcept>

namespace bnwall {

Profile profile(const Walk& w) {
  if (w.is_trivial()) return {w.source()};
  const auto& ls = w.letters();
  const int m = w.length();
  Profile f(static_cast<std::size_t>(m) + 1);
  f[0] = ls[m - 1].source();
  for (int j = 1; j <= m; ++j) f[j] = ls[m - j].target();
  return f;
}

namespace {

void check_interval(const StringClass& c, int n) {
  if (!(0 <= c.a && c.a < c.b && c.b <= n))
    throw std::invalid_argument("string class " + to_string(c) + " needs 0 <= a < b <= " + std::to_string(n));
  if (c.eta != 1 && c.eta != -1) throw std::invalid_argument("string class eta must be +1 or -1");
}

// Whether the top letter g_1 of psi((a, b, eta)) is honest (beta_{b-1}) or
// an inverse (alpha_{b-1}^*), indexed by [eta == 1][a and b same parity].
constexpr bool kTopLetterHonest[2][2] = {
    /* eta = -1 */ {/* a !=_2 b */ false, /* a ==_2 b */ true},
    /* eta = +1 */ {/* a !=_2 b */ true, /* a ==_2 b */ false},
};

}  // namespace

StringClass phi(const Walk& w, const QuiverPresentation& q) {
  if (!is_string(w, q)) throw std::invalid_argument("phi: " + to_string(w) + " is not a string");
  if (w.is_trivial()) return StringClass::trivial(w.source());
  if (w.is_cycle()) return StringClass::cycle();
  if (!w.is_alternating()) throw std::logic_error("phi: non-alternating open string " + to_string(w));
  Walk rep = w;
  Profile f = profile(w);
  if (f.back() < f.front()) {
    rep = star(w);
    f = profile(rep);
  }
  const bool last_honest = !rep.letters().back().inverted;
  return StringClass::interval(f.front(), f.back(), last_honest ? 1 : -1);
}

Walk psi(const StringClass& c, int n) {
  switch (c.kind) {
    case StringClass::Kind::Trivial:
      if (c.vertex < 0 || c.vertex > n) throw std::invalid_argument("psi: vertex out of range");
      return Walk::trivial(c.vertex);
    case StringClass::Kind::Cycle:
      return Walk({letter(beta(n - 1)), letter(alpha(n - 1))});
    case StringClass::Kind::Interval:
      break;
  }
  check_interval(c, n);
  bool honest = kTopLetterHonest[c.eta == 1][(c.a - c.b) % 2 == 0];
  std::vector<Letter> ls;
  // Each letter climbs one step i -> i+1: either beta_i or alpha_i^*.
  for (int i = c.b - 1; i >= c.a; --i) {
    ls.push_back(honest ? letter(beta(i)) : letter(alpha(i), true));
    honest = !honest;
  }
  return Walk(std::move(ls));
}

std::vector<StringClass> star_classes(int n) {
  if (n < 1) throw std::invalid_argument("star_classes: n must be at least 1");
  std::vector<StringClass> out;
  for (int i = 0; i <= n; ++i) out.push_back(StringClass::trivial(i));
  out.push_back(StringClass::cycle());
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int eta : {-1, 1}) out.push_back(StringClass::interval(a, b, eta));
  return out;
}

std::string to_string(const StringClass& c) {
  switch (c.kind) {
    case StringClass::Kind::Trivial:
      return "e" + std::to_string(c.vertex);
    case StringClass::Kind::Cycle:
      return "cycle";
    case StringClass::Kind::Interval:
      break;
  }
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.eta) + ")";
}

StringClass parse_string_class(const std::string& text) {
  if (text == "cycle") return StringClass::cycle();
  if (!text.empty() && text[0] == 'e') {
    std::size_t used = 0;
    int v = std::stoi(text.substr(1), &used);
    if (used + 1 != text.size()) throw std::invalid_argument("bad class '" + text + "'");
    return StringClass::trivial(v);
  }
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string part;
  std::vector<int> nums;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad class '" + text + "'");
    }
  }
  if (nums.size() != 3) throw std::invalid_argument("bad class '" + text + "': expected a,b,eta");
  if (nums[0] < 0 || nums[0] >= nums[1] || (nums[2] != 1 && nums[2] != -1))
    throw std::invalid_argument("bad class '" + text + "': need 0 <= a < b and eta = +-1");
  return StringClass::interval(nums[0], nums[1], nums[2]);
}

}  // namespace bnwall
