#include "bnwall/linalg.hpp"

#include <stdexcept>

namespace bnwall::linalg {

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec scale(const RatVec& a, const Rational& s) {
  RatVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

RatVec negate(const RatVec& a) { return scale(a, Rational(-1)); }

bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Rows rref(Rows rows, int cols) {
  std::size_t pivot_row = 0;
  for (int c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    Rational inv = 1 / rows[pivot_row][c];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c];
      for (int k = 0; k < cols; ++k) rows[r][k] -= f * rows[pivot_row][k];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

int rank(const Rows& rows, int cols) { return static_cast<int>(rref(rows, cols).size()); }

Rows nullspace(const Rows& rows, int cols) {
  Rows r = rref(rows, cols);
  std::vector<int> pivot_col(r.size(), -1);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (int c = 0; c < cols; ++c) {
      if (sgn(r[i][c]) != 0) {
        pivot_col[i] = c;
        is_pivot[c] = true;
        break;
      }
    }
  }
  Rows basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v = zeros(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivot_col[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec solve(const Rows& m, const RatVec& b) {
  const int n = static_cast<int>(m.size());
  Rows aug;
  aug.reserve(m.size());
  for (int i = 0; i < n; ++i) {
    RatVec row = m[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  Rows red = rref(aug, n + 1);
  if (static_cast<int>(red.size()) < n) throw std::domain_error("solve: singular system");
  RatVec x = zeros(n);
  for (int i = 0; i < n; ++i) {
    if (sgn(red[i][i]) == 0) throw std::domain_error("solve: singular system");
    x[i] = red[i][n];
  }
  return x;
}

RatVec primitive(const RatVec& v) {
  if (is_zero(v)) return v;
  Integer den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const auto& x : v) {
    Integer num = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    Integer num = x.get_num() * (den_lcm / x.get_den());
    r.emplace_back(Integer(num / g));
  }
  return r;
}

RatVec primitive_signed(const RatVec& v) {
  RatVec r = primitive(v);
  for (const auto& x : r) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0) r = negate(r);
    break;
  }
  return r;
}

int support_size(const RatVec& v) {
  int s = 0;
  for (const auto& x : v) s += sgn(x) != 0;
  return s;
}

}  // namespace bnwall::linalg
