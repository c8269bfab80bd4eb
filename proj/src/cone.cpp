#include "bnwall/cone.hpp"

#include "bnwall/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnwall {

using linalg::Rows;

namespace {

void check_shape(const ConeH& c) {
  for (const auto& e : c.equalities)
    if (static_cast<int>(e.size()) != c.ambient_dim) throw std::invalid_argument("cone: equality has wrong length");
  for (const auto& b : c.inequalities)
    if (static_cast<int>(b.size()) != c.ambient_dim) throw std::invalid_argument("cone: inequality has wrong length");
}

Rows canonical_basis(const Rows& rows, int dim) {
  Rows out;
  for (const auto& r : linalg::rref(rows, dim)) out.push_back(linalg::primitive_signed(r));
  return out;
}

RatVec combine(const Rows& basis, const RatVec& coords, int dim) {
  RatVec v = zeros(dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < dim; ++j) v[j] += coords[i] * basis[i][j];
  return v;
}

// Extreme rays of the pointed cone { x in R^k : a.x <= 0 for a in rows },
// where the rows have full rank k.
Rows pointed_rays(const Rows& rows, int k) {
  if (k == 0) return {};
  // Initial simplicial cone from k independent rows.
  Rows basis_rows;
  std::vector<bool> used(rows.size(), false);
  for (std::size_t i = 0; i < rows.size() && static_cast<int>(basis_rows.size()) < k; ++i) {
    Rows trial = basis_rows;
    trial.push_back(rows[i]);
    if (linalg::rank(trial, k) == static_cast<int>(trial.size())) {
      basis_rows = std::move(trial);
      used[i] = true;
    }
  }
  if (static_cast<int>(basis_rows.size()) < k) throw std::logic_error("double description: cone is not pointed");

  Rows rays;
  for (int j = 0; j < k; ++j) {
    RatVec rhs = zeros(k);
    rhs[j] = -1;
    rays.push_back(linalg::primitive(linalg::solve(basis_rows, rhs)));
  }
  Rows active = basis_rows;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    const RatVec& a = rows[i];
    std::vector<Rational> val(rays.size());
    Rows next;
    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = linalg::dot(a, rays[r]);
      if (sgn(val[r]) > 0) {
        plus.push_back(r);
      } else {
        next.push_back(rays[r]);
        if (sgn(val[r]) < 0) minus.push_back(r);
      }
    }
    if (plus.empty()) {
      active.push_back(a);
      continue;
    }
    if (k >= 2) {
      for (std::size_t p : plus) {
        for (std::size_t m : minus) {
          // Adjacent iff the constraints tight at both span a space of rank k-2.
          Rows common;
          for (const auto& row : active)
            if (sgn(linalg::dot(row, rays[p])) == 0 && sgn(linalg::dot(row, rays[m])) == 0) common.push_back(row);
          if (static_cast<int>(common.size()) < k - 2 || linalg::rank(common, k) != k - 2) continue;
          RatVec r = linalg::sub(linalg::scale(rays[m], val[p]), linalg::scale(rays[p], val[m]));
          next.push_back(linalg::primitive(r));
        }
      }
    }
    rays = std::move(next);
    active.push_back(a);
  }
  return rays;
}

}  // namespace

ConeV double_description(const ConeH& c) {
  check_shape(c);
  const int d = c.ambient_dim;
  ConeV out;
  out.ambient_dim = d;

  Rows all = c.equalities;
  all.insert(all.end(), c.inequalities.begin(), c.inequalities.end());
  out.lineality = canonical_basis(linalg::nullspace(all, d), d);

  // W: the part of the equality subspace orthogonal to the lineality.
  Rows w_constraints = c.equalities;
  w_constraints.insert(w_constraints.end(), out.lineality.begin(), out.lineality.end());
  const Rows w = linalg::nullspace(w_constraints, d);
  const int k = static_cast<int>(w.size());

  Rows reduced;
  for (const auto& b : c.inequalities) {
    RatVec a = zeros(k);
    for (int j = 0; j < k; ++j) a[j] = linalg::dot(b, w[j]);
    if (!linalg::is_zero(a)) reduced.push_back(linalg::primitive(a));
  }
  for (const auto& x : pointed_rays(reduced, k)) out.rays.push_back(linalg::primitive(combine(w, x, d)));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

ConeH h_representation(const ConeV& v) {
  // Polar: { y : <y, r> <= 0 for rays, <y, l> = 0 for lineality }.
  ConeH polar{v.ambient_dim, v.lineality, v.rays};
  ConeV pv = double_description(polar);
  return ConeH{v.ambient_dim, pv.lineality, pv.rays};
}

namespace {

int leading_index(const RatVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return static_cast<int>(i);
  return static_cast<int>(v.size());
}

bool sparser(const RatVec& x, const RatVec& y) {
  const int sx = linalg::support_size(x);
  const int sy = linalg::support_size(y);
  if (sx != sy) return sx < sy;
  return leading_index(x) < leading_index(y);
}

// Reduce b modulo the row echelon basis `eqs` to its coset's normal form, then
// search for a sparser representative of the coset.
RatVec sparsify(RatVec b, const Rows& eqs) {
  for (const auto& e : eqs) {
    const int p = leading_index(e);
    if (sgn(b[p]) != 0) b = linalg::sub(b, linalg::scale(e, b[p] / e[p]));
  }
  bool improved = true;
  while (improved) {
    improved = false;
    RatVec best = b;
    for (const auto& e : eqs) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (sgn(e[i]) == 0 || sgn(b[i]) == 0) continue;
        RatVec cand = linalg::sub(b, linalg::scale(e, b[i] / e[i]));
        if (sparser(cand, best)) best = std::move(cand);
      }
    }
    if (sparser(best, b)) {
      b = std::move(best);
      improved = true;
    }
  }
  return linalg::primitive(b);
}

}  // namespace

ConeH minimal_h_representation(const ConeH& c) {
  const ConeV v = double_description(c);
  const int d = c.ambient_dim;
  Rows gens = v.lineality;
  gens.insert(gens.end(), v.rays.begin(), v.rays.end());

  ConeH out;
  out.ambient_dim = d;
  out.equalities = canonical_basis(linalg::nullspace(gens, d), d);

  Rows ineqs;
  for (const auto& b : c.inequalities) {
    bool tight_everywhere = true;
    for (const auto& r : v.rays) tight_everywhere &= sgn(linalg::dot(b, r)) == 0;
    if (tight_everywhere) continue;
    ineqs.push_back(sparsify(b, out.equalities));
  }
  std::sort(ineqs.begin(), ineqs.end());
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());

  for (std::size_t i = 0; i < ineqs.size();) {
    ConeH without{d, out.equalities, {}};
    for (std::size_t j = 0; j < ineqs.size(); ++j)
      if (j != i) without.inequalities.push_back(ineqs[j]);
    if (cone_subset(without, ConeH{d, {}, {ineqs[i]}})) {
      ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  out.inequalities = std::move(ineqs);
  return out;
}

int cone_dim(const ConeV& v) {
  return static_cast<int>(v.lineality.size()) + linalg::rank(v.rays, v.ambient_dim);
}

int cone_dim(const ConeH& c) { return cone_dim(double_description(c)); }

bool contains_point(const ConeH& c, const RatVec& p) {
  if (static_cast<int>(p.size()) != c.ambient_dim) throw std::invalid_argument("contains_point: dimension mismatch");
  for (const auto& e : c.equalities)
    if (sgn(linalg::dot(e, p)) != 0) return false;
  for (const auto& b : c.inequalities)
    if (sgn(linalg::dot(b, p)) > 0) return false;
  return true;
}

bool cone_subset(const ConeV& a, const ConeH& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("cone_subset: dimension mismatch");
  for (const auto& r : a.rays)
    if (!contains_point(b, r)) return false;
  for (const auto& l : a.lineality)
    if (!contains_point(b, l) || !contains_point(b, linalg::negate(l))) return false;
  return true;
}

bool cone_subset(const ConeH& a, const ConeH& b) { return cone_subset(double_description(a), b); }

bool cone_equal(const ConeH& a, const ConeH& b) { return cone_subset(a, b) && cone_subset(b, a); }

RatVec relative_interior_point(const ConeV& v, int attempt) {
  RatVec p = zeros(v.ambient_dim);
  for (std::size_t i = 0; i < v.rays.size(); ++i) {
    Rational w = 1 + static_cast<long>((attempt * (2 * i + 1) + i) % 11);
    p = linalg::add(p, linalg::scale(v.rays[i], w));
  }
  for (std::size_t k = 0; k < v.lineality.size(); ++k) {
    Rational w = static_cast<long>(((attempt + 3) * (k + 2) * (k + 5)) % 17) - 8;
    if (sgn(w) == 0) w = 9;
    p = linalg::add(p, linalg::scale(v.lineality[k], w / Rational(k + 1 + attempt)));
  }
  return p;
}

ConeH reversed(const ConeH& c) {
  auto rev = [](Rows rows) {
    for (auto& r : rows) std::reverse(r.begin(), r.end());
    return rows;
  };
  return ConeH{c.ambient_dim, rev(c.equalities), rev(c.inequalities)};
}

}  // namespace bnwall
