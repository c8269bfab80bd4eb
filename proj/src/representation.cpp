#include "bnwall/representation.hpp"

#include <stdexcept>

namespace bnwall {

int DimVector::total() const {
  int s = 0;
  for (int d : entries) s += d;
  return s;
}

bool DimVector::is_zero() const { return total() == 0; }

RatVec DimVector::as_rational() const {
  RatVec v;
  v.reserve(entries.size());
  for (int d : entries) v.emplace_back(d);
  return v;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  DimVector r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
  return r;
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (sgn(a.at(i, k)) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

bool ModuleLabel::is_thin() const {
  return kind == Kind::String && string_class.kind != StringClass::Kind::Cycle;
}

std::string to_string(const ModuleLabel& m) {
  if (m.kind == ModuleLabel::Kind::Biserial) return "R" + std::to_string(m.r_index);
  const auto& c = m.string_class;
  if (c.kind == StringClass::Kind::Trivial) return "S" + std::to_string(c.vertex);
  if (c.kind == StringClass::Kind::Cycle) return "M(cycle)";
  return "M" + to_string(c);
}

ModuleLabel parse_module_label(const std::string& text) {
  auto tail_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad module id '" + text + "'");
    return v;
  };
  try {
    if (text.size() >= 2 && text[0] == 'R') return ModuleLabel::biserial(tail_int(text.substr(1)));
    if (text.size() >= 2 && text[0] == 'S') return ModuleLabel::string(StringClass::trivial(tail_int(text.substr(1))));
    if (text.size() >= 3 && text[0] == 'M' && text[1] == '(' && text.back() == ')') {
      std::string inner = text.substr(2, text.size() - 3);
      return ModuleLabel::string(parse_string_class(inner));
    }
    return ModuleLabel::string(parse_string_class(text));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown module id '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("unknown module id '" + text + "'");
  }
}

namespace {

Representation zero_rep(const DimVector& dims, int n) {
  Representation rep;
  rep.n = n;
  rep.dims = dims;
  rep.maps.resize(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    rep.map(alpha(i)) = Matrix(dims[i], dims[i + 1]);
    rep.map(beta(i)) = Matrix(dims[i + 1], dims[i]);
  }
  return rep;
}

}  // namespace

Representation string_module(const Walk& w, const QuiverPresentation& q) {
  if (!is_string(w, q)) throw std::invalid_argument("string_module: " + to_string(w) + " is not a string");
  const Profile f = profile(w);
  const int m = w.length();

  // Copies at a vertex are ordered as they appear reading the word from
  // the left, i.e. by decreasing position in f_w.
  DimVector dims{std::vector<int>(static_cast<std::size_t>(q.n) + 1, 0)};
  std::vector<int> copy(f.size());
  for (int h = m; h >= 0; --h) copy[h] = dims.entries[f[h]]++;

  Representation rep = zero_rep(dims, q.n);
  for (int k = 1; k <= m; ++k) {
    const Letter& l = w.letters()[k - 1];
    int from = m - k;  // position of s(g_k)
    int to = m - k + 1;
    if (l.inverted) std::swap(from, to);
    rep.map(l.honest()).at(copy[to], copy[from]) = 1;
  }
  return rep;
}

Representation biserial_module(int i, int n) {
  if (n < 2) throw std::invalid_argument("biserial_module: R(i) needs n >= 2");
  if (i < 0 || i > n - 2) throw std::invalid_argument("biserial_module: i must lie in [0, n-2]");
  DimVector dims{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  dims.entries[i] = 1;
  dims.entries[i + 1] = 2;
  dims.entries[i + 2] = 1;
  Representation rep = zero_rep(dims, n);
  const Matrix row = Matrix::from_rows({{1, 0}}, 2);
  const Matrix col = Matrix::from_rows({{0}, {1}}, 1);
  rep.map(alpha(i)) = row;
  rep.map(beta(i + 1)) = row;
  rep.map(beta(i)) = col;
  rep.map(alpha(i + 1)) = col;
  return rep;
}

Representation module_for(const ModuleLabel& m, int n) {
  if (m.kind == ModuleLabel::Kind::Biserial) return biserial_module(m.r_index, n);
  return string_module(psi(m.string_class, n), build_quiver(n));
}

bool check_relations(const Representation& rep, const QuiverPresentation& q) {
  if (rep.n != q.n || rep.dims.size() != q.n + 1 || static_cast<int>(rep.maps.size()) != q.arrow_count())
    throw std::invalid_argument("check_relations: representation does not match Q(n)");
  for (const Arrow& a : q.arrows) {
    const Matrix& m = rep.map(a);
    if (m.rows != rep.dims[a.target()] || m.cols != rep.dims[a.source()])
      throw std::invalid_argument("check_relations: map shape does not match dimension vector");
  }
  for (const Relation& rel : q.relations) {
    Matrix total;
    bool first = true;
    for (const RelationTerm& term : rel.terms) {
      Matrix prod = rep.map(term.path.front());
      for (std::size_t k = 1; k < term.path.size(); ++k) prod = prod * rep.map(term.path[k]);
      for (auto& x : prod.data) x *= term.coefficient;
      if (first) {
        total = std::move(prod);
        first = false;
      } else {
        for (std::size_t k = 0; k < total.data.size(); ++k) total.data[k] += prod.data[k];
      }
    }
    if (!total.is_zero()) return false;
  }
  return true;
}

std::vector<CatalogueEntry> enumerate_indecomposables(int n) {
  const QuiverPresentation q = build_quiver(n);
  std::vector<ModuleLabel> labels;
  for (const auto& c : star_classes(n)) labels.push_back(ModuleLabel::string(c));
  for (int i = 0; i + 2 <= n; ++i) labels.push_back(ModuleLabel::biserial(i));

  std::vector<CatalogueEntry> out(labels.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto& lab = labels[k];
    out[k].label = lab;
    out[k].rep = lab.kind == ModuleLabel::Kind::Biserial ? biserial_module(lab.r_index, n)
                                                         : string_module(psi(lab.string_class, n), q);
  }
  return out;
}

DimVector dim_vector(const Representation& rep) { return rep.dims; }

bool is_thin(const Representation& rep) {
  for (int d : rep.dims.entries)
    if (d > 1) return false;
  return true;
}

}  // namespace bnwall
