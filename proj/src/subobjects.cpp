#include "bnwall/subobjects.hpp"

#include "bnwall/linalg.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace bnwall {

namespace {

bool same_parity(int x, int y) { return (x - y) % 2 == 0; }

std::set<SupportInterval> supports_by_rule(const StringClass& c, bool ends_share_parity_with_a) {
  if (c.kind != StringClass::Kind::Interval)
    throw std::invalid_argument("thin supports are defined for interval classes only");
  // A support is closed iff neither endpoint has an arrow leaving the
  // interval, i.e. each endpoint is a sink (for quotients: a source) or an end of [a, b].
  auto closed_end = [&](int v) { return same_parity(v, c.a) == ends_share_parity_with_a; };
  std::set<SupportInterval> out;
  for (int lo = c.a; lo <= c.b; ++lo)
    for (int hi = lo; hi <= c.b; ++hi)
      if ((lo == c.a || closed_end(lo)) && (hi == c.b || closed_end(hi)))
        out.insert({lo, hi});
  return out;
}

}  // namespace

std::set<SupportInterval> thin_subobject_supports(const StringClass& c) {
  return supports_by_rule(c, c.eta == -1);
}

std::set<SupportInterval> thin_quotient_supports(const StringClass& c) {
  return supports_by_rule(c, c.eta == 1);
}

DimVector indicator(const SupportInterval& s, int n) {
  DimVector d{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  for (int i = s.lo; i <= s.hi; ++i) d.entries[i] = 1;
  return d;
}

bool has_interval_support(const DimVector& d) {
  int first = -1;
  int last = -1;
  for (int i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (first < 0) first = i;
    last = i;
  }
  if (first < 0) return false;
  for (int i = first; i <= last; ++i)
    if (d[i] == 0) return false;
  return true;
}

namespace {

// ---- F2 search ---------------------------------------------------------
//
// A vector in F2^d (d <= 2) is a bit pattern 0..3; a subspace is the bitmask
// of its elements.

constexpr std::uint8_t kSubspaces[3][5] = {
    {0b0001},
    {0b0001, 0b0011},
    {0b0001, 0b0011, 0b0101, 0b1001, 0b1111},
};
constexpr int kSubspaceCount[3] = {1, 2, 5};

int subspace_dim(std::uint8_t mask) { return std::countr_zero(static_cast<unsigned>(std::popcount(mask))); }

struct F2Map {
  int source;
  int target;
  // image[e] = matrix applied to element e of F2^{dim source}
  std::uint8_t image[4] = {0, 0, 0, 0};
};

struct F2Problem {
  int vertices = 0;
  std::vector<int> dims;
  std::vector<F2Map> maps;
  std::uint64_t tuple_count = 1;
};

int to_f2(const Rational& x) {
  if (mpz_even_p(x.get_den_mpz_t())) throw std::domain_error("subobject oracle: entry not defined over F2");
  return mpz_odd_p(x.get_num_mpz_t()) ? 1 : 0;
}

F2Problem make_problem(const Representation& rep) {
  F2Problem p;
  p.vertices = rep.dims.size();
  p.dims = rep.dims.entries;
  for (int d : p.dims) {
    if (d > 2) throw std::domain_error("subobject oracle: vertex dimension above 2");
    p.tuple_count *= static_cast<std::uint64_t>(kSubspaceCount[d]);
  }
  for (int i = 0; i < rep.n; ++i) {
    for (Arrow a : {alpha(i), beta(i)}) {
      const Matrix& m = rep.map(a);
      if (m.is_zero()) continue;
      F2Map f{a.source(), a.target()};
      for (int e = 0; e < (1 << m.cols); ++e) {
        int out = 0;
        for (int r = 0; r < m.rows; ++r) {
          int bit = 0;
          for (int c = 0; c < m.cols; ++c) bit ^= to_f2(m.at(r, c)) & ((e >> c) & 1);
          out |= bit << r;
        }
        f.image[e] = static_cast<std::uint8_t>(out);
      }
      p.maps.push_back(f);
    }
  }
  return p;
}

void decode(const F2Problem& p, std::uint64_t index, std::vector<std::uint8_t>& masks) {
  for (int v = 0; v < p.vertices; ++v) {
    const int d = p.dims[v];
    masks[v] = kSubspaces[d][index % kSubspaceCount[d]];
    index /= kSubspaceCount[d];
  }
}

bool closed(const F2Problem& p, const std::vector<std::uint8_t>& masks) {
  for (const F2Map& f : p.maps) {
    const std::uint8_t src = masks[f.source];
    const std::uint8_t dst = masks[f.target];
    for (int e = 0; e < 4; ++e)
      if (((src >> e) & 1) && !((dst >> f.image[e]) & 1)) return false;
  }
  return true;
}

// Returns false for the zero and full subrepresentations.
bool proper_dims(const F2Problem& p, const std::vector<std::uint8_t>& masks, DimVector& out) {
  out.entries.assign(static_cast<std::size_t>(p.vertices), 0);
  bool nonzero = false;
  bool full = true;
  for (int v = 0; v < p.vertices; ++v) {
    out.entries[v] = subspace_dim(masks[v]);
    nonzero |= out.entries[v] > 0;
    full &= out.entries[v] == p.dims[v];
  }
  return nonzero && !full;
}

std::set<DimVector> f2_parallel(const Representation& rep) {
  const F2Problem p = make_problem(rep);
  std::set<DimVector> result;
#pragma omp parallel
  {
    std::set<DimVector> local;
    std::vector<std::uint8_t> masks(static_cast<std::size_t>(p.vertices));
    DimVector d;
#pragma omp for schedule(static) nowait
    for (std::uint64_t idx = 0; idx < p.tuple_count; ++idx) {
      decode(p, idx, masks);
      if (closed(p, masks) && proper_dims(p, masks, d)) local.insert(d);
    }
#pragma omp critical(bnwall_subobject_merge)
    result.merge(local);
  }
  return result;
}

// ---- rational sampling -------------------------------------------------

using Basis = std::vector<RatVec>;

std::vector<Basis> rational_subspaces(int d, const OracleOptions& opts, std::mt19937& rng) {
  std::vector<Basis> out;
  out.push_back({});
  if (d == 0) return out;
  if (d == 2) {
    std::vector<RatVec> lines = {{1, 0}, {0, 1}, {1, 1}};
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int s = 0; s < opts.samples; ++s) {
      int x = coef(rng);
      int y = coef(rng);
      if (x == 0 && y == 0) continue;
      lines.push_back({Rational(x), Rational(y)});
    }
    for (auto& l : lines) out.push_back({l});
  }
  Basis whole;
  for (int i = 0; i < d; ++i) whole.push_back(unit_vector(d, i));
  out.push_back(whole);
  return out;
}

bool image_inside(const Matrix& m, const Basis& src, const Basis& dst) {
  const int r0 = linalg::rank(dst, m.rows);
  for (const RatVec& u : src) {
    RatVec img = zeros(m.rows);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) img[r] += m.at(r, c) * u[c];
    if (linalg::is_zero(img)) continue;
    Basis ext = dst;
    ext.push_back(img);
    if (linalg::rank(ext, m.rows) != r0) return false;
  }
  return true;
}

std::set<DimVector> rational_sampled(const Representation& rep, const OracleOptions& opts) {
  std::mt19937 rng(opts.seed);
  const int nv = rep.dims.size();
  std::vector<std::vector<Basis>> choices;
  for (int v = 0; v < nv; ++v) {
    if (rep.dims[v] > 2) throw std::domain_error("subobject oracle: vertex dimension above 2");
    choices.push_back(rational_subspaces(rep.dims[v], opts, rng));
  }
  std::set<DimVector> result;
  std::vector<std::size_t> idx(static_cast<std::size_t>(nv), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < rep.n && ok; ++i) {
      for (Arrow a : {alpha(i), beta(i)}) {
        if (!image_inside(rep.map(a), choices[a.source()][idx[a.source()]], choices[a.target()][idx[a.target()]])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      DimVector d{std::vector<int>(static_cast<std::size_t>(nv), 0)};
      for (int v = 0; v < nv; ++v) d.entries[v] = static_cast<int>(choices[v][idx[v]].size());
      if (!d.is_zero() && d != rep.dims) result.insert(d);
    }
    int v = 0;
    while (v < nv && ++idx[v] == choices[v].size()) idx[v++] = 0;
    if (v == nv) break;
  }
  return result;
}

}  // namespace

std::set<DimVector> subobject_dimvectors(const Representation& rep, const OracleOptions& opts) {
  if (opts.field == Field::RationalSampled) return rational_sampled(rep, opts);
  return f2_parallel(rep);
}

std::set<DimVector> quotient_dimvectors(const Representation& rep, const OracleOptions& opts) {
  std::set<DimVector> out;
  for (const auto& d : subobject_dimvectors(rep, opts)) out.insert(rep.dims - d);
  return out;
}

namespace serial {

std::set<DimVector> subobject_dimvectors(const Representation& rep) {
  const F2Problem p = make_problem(rep);
  std::set<DimVector> result;
  std::vector<std::uint8_t> masks(static_cast<std::size_t>(p.vertices));
  DimVector d;
  for (std::uint64_t idx = 0; idx < p.tuple_count; ++idx) {
    decode(p, idx, masks);
    if (closed(p, masks) && proper_dims(p, masks, d)) result.insert(d);
  }
  return result;
}

}  // namespace serial

}  // namespace bnwall
