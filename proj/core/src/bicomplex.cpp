#include "gres/bicomplex.hpp"

#include "gres/errors.hpp"
#include "gres/subquotient.hpp"
#include "gres/tensor.hpp"

#include <functional>
#include <map>
#include <tuple>
#include <sstream>

namespace gres {

namespace {

std::size_t idx(int k, int lo) { return static_cast<std::size_t>(k - lo); }

ModuleMap sign_of(int p, const ModuleMap& f) { return p % 2 == 0 ? f : -f; }

/// A generating structure map by storage kind, level and index.
struct Generator {
  bool coface;
  int level;
  int index;
};

std::vector<Generator> generators(int n_max) {
  std::vector<Generator> out;
  for (int n = 0; n < n_max; ++n) {
    for (int i = 0; i <= n + 1; ++i) out.push_back({true, n, i});
    for (int j = 0; j <= n; ++j) out.push_back({false, n, j});
  }
  return out;
}

const ModuleMap& structure(const CosimplicialModule& x, const Generator& g) {
  return g.coface ? x.coface(g.level, g.index) : x.codegeneracy(g.level, g.index);
}

/// Levels a -> b joined by the generator in the given orientation.
std::pair<int, int> ends(const Generator& g, Orientation o) {
  const bool up = g.coface == (o == Orientation::cosimplicial);
  return up ? std::pair{g.level, g.level + 1} : std::pair{g.level + 1, g.level};
}

CosimplicialModule rebuild(const CosimplicialModule& shape, std::vector<FgModule> levels,
                           const std::function<ModuleMap(const Generator&)>& map) {
  std::vector<std::vector<ModuleMap>> cof, cod;
  for (int n = 0; n < shape.n_max(); ++n) {
    cof.emplace_back();
    cod.emplace_back();
    for (int i = 0; i <= n + 1; ++i) cof.back().push_back(map({true, n, i}));
    for (int j = 0; j <= n; ++j) cod.back().push_back(map({false, n, j}));
  }
  return CosimplicialModule::trusted(shape.orientation(), shape.ring(), std::move(levels), std::move(cof),
                                     std::move(cod));
}

}  // namespace

Bicomplex::Bicomplex(BaseRing ring, int p_lo, int q_lo, std::vector<std::vector<FgModule>> entries,
                     std::vector<std::vector<ModuleMap>> horizontal, std::vector<std::vector<ModuleMap>> vertical)
    : ring_(std::move(ring)),
      p_lo_(p_lo),
      q_lo_(q_lo),
      entries_(std::move(entries)),
      horizontal_(std::move(horizontal)),
      vertical_(std::move(vertical)),
      zero_(FgModule::zero(ring_)) {
  const std::size_t rows = entries_.size();
  const std::size_t cols = rows ? entries_.front().size() : 0;
  for (const auto& r : entries_)
    if (r.size() != cols) throw InvariantViolation("bicomplex entries are not rectangular");
  if (horizontal_.size() != (rows ? rows - 1 : 0)) throw InvariantViolation("bicomplex: wrong number of horizontal maps");
  for (const auto& r : horizontal_)
    if (r.size() != cols) throw InvariantViolation("bicomplex: wrong number of horizontal maps");
  if (vertical_.size() != rows) throw InvariantViolation("bicomplex: wrong number of vertical maps");
  for (const auto& r : vertical_)
    if (r.size() != (cols ? cols - 1 : 0)) throw InvariantViolation("bicomplex: wrong number of vertical maps");
  for (int p = p_lo_; p <= p_hi(); ++p)
    for (int q = q_lo_; q <= q_hi(); ++q) {
      const std::string at = " at (" + std::to_string(p) + ", " + std::to_string(q) + ")";
      if (p < p_hi()) {
        const ModuleMap& h = horizontal_[idx(p, p_lo_)][idx(q, q_lo_)];
        if (!(h.domain() == entry(p, q)) || !(h.codomain() == entry(p + 1, q)))
          throw InvariantViolation("bicomplex: horizontal map has the wrong shape" + at);
      }
      if (q < q_hi()) {
        const ModuleMap& v = vertical_[idx(p, p_lo_)][idx(q, q_lo_)];
        if (!(v.domain() == entry(p, q)) || !(v.codomain() == entry(p, q + 1)))
          throw InvariantViolation("bicomplex: vertical map has the wrong shape" + at);
      }
    }
  for (int p = p_lo_; p <= p_hi(); ++p)
    for (int q = q_lo_; q <= q_hi(); ++q) {
      const std::string at = " at (" + std::to_string(p) + ", " + std::to_string(q) + ")";
      if (!(this->horizontal(p + 1, q) * this->horizontal(p, q)).is_zero()) throw InvariantViolation("bicomplex: hh != 0" + at);
      if (!(this->vertical(p, q + 1) * this->vertical(p, q)).is_zero()) throw InvariantViolation("bicomplex: vv != 0" + at);
      if (!(this->horizontal(p, q + 1) * this->vertical(p, q) + this->vertical(p + 1, q) * this->horizontal(p, q)).is_zero())
        throw InvariantViolation("bicomplex: hv + vh != 0" + at);
    }
}

const FgModule& Bicomplex::entry(int p, int q) const {
  return inside(p, q) ? entries_[idx(p, p_lo_)][idx(q, q_lo_)] : zero_;
}

ModuleMap Bicomplex::horizontal(int p, int q) const {
  if (inside(p, q) && p < p_hi()) return horizontal_[idx(p, p_lo_)][idx(q, q_lo_)];
  return ModuleMap::zero(entry(p, q), entry(p + 1, q));
}

ModuleMap Bicomplex::vertical(int p, int q) const {
  if (inside(p, q) && q < q_hi()) return vertical_[idx(p, p_lo_)][idx(q, q_lo_)];
  return ModuleMap::zero(entry(p, q), entry(p, q + 1));
}

std::string Bicomplex::str() const {
  std::ostringstream os;
  for (int q = q_hi(); q >= q_lo_; --q) {
    os << "q=" << q << ":";
    for (int p = p_lo_; p <= p_hi(); ++p) os << " " << entry(p, q).str();
    os << "\n";
  }
  return os.str();
}

TotalComplex total_complex(const Bicomplex& b) {
  const int lo = b.p_lo() + b.q_lo(), hi = b.p_hi() + b.q_hi();
  TotalComplex out;
  std::vector<FgModule> terms;
  std::vector<std::vector<std::size_t>> offsets;  // per degree, per p
  for (int n = lo; n <= hi; ++n) {
    std::vector<Integer> orders;
    std::vector<int> filt;
    std::vector<std::size_t> off;
    for (int p = b.p_lo(); p <= b.p_hi(); ++p) {
      off.push_back(orders.size());
      const FgModule& e = b.entry(p, n - p);
      orders.insert(orders.end(), e.orders().begin(), e.orders().end());
      filt.insert(filt.end(), e.ngens(), p);
    }
    terms.emplace_back(b.ring(), std::move(orders));
    out.filtration.push_back(std::move(filt));
    offsets.push_back(std::move(off));
  }
  std::vector<ModuleMap> diffs;
  for (int n = lo; n < hi; ++n) {
    const auto un = idx(n, lo);
    Matrix d(terms[un + 1].ngens(), terms[un].ngens());
    for (int p = b.p_lo(); p <= b.p_hi(); ++p) {
      const int q = n - p;
      const std::size_t col = offsets[un][idx(p, b.p_lo())];
      d.set_block(offsets[un + 1][idx(p, b.p_lo())], col, b.vertical(p, q).matrix());
      if (p < b.p_hi()) d.set_block(offsets[un + 1][idx(p + 1, b.p_lo())], col, b.horizontal(p, q).matrix());
    }
    diffs.emplace_back(terms[un], terms[un + 1], std::move(d));
  }
  if (terms.empty()) terms.push_back(FgModule::zero(b.ring()));
  out.complex = CochainComplex(b.ring(), lo, std::move(terms), std::move(diffs));
  return out;
}

BicosimplicialModule::BicosimplicialModule(std::vector<CosimplicialModule> rows, std::vector<CosimplicialModule> columns)
    : rows_(std::move(rows)), columns_(std::move(columns)) {
  check_shapes();
  check_identities();
}

BicosimplicialModule BicosimplicialModule::trusted(std::vector<CosimplicialModule> rows,
                                                   std::vector<CosimplicialModule> columns) {
  BicosimplicialModule x;
  x.rows_ = std::move(rows);
  x.columns_ = std::move(columns);
  x.check_shapes();
  return x;
}

void BicosimplicialModule::check_shapes() const {
  if (rows_.empty() || columns_.empty()) throw InvariantViolation("bicosimplicial module needs level (0, 0)");
  for (const auto& r : rows_)
    if (r.n_max() != m_max() || r.orientation() != horizontal_orientation())
      throw InvariantViolation("bicosimplicial rows disagree in truncation or orientation");
  for (const auto& c : columns_)
    if (c.n_max() != n_max() || c.orientation() != vertical_orientation())
      throw InvariantViolation("bicosimplicial columns disagree in truncation or orientation");
  for (int m = 0; m <= m_max(); ++m)
    for (int n = 0; n <= n_max(); ++n)
      if (!(row(n).level(m) == column(m).level(n)))
        throw InvariantViolation("bicosimplicial level (" + std::to_string(m) + ", " + std::to_string(n) +
                                 ") differs between its row and column");
}

void BicosimplicialModule::check_identities() const {
  for (const auto& r : rows_) r.check_identities();
  for (const auto& c : columns_) c.check_identities();
  for (const auto& h : generators(m_max()))
    for (const auto& v : generators(n_max())) {
      const auto [ms, mt] = ends(h, horizontal_orientation());
      const auto [ns, nt] = ends(v, vertical_orientation());
      const ModuleMap a = structure(column(mt), v) * structure(row(ns), h);
      const ModuleMap b = structure(row(nt), h) * structure(column(ms), v);
      if (!(a == b))
        throw InvariantViolation("bicosimplicial square at (" + std::to_string(ms) + ", " + std::to_string(ns) +
                                 ") does not commute");
    }
}

BicosimplicialModule denormalize(const Bicomplex& b, int m_max, int n_max, Orientation horizontal,
                                 Orientation vertical) {
  const BaseRing& ring = b.ring();
  // Columns with commuting vertical differentials.
  std::vector<CochainComplex> cols;
  std::vector<CosimplicialModule> vcols;
  for (int p = b.p_lo(); p <= b.p_hi(); ++p) {
    std::vector<FgModule> terms;
    std::vector<ModuleMap> diffs;
    for (int q = b.q_lo(); q <= b.q_hi(); ++q) {
      terms.push_back(b.entry(p, q));
      if (q < b.q_hi()) diffs.push_back(sign_of(p, b.vertical(p, q)));
    }
    cols.emplace_back(ring, b.q_lo(), std::move(terms), std::move(diffs));
    vcols.push_back(denormalize(cols.back(), n_max, vertical));
  }
  std::vector<std::vector<ModuleMap>> across;  // across[p][n]: level n of the denormalized h
  for (int p = b.p_lo(); p < b.p_hi(); ++p) {
    std::vector<ModuleMap> comps;
    for (int q = b.q_lo(); q <= b.q_hi(); ++q) comps.push_back(b.horizontal(p, q));
    const auto up = idx(p, b.p_lo());
    CochainMap h(cols[up], cols[up + 1], std::move(comps));
    across.push_back(denormalize_map(h, vcols[up], vcols[up + 1]).components);
  }
  // Row n is the horizontal denormalization of the complex of level-n modules.
  std::vector<CochainComplex> hrows;
  std::vector<CosimplicialModule> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<FgModule> terms;
    std::vector<ModuleMap> diffs;
    for (const auto& v : vcols) terms.push_back(v.level(n));
    for (const auto& a : across) diffs.push_back(a[static_cast<std::size_t>(n)]);
    hrows.emplace_back(ring, b.p_lo(), std::move(terms), std::move(diffs));
    rows.push_back(denormalize(hrows.back(), m_max, horizontal));
  }
  // A vertical structure map is a chain map between rows, denormalized horizontally.
  std::vector<std::vector<ModuleMap>> column_maps(static_cast<std::size_t>(m_max + 1));
  std::map<std::tuple<bool, int, int>, std::vector<ModuleMap>> by_generator;
  for (const auto& g : generators(n_max)) {
    const auto [a, c] = ends(g, vertical);
    std::vector<ModuleMap> comps;
    for (const auto& v : vcols) comps.push_back(structure(v, g));
    CochainMap f(hrows[static_cast<std::size_t>(a)], hrows[static_cast<std::size_t>(c)], std::move(comps));
    by_generator[{g.coface, g.level, g.index}] =
        denormalize_map(f, rows[static_cast<std::size_t>(a)], rows[static_cast<std::size_t>(c)]).components;
  }
  std::vector<CosimplicialModule> columns;
  const CosimplicialModule shape = CosimplicialModule::constant(FgModule::zero(ring), n_max, vertical);
  for (int m = 0; m <= m_max; ++m) {
    std::vector<FgModule> levels;
    for (const auto& r : rows) levels.push_back(r.level(m));
    columns.push_back(rebuild(shape, std::move(levels), [&](const Generator& g) {
      return by_generator.at({g.coface, g.level, g.index})[static_cast<std::size_t>(m)];
    }));
  }
  return BicosimplicialModule::trusted(std::move(rows), std::move(columns));
}

Bicomplex normalize(const BicosimplicialModule& x) {
  const bool vs = x.vertical_orientation() == Orientation::simplicial;
  std::vector<Normalization> nv;
  for (int m = 0; m <= x.m_max(); ++m) nv.push_back(normalization(x.column(m)));
  const CochainComplex& shape_v = nv.front().complex;
  const int q_lo = shape_v.lo(), q_hi = shape_v.hi();
  auto vlevel = [&](int q) { return static_cast<std::size_t>(vs ? -q : q); };
  // For each vertical degree, the horizontal object of vertically normalized pieces.
  std::vector<Normalization> nh;
  for (int q = q_lo; q <= q_hi; ++q) {
    const int lvl = static_cast<int>(vlevel(q));
    std::vector<FgModule> levels;
    for (const auto& n : nv) levels.push_back(n.complex.term(q));
    const CosimplicialModule& row = x.row(lvl);
    CosimplicialModule y = rebuild(row, levels, [&](const Generator& g) {
      const auto [a, c] = ends(g, row.orientation());
      const ModuleMap& ia = nv[static_cast<std::size_t>(a)].inclusions[vlevel(q)];
      const ModuleMap& ic = nv[static_cast<std::size_t>(c)].inclusions[vlevel(q)];
      auto r = lift_columns(ic, structure(row, g) * ia);
      if (!r) throw InvariantViolation("horizontal map does not preserve the vertical normalization");
      return *r;
    });
    nh.push_back(normalization(y));
  }
  const bool hs = x.horizontal_orientation() == Orientation::simplicial;
  const CochainComplex& shape_h = nh.front().complex;
  const int p_lo = shape_h.lo(), p_hi = shape_h.hi();
  auto hlevel = [&](int p) { return static_cast<std::size_t>(hs ? -p : p); };
  std::vector<std::vector<FgModule>> entries;
  std::vector<std::vector<ModuleMap>> horizontal, vertical;
  for (int p = p_lo; p <= p_hi; ++p) {
    entries.emplace_back();
    if (p < p_hi) horizontal.emplace_back();
    vertical.emplace_back();
    for (int q = q_lo; q <= q_hi; ++q) {
      const Normalization& row = nh[idx(q, q_lo)];
      entries.back().push_back(row.complex.term(p));
      if (p < p_hi) horizontal.back().push_back(row.complex.differential(p));
      if (q < q_hi) {
        // Restrict the vertical differential of column p to the doubly normalized pieces.
        const Normalization& col = nv[hlevel(p)];
        const ModuleMap& from = row.inclusions[hlevel(p)];
        const ModuleMap& to = nh[idx(q + 1, q_lo)].inclusions[hlevel(p)];
        auto r = lift_columns(to, col.complex.differential(q) * from);
        if (!r) throw InvariantViolation("vertical differential leaves the normalized bicomplex");
        vertical.back().push_back(sign_of(p, *r));
      }
    }
  }
  return Bicomplex(x.ring(), p_lo, q_lo, std::move(entries), std::move(horizontal), std::move(vertical));
}

CosimplicialModule diagonal(const BicosimplicialModule& x) {
  if (x.horizontal_orientation() != x.vertical_orientation())
    throw DomainError("diagonal needs both directions with the same orientation");
  const bool simp = x.horizontal_orientation() == Orientation::simplicial;
  const int top = std::min(x.m_max(), x.n_max());
  std::vector<FgModule> levels;
  for (int n = 0; n <= top; ++n) levels.push_back(x.level(n, n));
  std::vector<std::vector<ModuleMap>> cof, cod;
  for (int n = 0; n < top; ++n) {
    cof.emplace_back();
    cod.emplace_back();
    for (int i = 0; i <= n + 1; ++i)
      cof.back().push_back(simp ? x.column(n).coface(n, i) * x.row(n + 1).coface(n, i)
                                : x.column(n + 1).coface(n, i) * x.row(n).coface(n, i));
    for (int j = 0; j <= n; ++j)
      cod.back().push_back(simp ? x.column(n + 1).codegeneracy(n, j) * x.row(n).codegeneracy(n, j)
                                : x.column(n).codegeneracy(n, j) * x.row(n + 1).codegeneracy(n, j));
  }
  return CosimplicialModule::trusted(x.horizontal_orientation(), x.ring(), std::move(levels), std::move(cof),
                                     std::move(cod));
}

BicosimplicialModule external_tensor(const CosimplicialModule& x, const CosimplicialModule& y) {
  std::vector<CosimplicialModule> rows, columns;
  for (int n = 0; n <= y.n_max(); ++n) {
    const FgModule& yn = y.level(n);
    std::vector<FgModule> levels;
    for (int m = 0; m <= x.n_max(); ++m) levels.push_back(TensorProduct(x.level(m), yn).module());
    rows.push_back(rebuild(x, std::move(levels), [&](const Generator& g) {
      const ModuleMap& f = structure(x, g);
      return tensor_map(TensorProduct(f.domain(), yn), TensorProduct(f.codomain(), yn), f, ModuleMap::identity(yn));
    }));
  }
  for (int m = 0; m <= x.n_max(); ++m) {
    const FgModule& xm = x.level(m);
    std::vector<FgModule> levels;
    for (int n = 0; n <= y.n_max(); ++n) levels.push_back(TensorProduct(xm, y.level(n)).module());
    columns.push_back(rebuild(y, std::move(levels), [&](const Generator& g) {
      const ModuleMap& f = structure(y, g);
      return tensor_map(TensorProduct(xm, f.domain()), TensorProduct(xm, f.codomain()), ModuleMap::identity(xm), f);
    }));
  }
  return BicosimplicialModule::trusted(std::move(rows), std::move(columns));
}

BicosimplicialModule vertically_constant(const CosimplicialModule& x, int n_max, Orientation vertical) {
  std::vector<CosimplicialModule> rows(static_cast<std::size_t>(n_max + 1), x), columns;
  for (int m = 0; m <= x.n_max(); ++m) columns.push_back(CosimplicialModule::constant(x.level(m), n_max, vertical));
  return BicosimplicialModule::trusted(std::move(rows), std::move(columns));
}

EzReport ez_compare(const BicosimplicialModule& x, int degree_bound) {
  if (degree_bound < 0) throw DomainError("negative degree bound");
  if (x.m_max() < degree_bound + 1 || x.n_max() < degree_bound + 1)
    throw DegreeOutOfRange("Eilenberg-Zilber comparison up to degree " + std::to_string(degree_bound) +
                           " needs truncations of at least " + std::to_string(degree_bound + 1));
  const bool simp = x.horizontal_orientation() == Orientation::simplicial;
  CochainComplex diag = normalize(diagonal(x));
  // Tot is exact only up to the smaller truncation.
  const int top = std::min(x.m_max(), x.n_max());
  CochainComplex tot = total_complex(normalize(x)).complex;
  tot = simp ? CochainComplex(tot).with_open_bottom() : tot.truncated(top);
  EzReport r;
  r.iso = true;
  for (int s = 0; s <= degree_bound; ++s) {
    const int deg = simp ? -s : s;
    r.diagonal.push_back(diag.cohomology(deg));
    r.total.push_back(tot.cohomology(deg));
    r.iso = r.iso && r.diagonal.back().isomorphic(r.total.back());
  }
  return r;
}

}  // namespace gres
