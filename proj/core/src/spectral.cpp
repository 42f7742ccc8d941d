#include "gres/spectral.hpp"

#include "gres/errors.hpp"
#include "gres/subquotient.hpp"

#include <algorithm>
#include <sstream>

namespace gres {

namespace {

/// Generators of T^n with filtration degree in [from, to).
std::vector<std::size_t> band(const FilteredComplex& c, int n, int from, int to) {
  std::vector<std::size_t> out;
  const auto& f = c.filtration[static_cast<std::size_t>(n - c.complex.lo())];
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] >= from && f[k] < to) out.push_back(k);
  return out;
}

FgModule restrict_module(const FgModule& m, const std::vector<std::size_t>& gens) {
  std::vector<Integer> orders;
  for (auto k : gens) orders.push_back(m.orders()[k]);
  return FgModule(m.ring(), std::move(orders));
}

/// Coordinate inclusion of a span of generators.
ModuleMap span_inclusion(const FgModule& m, const std::vector<std::size_t>& gens) {
  FgModule sub = restrict_module(m, gens);
  Matrix a(m.ngens(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) a(gens[j], j) = 1;
  return ModuleMap(sub, m, std::move(a));
}

/// Coordinate projection onto a span of generators.
ModuleMap span_projection(const FgModule& m, const std::vector<std::size_t>& gens) {
  FgModule sub = restrict_module(m, gens);
  Matrix a(gens.size(), m.ngens());
  for (std::size_t i = 0; i < gens.size(); ++i) a(i, gens[i]) = 1;
  return ModuleMap(m, sub, std::move(a));
}

ModuleMap hcat(const FgModule& target, const std::vector<ModuleMap>& maps) {
  std::vector<Integer> orders;
  std::size_t cols = 0;
  for (const auto& f : maps) {
    orders.insert(orders.end(), f.domain().orders().begin(), f.domain().orders().end());
    cols += f.domain().ngens();
  }
  Integer den = 1;
  for (const auto& f : maps) den = lcm(den, f.denominator());
  Matrix a(target.ngens(), cols);
  std::size_t at = 0;
  for (const auto& f : maps) {
    Matrix part = f.matrix();
    if (f.denominator() != den) {
      const std::vector<Integer> scale(part.cols(), den / f.denominator());
      part = part * Matrix::diagonal(scale);
    }
    a.set_block(0, at, part);
    at += f.domain().ngens();
  }
  return ModuleMap(FgModule(target.ring(), std::move(orders)), target, std::move(a), den);
}

class Engine {
 public:
  explicit Engine(const FilteredComplex& c) : c_(c) {
    p_min_ = 0;
    p_max_ = -1;
    bool any = false;
    for (const auto& f : c.filtration)
      for (int p : f) {
        p_min_ = any ? std::min(p_min_, p) : p;
        p_max_ = any ? std::max(p_max_, p) : p;
        any = true;
      }
  }

  int p_min() const { return p_min_; }
  int p_max() const { return p_max_; }
  int width() const { return p_max_ - p_min_ + 1; }
  const CochainComplex& tot() const { return c_.complex; }

  ModuleMap d(int n) const { return tot().differential(n); }

  /// Z_r^{p,n} = {x in F^p T^n : dx in F^{p+r}}, as an injective map into T^n.
  ModuleMap z(int r, int p, int n) const {
    const FgModule& t = tot().term(n);
    if (n < tot().lo() || n > tot().hi()) return ModuleMap::zero(FgModule::zero(tot().ring()), t);
    ModuleMap incl = span_inclusion(t, band(c_, n, p, p_max_ + 1));
    if (n == tot().hi()) return incl;
    const FgModule& next = tot().term(n + 1);
    ModuleMap below = span_projection(next, band(c_, n + 1, p_min_, p + r));
    return incl * kernel(below * d(n) * incl).inclusion;
  }

  struct Entry {
    FgModule module;
    ModuleMap cycles;      // Z -> T^n
    ModuleMap projection;  // Z -> E
    ModuleMap reps;        // free -> Z, lifting the generators of E
  };

  Entry entry(int r, int p, int n) const {
    ModuleMap zr = z(r, p, n);
    const FgModule& t = tot().term(n);
    std::vector<ModuleMap> denominators{z(r - 1, p + 1, n)};
    if (n > tot().lo()) denominators.push_back(d(n - 1) * z(r - 1, p - r + 1, n - 1));
    ModuleMap gens = hcat(t, denominators);
    auto lifted = lift_columns(zr, gens);
    if (!lifted) throw InvariantViolation("spectral sequence: boundaries are not cycles");
    CokernelResult q = cokernel(*lifted);
    const FgModule free = FgModule::free(tot().ring(), q.module.ngens());
    auto reps = lift_columns(q.projection, ModuleMap(free, q.module, Matrix::identity(q.module.ngens())));
    if (!reps) throw InvariantViolation("spectral sequence: cannot lift page generators");
    return {q.module, zr, q.projection, *reps};
  }

  ModuleMap differential(const Entry& from, const Entry& to, int n) const {
    if (n >= tot().hi()) return ModuleMap::zero(from.module, to.module);
    ModuleMap image = d(n) * from.cycles * from.reps;
    auto lifted = lift_columns(to.cycles, image);
    if (!lifted) throw InvariantViolation("spectral sequence: d_r leaves the cycles");
    ModuleMap m = to.projection * *lifted;
    return ModuleMap(from.module, to.module, m.matrix(), m.denominator());
  }

 private:
  const FilteredComplex& c_;
  int p_min_ = 0, p_max_ = -1;
};

SpectralPage make_page(const Engine& e, int r) {
  SpectralPage page;
  page.r = r;
  page.ring = e.tot().ring();
  std::map<std::pair<int, int>, Engine::Entry> cache;
  auto get = [&](int p, int n) -> const Engine::Entry& {
    auto it = cache.find({p, n});
    if (it == cache.end()) it = cache.emplace(std::pair{p, n}, e.entry(r, p, n)).first;
    return it->second;
  };
  for (int n = e.tot().lo(); n <= e.tot().hi(); ++n)
    for (int p = e.p_min(); p <= e.p_max(); ++p) {
      const Engine::Entry& from = get(p, n);
      page.entries.emplace(std::pair{p, p - n}, from.module);
      if (p + r <= e.p_max() && n + 1 <= e.tot().hi())
        page.differentials.emplace(std::pair{p, p - n}, e.differential(from, get(p + r, n + 1), n));
    }
  return page;
}

bool all_zero(const SpectralPage& p) {
  for (const auto& [k, d] : p.differentials)
    if (!d.is_zero()) return false;
  return true;
}

std::size_t free_rank(const FgModule& m) {
  std::size_t k = 0;
  for (const auto& o : m.canonical_form())
    if (o == 0) ++k;
  return k;
}

AbutmentReport abut(const FilteredComplex& c, const Engine& e, const SpectralPage& inf, int n) {
  const CochainComplex& tot = c.complex;
  AbutmentReport rep;
  rep.degree = -n;
  Homology h = Homology::cycles_mod(tot.term(n), n > tot.lo() ? std::optional(tot.differential(n - 1)) : std::nullopt,
                                    n < tot.hi() ? std::optional(tot.differential(n)) : std::nullopt);
  rep.homology = h.module();
  // F^pH is the image of the homology of the subcomplex F^p.
  auto filtered_image = [&](int p) {
    auto sub = [&](int k) { return span_inclusion(tot.term(k), band(c, k, p, e.p_max() + 1)); };
    ModuleMap in = sub(n);
    std::optional<ModuleMap> incoming, outgoing;
    if (n > tot.lo()) {
      ModuleMap from = sub(n - 1);
      incoming = *lift_columns(in, tot.differential(n - 1) * from);
    }
    if (n < tot.hi()) {
      ModuleMap to = sub(n + 1);
      outgoing = *lift_columns(to, tot.differential(n) * in);
    }
    Homology hp = Homology::cycles_mod(in.domain(), incoming, outgoing);
    return image(induced_on_homology(hp, h, in)).inclusion;
  };
  std::vector<ModuleMap> filt;
  for (int p = e.p_min(); p <= e.p_max() + 1; ++p) filt.push_back(filtered_image(p));
  rep.graded_match = true;
  std::vector<Integer> sum_orders;
  std::size_t ranks = 0;
  Integer torsion = 1;
  bool finite = true;
  for (int p = e.p_min(); p <= e.p_max(); ++p) {
    const auto k = static_cast<std::size_t>(p - e.p_min());
    auto lifted = lift_columns(filt[k], filt[k + 1]);
    if (!lifted) throw InvariantViolation("spectral sequence: filtration of H is not decreasing");
    FgModule gr = cokernel(*lifted).module;
    rep.graded_match = rep.graded_match && gr.isomorphic(inf.entry(p, p - n));
    for (const auto& o : gr.canonical_form()) {
      sum_orders.push_back(o);
      if (o == 0)
        ++ranks;
      else
        torsion *= o;
    }
    finite = finite && gr.is_finite();
    rep.graded.emplace(p, std::move(gr));
  }
  const FgModule& hm = rep.homology;
  Integer h_torsion = 1;
  for (const auto& o : hm.canonical_form())
    if (o != 0) h_torsion *= o;
  rep.consistent = free_rank(hm) == ranks && (finite ? h_torsion == torsion : torsion % h_torsion == 0);
  FgModule assembled(tot.ring(), hm.ring().is_field() ? std::vector<Integer>(sum_orders.size(), tot.ring().free_order())
                                                      : sum_orders);
  rep.split = assembled.isomorphic(hm);
  return rep;
}

}  // namespace

FgModule SpectralPage::entry(int s, int t) const {
  auto it = entries.find({s, t});
  return it != entries.end() ? it->second : FgModule::zero(ring);
}

std::string SpectralPage::str() const {
  std::ostringstream os;
  os << "E_" << r << ":";
  for (const auto& [k, m] : entries)
    if (!m.is_zero()) os << " (" << k.first << "," << k.second << ")=" << m.str();
  return os.str();
}

SpectralSequence ss_pages(const FilteredComplex& c, int r_max) {
  if (r_max < 1) throw DomainError("spectral sequence needs r_max >= 1");
  if (!c.complex.bounded()) throw DomainError("spectral sequence input must be bounded");
  if (c.filtration.size() != c.complex.length()) throw InvariantViolation("filtration does not match the complex");
  for (int n = c.complex.lo(); n < c.complex.hi(); ++n) {
    const auto& src = c.filtration[static_cast<std::size_t>(n - c.complex.lo())];
    const auto& dst = c.filtration[static_cast<std::size_t>(n + 1 - c.complex.lo())];
    const ModuleMap dn = c.complex.differential(n);
    const Matrix& d = dn.matrix();
    for (std::size_t j = 0; j < src.size(); ++j)
      for (std::size_t i = 0; i < dst.size(); ++i)
        if (d(i, j) != 0 && dst[i] < src[j]) throw InvariantViolation("the differential lowers the filtration");
  }
  Engine e(c);
  SpectralSequence out;
  const int stable = std::max(r_max, e.width() + 1);
  std::vector<SpectralPage> all;
  for (int r = 1; r <= stable; ++r) all.push_back(make_page(e, r));
  out.stabilization = stable;
  while (out.stabilization > 1 && all_zero(all[static_cast<std::size_t>(out.stabilization - 2)])) --out.stabilization;
  out.e_inf = all.back();
  all.resize(static_cast<std::size_t>(r_max));
  out.pages = std::move(all);
  for (int n = c.complex.lo(); n <= c.complex.hi(); ++n) out.abutment.push_back(abut(c, e, out.e_inf, n));
  return out;
}

SpectralSequence ss_pages(const Bicomplex& b, int r_max) {
  // The simplicial direction is stored at q = -t, so the quadrant is p >= 0, q <= 0.
  if (b.p_lo() < 0 || b.q_hi() > 0) throw DomainError("spectral sequence input must lie in s >= 0, t >= 0");
  return ss_pages(total_complex(b), r_max);
}

SpectralSequence ss_pages(const BicosimplicialModule& x, int r_max) {
  if (x.horizontal_orientation() != Orientation::cosimplicial || x.vertical_orientation() != Orientation::simplicial)
    throw DomainError("spectral sequence input must be cosimplicial in s and simplicial in t");
  return ss_pages(normalize(x), r_max);
}

std::optional<std::string> check_page_transition(const SpectralPage& page, const SpectralPage& next) {
  const int r = page.r;
  for (const auto& [k, d] : page.differentials) {
    auto it = page.differentials.find({k.first + r, k.second + r - 1});
    if (it != page.differentials.end() && !(it->second * d).is_zero())
      return "d_" + std::to_string(r) + " d_" + std::to_string(r) + " != 0 at (" + std::to_string(k.first) + "," +
             std::to_string(k.second) + ")";
  }
  for (const auto& [k, m] : page.entries) {
    const auto [s, t] = k;
    std::optional<ModuleMap> in, out;
    if (auto it = page.differentials.find({s - r, t - r + 1}); it != page.differentials.end()) in = it->second;
    if (auto it = page.differentials.find({s, t}); it != page.differentials.end()) out = it->second;
    FgModule h = Homology::cycles_mod(m, in, out).module();
    if (!h.isomorphic(next.entry(s, t)))
      return "E_" + std::to_string(r + 1) + "(" + std::to_string(s) + "," + std::to_string(t) + ") = " +
             next.entry(s, t).str() + " but H(E_" + std::to_string(r) + ") = " + h.str();
  }
  return std::nullopt;
}

CosimplicialModule levelwise_homotopy(const BicosimplicialModule& x, int t) {
  if (x.vertical_orientation() != Orientation::simplicial) throw DomainError("levelwise homotopy needs simplicial columns");
  if (t < 0 || t >= x.n_max()) throw DegreeOutOfRange("pi_" + std::to_string(t) + " needs a longer vertical truncation");
  std::vector<CochainComplex> moore;
  std::vector<Homology> hs;
  for (int m = 0; m <= x.m_max(); ++m) {
    moore.push_back(moore_complex(x.column(m)));
    hs.push_back(moore.back().cohomology_data(-t));
  }
  std::vector<FgModule> levels;
  for (const auto& h : hs) levels.push_back(h.module());
  auto induced = [&](int from, int to, const ModuleMap& f) {
    return induced_on_homology(hs[static_cast<std::size_t>(from)], hs[static_cast<std::size_t>(to)], f);
  };
  const CosimplicialModule& row = x.row(t);
  std::vector<std::vector<ModuleMap>> cof, cod;
  for (int n = 0; n < x.m_max(); ++n) {
    cof.emplace_back();
    cod.emplace_back();
    for (int i = 0; i <= n + 1; ++i) cof.back().push_back(induced(n, n + 1, row.coface(n, i)));
    for (int j = 0; j <= n; ++j) cod.back().push_back(induced(n + 1, n, row.codegeneracy(n, j)));
  }
  return CosimplicialModule(Orientation::cosimplicial, x.ring(), std::move(levels), std::move(cof), std::move(cod));
}

}  // namespace gres
