#include "gres/cosimplicial.hpp"

#include "gres/enumerate.hpp"
#include "gres/errors.hpp"
#include "gres/hom.hpp"
#include "gres/subquotient.hpp"

#include <map>

namespace gres {

namespace {

std::string at(const char* what, int n, int i) {
  return std::string(what) + " (" + std::to_string(n) + ", " + std::to_string(i) + ")";
}

}  // namespace

CosimplicialModule CosimplicialModule::trusted(Orientation orientation, BaseRing ring, std::vector<FgModule> levels,
                                               std::vector<std::vector<ModuleMap>> cofaces,
                                               std::vector<std::vector<ModuleMap>> codegeneracies) {
  CosimplicialModule x;
  x.orientation_ = orientation;
  x.ring_ = std::move(ring);
  x.levels_ = std::move(levels);
  x.cofaces_ = std::move(cofaces);
  x.codegeneracies_ = std::move(codegeneracies);
  x.check_shapes();
  return x;
}

CosimplicialModule::CosimplicialModule(Orientation orientation, BaseRing ring, std::vector<FgModule> levels,
                                       std::vector<std::vector<ModuleMap>> cofaces,
                                       std::vector<std::vector<ModuleMap>> codegeneracies)
    : orientation_(orientation),
      ring_(std::move(ring)),
      levels_(std::move(levels)),
      cofaces_(std::move(cofaces)),
      codegeneracies_(std::move(codegeneracies)) {
  check_shapes();
  check_identities();
}

CosimplicialModule CosimplicialModule::constant(const FgModule& a, int n_max, Orientation orientation) {
  std::vector<FgModule> levels(static_cast<std::size_t>(n_max + 1), a);
  std::vector<std::vector<ModuleMap>> cof, cod;
  ModuleMap id = ModuleMap::identity(a);
  for (int n = 0; n < n_max; ++n) {
    cof.emplace_back(static_cast<std::size_t>(n + 2), id);
    cod.emplace_back(static_cast<std::size_t>(n + 1), id);
  }
  return trusted(orientation, a.ring(), std::move(levels), std::move(cof), std::move(cod));
}

void CosimplicialModule::check_shapes() const {
  if (levels_.empty()) throw InvariantViolation("cosimplicial module needs at least level 0");
  const std::size_t n_max = levels_.size() - 1;
  if (cofaces_.size() != n_max || codegeneracies_.size() != n_max)
    throw InvariantViolation("cosimplicial module: structure maps do not match the truncation");
  for (const auto& l : levels_)
    if (!(l.ring() == ring_)) throw InvariantViolation("cosimplicial module: level over a different ring");
  const bool simp = is_simplicial();
  for (std::size_t n = 0; n < n_max; ++n) {
    const FgModule& lo = levels_[n];
    const FgModule& hi = levels_[n + 1];
    if (cofaces_[n].size() != n + 2 || codegeneracies_[n].size() != n + 1)
      throw InvariantViolation("cosimplicial module: wrong number of structure maps at level " + std::to_string(n));
    for (const auto& d : cofaces_[n])
      if (!(d.domain() == (simp ? hi : lo)) || !(d.codomain() == (simp ? lo : hi)))
        throw InvariantViolation("cosimplicial module: coface of wrong shape at level " + std::to_string(n));
    for (const auto& s : codegeneracies_[n])
      if (!(s.domain() == (simp ? lo : hi)) || !(s.codomain() == (simp ? hi : lo)))
        throw InvariantViolation("cosimplicial module: codegeneracy of wrong shape at level " + std::to_string(n));
  }
}

const FgModule& CosimplicialModule::level(int n) const {
  if (n < 0 || n > n_max())
    throw DegreeOutOfRange("level " + std::to_string(n) + " outside truncation " + std::to_string(n_max()));
  return levels_[static_cast<std::size_t>(n)];
}

const ModuleMap& CosimplicialModule::coface(int n, int i) const {
  if (n < 0 || n >= n_max()) throw DegreeOutOfRange(at("coface", n, i) + " outside truncation");
  return cofaces_[static_cast<std::size_t>(n)].at(static_cast<std::size_t>(i));
}

const ModuleMap& CosimplicialModule::codegeneracy(int n, int j) const {
  if (n < 0 || n >= n_max()) throw DegreeOutOfRange(at("codegeneracy", n, j) + " outside truncation");
  return codegeneracies_[static_cast<std::size_t>(n)].at(static_cast<std::size_t>(j));
}

ModuleMap CosimplicialModule::compose(const ModuleMap& a, const ModuleMap& b) const {
  return is_simplicial() ? b * a : a * b;
}

ModuleMap CosimplicialModule::apply(const simplex::Monotone& theta) const {
  ModuleMap result = ModuleMap::identity(level(theta.source()));
  for (const auto& w : simplex::decompose(theta)) {
    const ModuleMap& g = w.kind == simplex::Word::Kind::coface ? coface(w.level - 1, w.index)
                                                                : codegeneracy(w.level, w.index);
    result = compose(g, result);
  }
  return result;
}

void CosimplicialModule::check_identities() const {
  const int top = n_max();
  for (int n = 0; n + 2 <= top; ++n) {
    for (int j = 1; j <= n + 2; ++j)
      for (int i = 0; i < j; ++i)
        if (!(compose(coface(n + 1, j), coface(n, i)) == compose(coface(n + 1, i), coface(n, j - 1))))
          throw InvariantViolation("cosimplicial identity d^j d^i = d^i d^(j-1) fails at " + at("level/i", n, i) +
                                   " j=" + std::to_string(j));
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!(compose(codegeneracy(n, j), codegeneracy(n + 1, i)) ==
              compose(codegeneracy(n, i), codegeneracy(n + 1, j + 1))))
          throw InvariantViolation("cosimplicial identity s^j s^i = s^i s^(j+1) fails at " + at("level/i", n, i) +
                                   " j=" + std::to_string(j));
  }
  for (int n = 0; n + 1 <= top; ++n) {
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        ModuleMap lhs = compose(codegeneracy(n, j), coface(n, i));
        ModuleMap rhs;
        if (i == j || i == j + 1)
          rhs = ModuleMap::identity(level(n));
        else if (i < j)
          rhs = compose(coface(n - 1, i), codegeneracy(n - 1, j - 1));
        else
          rhs = compose(coface(n - 1, i - 1), codegeneracy(n - 1, j));
        if (!(lhs == rhs))
          throw InvariantViolation("cosimplicial identity s^j d^i fails at " + at("level/i", n, i) +
                                   " j=" + std::to_string(j));
      }
  }
}

CosimplicialModule CosimplicialModule::truncated(int n) const {
  if (n < 0 || n > n_max()) throw DegreeOutOfRange("cannot truncate at " + std::to_string(n));
  auto count = static_cast<std::ptrdiff_t>(n);
  return trusted(orientation_, ring_, {levels_.begin(), levels_.begin() + count + 1},
                 {cofaces_.begin(), cofaces_.begin() + count}, {codegeneracies_.begin(), codegeneracies_.begin() + count});
}

CosimplicialMap::CosimplicialMap(CosimplicialModule src, CosimplicialModule tgt, std::vector<ModuleMap> comps)
    : source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
  if (source.orientation() != target.orientation() || source.n_max() != target.n_max() ||
      components.size() != static_cast<std::size_t>(source.n_max() + 1))
    throw InvariantViolation("cosimplicial map: source and target do not match");
  const bool simp = source.is_simplicial();
  auto f = [&](int n) -> const ModuleMap& { return components[static_cast<std::size_t>(n)]; };
  for (int n = 0; n <= source.n_max(); ++n)
    if (!(f(n).domain() == source.level(n)) || !(f(n).codomain() == target.level(n)))
      throw InvariantViolation("cosimplicial map: component of wrong shape at level " + std::to_string(n));
  for (int n = 0; n < source.n_max(); ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      bool ok = simp ? f(n) * source.coface(n, i) == target.coface(n, i) * f(n + 1)
                     : f(n + 1) * source.coface(n, i) == target.coface(n, i) * f(n);
      if (!ok) throw InvariantViolation("cosimplicial map does not commute with " + at("coface", n, i));
    }
    for (int j = 0; j <= n; ++j) {
      bool ok = simp ? f(n + 1) * source.codegeneracy(n, j) == target.codegeneracy(n, j) * f(n)
                     : f(n) * source.codegeneracy(n, j) == target.codegeneracy(n, j) * f(n + 1);
      if (!ok) throw InvariantViolation("cosimplicial map does not commute with " + at("codegeneracy", n, j));
    }
  }
}

CosimplicialMap CosimplicialMap::identity(const CosimplicialModule& x) {
  std::vector<ModuleMap> comps;
  for (int n = 0; n <= x.n_max(); ++n) comps.push_back(ModuleMap::identity(x.level(n)));
  return CosimplicialMap(x, x, std::move(comps));
}

Normalization normalization(const CosimplicialModule& x) {
  const BaseRing& ring = x.ring();
  const int top = x.n_max();
  Normalization out;
  std::vector<FgModule> terms;
  for (int n = 0; n <= top; ++n) {
    // Cosimplicial: kernels of s^j; simplicial: kernels of d_i for i >= 1.
    std::vector<ModuleMap> tests;
    if (!x.is_simplicial()) {
      for (int j = 0; j < n; ++j) tests.push_back(x.codegeneracy(n - 1, j));
    } else {
      for (int i = 1; i <= n; ++i) tests.push_back(x.face(n, i));
    }
    std::vector<FgModule> targets;
    for (const auto& t : tests) targets.push_back(t.codomain());
    KernelResult k = kernel(pair(x.level(n), tests, direct_sum(targets, ring)));
    out.inclusions.push_back(k.inclusion);
    terms.push_back(k.module);
  }
  std::vector<ModuleMap> diffs;
  for (int n = 0; n < top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (!x.is_simplicial()) {
      ModuleMap d = ModuleMap::zero(x.level(n), x.level(n + 1));
      for (int i = 0; i <= n + 1; ++i) d = (i % 2 == 0) ? d + x.coface(n, i) : d - x.coface(n, i);
      diffs.push_back(*lift_columns(out.inclusions[un + 1], d * out.inclusions[un]));
    } else {
      diffs.push_back(*lift_columns(out.inclusions[un], x.face(n + 1, 0) * out.inclusions[un + 1]));
    }
  }
  if (!x.is_simplicial()) {
    out.complex = CochainComplex(ring, 0, std::move(terms), std::move(diffs), false);
  } else {
    std::reverse(terms.begin(), terms.end());
    std::reverse(diffs.begin(), diffs.end());
    out.complex = CochainComplex(ring, -top, std::move(terms), std::move(diffs), true).with_open_bottom();
  }
  return out;
}

CochainMap normalize_map(const CosimplicialMap& f) {
  Normalization s = normalization(f.source);
  Normalization t = normalization(f.target);
  std::vector<ModuleMap> comps;
  for (int d = s.complex.lo(); d <= s.complex.hi(); ++d) {
    const int n = f.source.is_simplicial() ? -d : d;
    const auto un = static_cast<std::size_t>(n);
    comps.push_back(*lift_columns(t.inclusions[un], f.components[un] * s.inclusions[un]));
  }
  return CochainMap(s.complex, t.complex, std::move(comps));
}

CochainComplex moore_complex(const CosimplicialModule& x) {
  const int top = x.n_max();
  std::vector<FgModule> terms;
  std::vector<ModuleMap> diffs;
  for (int n = 0; n <= top; ++n) terms.push_back(x.level(n));
  for (int n = 0; n < top; ++n) {
    const bool simp = x.is_simplicial();
    ModuleMap d = simp ? ModuleMap::zero(x.level(n + 1), x.level(n)) : ModuleMap::zero(x.level(n), x.level(n + 1));
    for (int i = 0; i <= n + 1; ++i) d = (i % 2 == 0) ? d + x.coface(n, i) : d - x.coface(n, i);
    diffs.push_back(d);
  }
  if (!x.is_simplicial()) return CochainComplex(x.ring(), 0, std::move(terms), std::move(diffs), false);
  std::reverse(terms.begin(), terms.end());
  std::reverse(diffs.begin(), diffs.end());
  return CochainComplex(x.ring(), -top, std::move(terms), std::move(diffs), true).with_open_bottom();
}

FgModule cohomotopy(const CosimplicialModule& x, int s) {
  if (s < 0) return FgModule::zero(x.ring());
  if (s >= x.n_max())
    throw DegreeOutOfRange("cohomotopy in degree " + std::to_string(s) + " needs truncation at least " +
                           std::to_string(s + 1));
  CochainComplex n = normalize(x);
  return n.cohomology(x.is_simplicial() ? -s : s);
}

namespace {

/// Dold-Kan bookkeeping shared by denormalize and its maps.
struct DoldKanLevels {
  std::vector<std::vector<simplex::Monotone>> surj;
  std::vector<std::map<simplex::Monotone, std::size_t>> index;
  std::vector<DirectSum> sums;
};

/// C^k for a cosimplicial target, C_k = C^{-k} for a simplicial one.
int dk_degree(int k, bool simp) { return simp ? -k : k; }

DoldKanLevels dold_kan_levels(const CochainComplex& c, int n_max, bool simp) {
  DoldKanLevels d;
  for (int n = 0; n <= n_max; ++n) {
    d.surj.push_back(simplex::surjections(n));
    std::map<simplex::Monotone, std::size_t> idx;
    std::vector<FgModule> parts;
    for (std::size_t a = 0; a < d.surj.back().size(); ++a) {
      idx[d.surj.back()[a]] = a;
      parts.push_back(c.term(dk_degree(d.surj.back()[a].target, simp)));
    }
    d.index.push_back(std::move(idx));
    d.sums.push_back(direct_sum(parts, c.ring()));
  }
  return d;
}

ModuleMap dold_kan_structure(const CochainComplex& c, const DoldKanLevels& d, const simplex::Monotone& theta,
                             bool simp) {
  const int m = theta.source();
  const int n = theta.target;
  const auto um = static_cast<std::size_t>(m);
  const auto un = static_cast<std::size_t>(n);
  std::vector<Block> blocks;
  for (std::size_t a = 0; a < d.surj[un].size(); ++a) {
    const simplex::Monotone& sigma = d.surj[un][a];
    simplex::EpiMono f = simplex::factor(simplex::compose(sigma, theta));
    const std::size_t b = d.index[um].at(f.epi);
    const int k = sigma.target;
    const int kp = f.epi.target;
    ModuleMap piece;
    if (f.mono.is_identity()) {
      piece = ModuleMap::identity(c.term(dk_degree(k, simp)));
    } else if (f.mono == simplex::coface(k, 0)) {
      piece = simp ? c.differential(dk_degree(k, simp)) : c.differential(kp);
    } else {
      continue;
    }
    if (simp)
      blocks.push_back({b, a, piece});
    else
      blocks.push_back({a, b, piece});
  }
  return simp ? block_map(d.sums[un], d.sums[um], blocks) : block_map(d.sums[um], d.sums[un], blocks);
}

}  // namespace

CosimplicialModule denormalize(const CochainComplex& c, int n_max, Orientation orientation) {
  const bool simp = orientation == Orientation::simplicial;
  if (n_max < 0) throw DomainError("denormalize: negative truncation");
  if (!simp && (c.lo() < 0 && c.length() > 0))
    for (int k = c.lo(); k < 0; ++k)
      if (!c.term(k).is_zero()) throw DomainError("denormalize: cosimplicial input must vanish in negative degrees");
  if (simp && c.hi() > 0)
    for (int k = 1; k <= c.hi(); ++k)
      if (!c.term(k).is_zero()) throw DomainError("denormalize: simplicial input must vanish in positive degrees");
  DoldKanLevels d = dold_kan_levels(c, n_max, simp);
  std::vector<FgModule> levels;
  for (const auto& s : d.sums) levels.push_back(s.module);
  std::vector<std::vector<ModuleMap>> cof, cod;
  for (int n = 0; n < n_max; ++n) {
    std::vector<ModuleMap> fs, ss;
    for (int i = 0; i <= n + 1; ++i) fs.push_back(dold_kan_structure(c, d, simplex::coface(n + 1, i), simp));
    for (int j = 0; j <= n; ++j) ss.push_back(dold_kan_structure(c, d, simplex::codegeneracy(n, j), simp));
    cof.push_back(std::move(fs));
    cod.push_back(std::move(ss));
  }
  return CosimplicialModule::trusted(orientation, c.ring(), std::move(levels), std::move(cof), std::move(cod));
}

CosimplicialMap denormalize_map(const CochainMap& f, const CosimplicialModule& source,
                                const CosimplicialModule& target) {
  const bool simp = source.is_simplicial();
  DoldKanLevels ds = dold_kan_levels(f.source(), source.n_max(), simp);
  DoldKanLevels dt = dold_kan_levels(f.target(), target.n_max(), simp);
  std::vector<ModuleMap> comps;
  for (int n = 0; n <= source.n_max(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<ModuleMap> diag;
    for (const auto& sigma : ds.surj[un]) diag.push_back(f.component(dk_degree(sigma.target, simp)));
    comps.push_back(direct_sum_map(ds.sums[un], dt.sums[un], diag));
  }
  return CosimplicialMap(source, target, std::move(comps));
}

CochainMap dold_kan_comparison(const CochainComplex& c, const Normalization& n) {
  const bool simp = n.complex.open_below();
  std::vector<ModuleMap> comps;
  for (int deg = n.complex.lo(); deg <= n.complex.hi(); ++deg) {
    const int level = simp ? -deg : deg;
    const ModuleMap& incl = n.inclusions[static_cast<std::size_t>(level)];
    const FgModule& ck = c.term(deg);
    // The identity surjection comes first, so its summand sits at offset 0.
    Matrix proj(ck.ngens(), incl.codomain().ngens());
    for (std::size_t i = 0; i < ck.ngens(); ++i) proj(i, i) = 1;
    comps.push_back(ModuleMap(incl.codomain(), ck, std::move(proj)) * incl);
  }
  return CochainMap(n.complex, c, std::move(comps));
}

CosimplicialMap dold_kan_unit(const CosimplicialModule& x, int n_max) {
  if (x.is_simplicial()) throw DomainError("dold_kan_unit: cosimplicial input expected");
  if (n_max > x.n_max()) throw DegreeOutOfRange("dold_kan_unit: truncation exceeds the input");
  Normalization norm = normalization(x);
  CosimplicialModule gamma = denormalize(norm.complex, n_max);
  DoldKanLevels d = dold_kan_levels(norm.complex, n_max, false);
  const BaseRing& ring = x.ring();
  // r_k: X^k -> N^k, the retraction killing the images of d^i for i >= 1.
  std::vector<ModuleMap> retractions;
  for (int k = 0; k <= n_max; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const ModuleMap& incl = norm.inclusions[uk];
    std::vector<FgModule> parts{incl.domain()};
    std::vector<ModuleMap> maps{incl};
    for (int i = 1; i <= k; ++i) {
      parts.push_back(x.level(k - 1));
      maps.push_back(x.coface(k - 1, i));
    }
    DirectSum src = direct_sum(parts, ring);
    std::vector<ModuleMap> target_blocks{ModuleMap::identity(incl.domain())};
    for (int i = 1; i <= k; ++i) target_blocks.push_back(ModuleMap::zero(x.level(k - 1), incl.domain()));
    auto r = extend_along(copair(src, maps, x.level(k)), copair(src, target_blocks, incl.domain()));
    if (!r) throw InvariantViolation("dold_kan_unit: level " + std::to_string(k) + " does not split");
    retractions.push_back(*r);
  }
  std::vector<ModuleMap> comps;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<ModuleMap> parts;
    for (const auto& sigma : d.surj[static_cast<std::size_t>(n)])
      parts.push_back(retractions[static_cast<std::size_t>(sigma.target)] * x.apply(sigma));
    comps.push_back(pair(x.level(n), parts, d.sums[static_cast<std::size_t>(n)]));
  }
  return CosimplicialMap(x.truncated(n_max), gamma, std::move(comps));
}

LatchingObject latching(const CosimplicialModule& x, int n) {
  const BaseRing& ring = x.ring();
  x.level(n);
  if (n == 0) return {FgModule::zero(ring), ModuleMap::zero(FgModule::zero(ring), x.level(0))};
  const bool simp = x.is_simplicial();
  // Generators: cosimplicial d^a (a = 0..n), simplicial s_a (a = 0..n-1), each from level n-1.
  const int slots = simp ? n : n + 1;
  std::vector<FgModule> slot_mods(static_cast<std::size_t>(slots), x.level(n - 1));
  std::vector<ModuleMap> into;
  for (int a = 0; a < slots; ++a) into.push_back(simp ? x.degeneracy(n - 1, a) : x.coface(n - 1, a));
  DirectSum gens = direct_sum(slot_mods, ring);
  std::vector<Block> blocks;
  std::size_t rel = 0;
  if (n >= 2) {
    if (!simp) {
      // slot j holding d^i y equals slot i holding d^(j-1) y, i < j.
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i, ++rel) {
          blocks.push_back({static_cast<std::size_t>(j), rel, x.coface(n - 2, i)});
          blocks.push_back({static_cast<std::size_t>(i), rel, -x.coface(n - 2, j - 1)});
        }
    } else {
      // s_i s_j y = s_(j+1) s_i y for i <= j.
      for (int j = 0; j <= n - 2; ++j)
        for (int i = 0; i <= j; ++i, ++rel) {
          blocks.push_back({static_cast<std::size_t>(i), rel, x.degeneracy(n - 2, j)});
          blocks.push_back({static_cast<std::size_t>(j + 1), rel, -x.degeneracy(n - 2, i)});
        }
    }
  }
  std::vector<FgModule> rel_mods(rel, n >= 2 ? x.level(n - 2) : FgModule::zero(ring));
  DirectSum rels = direct_sum(rel_mods, ring);
  CokernelResult l = cokernel(block_map(rels, gens, blocks));
  auto map = extend_along(l.projection, copair(gens, into, x.level(n)));
  if (!map) throw InvariantViolation("latching map does not descend; structure maps violate the identities");
  return {l.module, *map};
}

MatchingObject matching(const CosimplicialModule& x, int n) {
  const BaseRing& ring = x.ring();
  x.level(n);
  if (n == 0) return {FgModule::zero(ring), ModuleMap::zero(x.level(0), FgModule::zero(ring))};
  const bool simp = x.is_simplicial();
  // Components: cosimplicial s^j (j = 0..n-1), simplicial d_i (i = 0..n), each into level n-1.
  const int slots = simp ? n + 1 : n;
  std::vector<FgModule> slot_mods(static_cast<std::size_t>(slots), x.level(n - 1));
  std::vector<ModuleMap> out;
  for (int a = 0; a < slots; ++a) out.push_back(simp ? x.face(n, a) : x.codegeneracy(n - 1, a));
  DirectSum comps = direct_sum(slot_mods, ring);
  std::vector<Block> blocks;
  std::size_t rel = 0;
  if (n >= 2) {
    if (!simp) {
      // s^j x_i = s^i x_(j+1) for i <= j.
      for (int j = 0; j <= n - 2; ++j)
        for (int i = 0; i <= j; ++i, ++rel) {
          blocks.push_back({rel, static_cast<std::size_t>(i), x.codegeneracy(n - 2, j)});
          blocks.push_back({rel, static_cast<std::size_t>(j + 1), -x.codegeneracy(n - 2, i)});
        }
    } else {
      // d_i x_j = d_(j-1) x_i for i < j.
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i, ++rel) {
          blocks.push_back({rel, static_cast<std::size_t>(j), x.face(n - 1, i)});
          blocks.push_back({rel, static_cast<std::size_t>(i), -x.face(n - 1, j - 1)});
        }
    }
  }
  std::vector<FgModule> rel_mods(rel, n >= 2 ? x.level(n - 2) : FgModule::zero(ring));
  DirectSum rels = direct_sum(rel_mods, ring);
  KernelResult m = kernel(block_map(comps, rels, blocks));
  auto map = lift_columns(m.inclusion, pair(x.level(n), out, comps));
  if (!map) throw InvariantViolation("matching map does not land in the limit; structure maps violate the identities");
  return {m.module, *map};
}

CosimplicialModule hom_into(const CosimplicialModule& x, const FgModule& w) {
  std::vector<HomModule> homs;
  std::vector<FgModule> levels;
  for (int n = 0; n <= x.n_max(); ++n) {
    homs.emplace_back(x.level(n), w);
    levels.push_back(homs.back().module());
  }
  std::vector<std::vector<ModuleMap>> cof, cod;
  for (int n = 0; n < x.n_max(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    const bool simp = x.is_simplicial();
    // Precomposition with X(theta) reverses the direction of every structure map.
    const HomModule& lo = homs[un];
    const HomModule& hi = homs[un + 1];
    std::vector<ModuleMap> fs, ss;
    for (int i = 0; i <= n + 1; ++i)
      fs.push_back(simp ? precomposition(x.coface(n, i), lo, hi) : precomposition(x.coface(n, i), hi, lo));
    for (int j = 0; j <= n; ++j)
      ss.push_back(simp ? precomposition(x.codegeneracy(n, j), hi, lo) : precomposition(x.codegeneracy(n, j), lo, hi));
    cof.push_back(std::move(fs));
    cod.push_back(std::move(ss));
  }
  Orientation flipped = x.is_simplicial() ? Orientation::cosimplicial : Orientation::simplicial;
  return CosimplicialModule::trusted(flipped, x.ring(), std::move(levels), std::move(cof), std::move(cod));
}

CosimplicialModule apply_levelwise(const CosimplicialModule& x, const LevelFunctor& f) {
  std::vector<FgModule> levels;
  for (int n = 0; n <= x.n_max(); ++n) levels.push_back(f.on_object(x.level(n)));
  std::vector<std::vector<ModuleMap>> cof, cod;
  auto lift = [&](const ModuleMap& m) {
    auto find = [&](const FgModule& mod) -> const FgModule& {
      for (int n = 0; n <= x.n_max(); ++n)
        if (x.level(n) == mod) return levels[static_cast<std::size_t>(n)];
      throw InvariantViolation("apply_levelwise: unknown level");
    };
    return f.on_map(m, find(m.domain()), find(m.codomain()));
  };
  for (int n = 0; n < x.n_max(); ++n) {
    std::vector<ModuleMap> fs, ss;
    for (int i = 0; i <= n + 1; ++i) fs.push_back(lift(x.coface(n, i)));
    for (int j = 0; j <= n; ++j) ss.push_back(lift(x.codegeneracy(n, j)));
    cof.push_back(std::move(fs));
    cod.push_back(std::move(ss));
  }
  return CosimplicialModule::trusted(x.orientation(), x.ring(), std::move(levels), std::move(cof), std::move(cod));
}

AugmentedCosimplicialModule::AugmentedCosimplicialModule(FgModule b, ModuleMap aug, CosimplicialModule x)
    : base(std::move(b)), augmentation(std::move(aug)), body(std::move(x)) {
  const bool simp = body.is_simplicial();
  const FgModule& x0 = body.level(0);
  if (!(augmentation.domain() == (simp ? x0 : base)) || !(augmentation.codomain() == (simp ? base : x0)))
    throw InvariantViolation("augmentation has the wrong shape");
  if (body.n_max() >= 1) {
    bool ok = simp ? augmentation * body.face(1, 0) == augmentation * body.face(1, 1)
                   : body.coface(0, 0) * augmentation == body.coface(0, 1) * augmentation;
    if (!ok) throw InvariantViolation("augmentation does not equalize the two level-one structure maps");
  }
}

CochainComplex AugmentedCosimplicialModule::augmented_complex() const {
  Normalization n = normalization(body);
  const CochainComplex& c = n.complex;
  std::vector<FgModule> terms;
  std::vector<ModuleMap> diffs;
  if (!body.is_simplicial()) {
    terms.push_back(base);
    diffs.push_back(*lift_columns(n.inclusions[0], augmentation));
    for (int d = c.lo(); d <= c.hi(); ++d) {
      terms.push_back(c.term(d));
      if (d < c.hi()) diffs.push_back(c.differential(d));
    }
    return CochainComplex(body.ring(), -1, std::move(terms), std::move(diffs), false);
  }
  for (int d = c.lo(); d <= c.hi(); ++d) {
    terms.push_back(c.term(d));
    if (d < c.hi()) diffs.push_back(c.differential(d));
  }
  terms.push_back(base);
  diffs.push_back(augmentation * n.inclusions[0]);
  return CochainComplex(body.ring(), c.lo(), std::move(terms), std::move(diffs), true).with_open_bottom();
}

FgModule AugmentedCosimplicialModule::relative_cohomotopy(int s) const {
  CochainComplex c = augmented_complex();
  return c.cohomology(body.is_simplicial() ? -s : s);
}

namespace {

std::vector<Integer> apply_map(const ModuleMap& f, const std::vector<Integer>& x) {
  if (f.denominator() != 1) throw DomainError("contraction check needs integral maps");
  return f.codomain().reduce(f.matrix().apply(x));
}

}  // namespace

std::optional<std::string> check_contraction(const AugmentedCosimplicialModule& k, const LeftContraction& c) {
  const CosimplicialModule& x = k.body;
  if (!x.is_simplicial()) throw DomainError("left contractions live on augmented simplicial modules");
  const int top = std::min(c.top, x.n_max() - 1);
  auto level = [&](int n) -> const FgModule& { return n < 0 ? k.base : x.level(n); };
  // d_i: K_n -> K_{n-1}, with d_0 on K_0 the augmentation.
  auto face = [&](int n, int i) -> ModuleMap { return n == 0 ? k.augmentation : x.face(n, i); };
  auto contract = [&](int n, const std::vector<Integer>& v) { return level(n + 1).reduce(c.map(n, v)); };
  for (int n = -1; n <= top; ++n) {
    ElementIndexer idx(level(n));
    for (std::uint64_t e = 0; e < idx.size(); ++e) {
      const std::vector<Integer> v = idx.element(e);
      const std::vector<Integer> y = contract(n, v);
      if (apply_map(face(n + 1, 0), y) != level(n).reduce(v))
        return "d_0 s_-1 = 1 fails at level " + std::to_string(n);
      for (int i = 0; n >= 0 && i <= n; ++i)
        if (apply_map(face(n + 1, i + 1), y) != contract(n - 1, apply_map(face(n, i), v)))
          return "d_(i+1) s_-1 = s_-1 d_i fails at level " + std::to_string(n) + " for i = " + std::to_string(i);
      if (n + 1 > top || n + 2 > x.n_max()) continue;
      for (int j = 0; n >= 0 && j <= n; ++j)
        if (apply_map(x.degeneracy(n + 1, j + 1), y) != contract(n + 1, apply_map(x.degeneracy(n, j), v)))
          return "s_(j+1) s_-1 = s_-1 s_j fails at level " + std::to_string(n) + " for j = " + std::to_string(j);
    }
  }
  return std::nullopt;
}

bool contraction_acyclic(const AugmentedCosimplicialModule& k, const LeftContraction& c) {
  if (auto failure = check_contraction(k, c)) throw InvariantViolation("left contraction: " + *failure);
  return k.augmented_complex().is_acyclic();
}

}  // namespace gres
