#include "gres/complex.hpp"

#include "gres/errors.hpp"
#include "gres/hom.hpp"

#include <sstream>

namespace gres {

CochainComplex::CochainComplex(BaseRing ring, int lo, std::vector<FgModule> terms,
                               std::vector<ModuleMap> differentials, bool bounded)
    : ring_(std::move(ring)),
      lo_(lo),
      terms_(std::move(terms)),
      diffs_(std::move(differentials)),
      open_above_(!bounded),
      zero_(FgModule::zero(ring_)) {
  const std::size_t expected = terms_.empty() ? 0 : terms_.size() - 1;
  if (diffs_.size() != expected) throw InvariantViolation("cochain complex: wrong number of differentials");
  for (const auto& t : terms_)
    if (!(t.ring() == ring_)) throw InvariantViolation("cochain complex: term over a different ring");
  for (std::size_t k = 0; k < diffs_.size(); ++k)
    if (!(diffs_[k].domain() == terms_[k]) || !(diffs_[k].codomain() == terms_[k + 1]))
      throw InvariantViolation("cochain complex: differential has wrong shape");
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!(diffs_[k + 1] * diffs_[k]).is_zero())
      throw InvariantViolation("cochain complex: differential does not square to zero in degree " +
                               std::to_string(lo_ + static_cast<int>(k)));
}

CochainComplex CochainComplex::concentrated(const FgModule& m, int degree) {
  return CochainComplex(m.ring(), degree, {m}, {});
}

const FgModule& CochainComplex::term(int n) const {
  if (contains(n)) return terms_[static_cast<std::size_t>(n - lo_)];
  if (open_above_ && n > hi()) throw DegreeOutOfRange("cochain complex known only up to degree " + std::to_string(hi()));
  if (open_below_ && n < lo_) throw DegreeOutOfRange("cochain complex known only down to degree " + std::to_string(lo_));
  return zero_;
}

ModuleMap CochainComplex::differential(int n) const {
  if (contains(n) && contains(n + 1)) return diffs_[static_cast<std::size_t>(n - lo_)];
  return ModuleMap::zero(term(n), term(n + 1));
}

Homology CochainComplex::cohomology_data(int n) const {
  if (open_above_ && n >= hi())
    throw DegreeOutOfRange("cohomology in degree " + std::to_string(n) + " needs degree " + std::to_string(n + 1));
  if (open_below_ && n <= lo_)
    throw DegreeOutOfRange("cohomology in degree " + std::to_string(n) + " needs degree " + std::to_string(n - 1));
  return Homology(differential(n - 1), differential(n));
}

bool CochainComplex::is_acyclic() const {
  const int top = open_above_ ? hi() - 1 : hi();
  for (int n = open_below_ ? lo_ + 1 : lo_; n <= top; ++n)
    if (!cohomology(n).is_zero()) return false;
  return true;
}

CochainComplex CochainComplex::truncated(int top) const {
  if (top > hi() && open_above_) throw DegreeOutOfRange("cannot extend a complex that is open above");
  std::vector<FgModule> t;
  std::vector<ModuleMap> d;
  for (int n = lo_; n <= top; ++n) {
    t.push_back(term(n));
    if (n < top) d.push_back(differential(n));
  }
  CochainComplex out(ring_, lo_, std::move(t), std::move(d), false);
  out.open_below_ = open_below_;
  return out;
}

CochainComplex CochainComplex::with_open_bottom() const {
  CochainComplex out = *this;
  out.open_below_ = true;
  return out;
}

std::string CochainComplex::str() const {
  std::ostringstream os;
  for (int n = lo_; n <= hi(); ++n) {
    if (n > lo_) os << " -> ";
    os << term(n).str();
  }
  if (terms_.empty()) os << "0";
  if (open_above_) os << " -> ...";
  if (open_below_) os.str("... -> " + os.str());
  return os.str();
}

CochainMap::CochainMap(CochainComplex source, CochainComplex target, std::vector<ModuleMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (components_.size() != source_.length()) throw InvariantViolation("cochain map: wrong number of components");
  for (int n = source_.lo(); n <= source_.hi(); ++n) {
    const ModuleMap& f = components_[static_cast<std::size_t>(n - source_.lo())];
    if (!(f.domain() == source_.term(n)) || !(f.codomain() == target_.term(n)))
      throw InvariantViolation("cochain map: component has wrong shape in degree " + std::to_string(n));
  }
  for (int n = source_.open_below() ? source_.lo() : source_.lo() - 1; n <= source_.hi(); ++n) {
    if (n == source_.hi() && source_.open_above()) break;
    if (target_.open_above() && n + 1 > target_.hi()) break;
    if (!(target_.differential(n) * component(n) == component(n + 1) * source_.differential(n)))
      throw InvariantViolation("cochain map does not commute with differentials in degree " + std::to_string(n));
  }
}

CochainMap CochainMap::identity(const CochainComplex& c) {
  std::vector<ModuleMap> comps;
  for (int n = c.lo(); n <= c.hi(); ++n) comps.push_back(ModuleMap::identity(c.term(n)));
  return CochainMap(c, c, std::move(comps));
}

CochainMap CochainMap::zero(const CochainComplex& source, const CochainComplex& target) {
  std::vector<ModuleMap> comps;
  for (int n = source.lo(); n <= source.hi(); ++n) comps.push_back(ModuleMap::zero(source.term(n), target.term(n)));
  return CochainMap(source, target, std::move(comps));
}

ModuleMap CochainMap::component(int n) const {
  if (source_.contains(n)) return components_[static_cast<std::size_t>(n - source_.lo())];
  return ModuleMap::zero(source_.term(n), target_.term(n));
}

CochainMap CochainMap::operator*(const CochainMap& rhs) const {
  std::vector<ModuleMap> comps;
  for (int n = rhs.source_.lo(); n <= rhs.source_.hi(); ++n) comps.push_back(component(n) * rhs.component(n));
  return CochainMap(rhs.source_, target_, std::move(comps));
}

CochainMap CochainMap::operator+(const CochainMap& rhs) const {
  std::vector<ModuleMap> comps;
  for (int n = source_.lo(); n <= source_.hi(); ++n) comps.push_back(component(n) + rhs.component(n));
  return CochainMap(source_, target_, std::move(comps));
}

CochainMap CochainMap::operator-(const CochainMap& rhs) const {
  std::vector<ModuleMap> comps;
  for (int n = source_.lo(); n <= source_.hi(); ++n) comps.push_back(component(n) - rhs.component(n));
  return CochainMap(source_, target_, std::move(comps));
}

bool CochainMap::operator==(const CochainMap& other) const {
  for (int n = source_.lo(); n <= source_.hi(); ++n)
    if (!(component(n) == other.component(n))) return false;
  return true;
}

ModuleMap CochainMap::on_cohomology(int n) const {
  return induced_on_homology(source_.cohomology_data(n), target_.cohomology_data(n), component(n));
}

std::optional<CochainHomotopy> chain_homotopic(const CochainMap& f, const CochainMap& g) {
  const CochainComplex& c = f.source();
  const CochainComplex& d = f.target();
  const int a = c.lo(), b = c.hi();
  if (c.open_below()) throw DomainError("chain_homotopic: source must be known down to its lowest degree");
  if (c.length() == 0) return CochainHomotopy{a, {}};
  std::vector<HomModule> unknowns, equations;
  std::vector<FgModule> u_mods, e_mods;
  for (int n = a; n <= b; ++n) {
    unknowns.emplace_back(c.term(n), d.term(n - 1));
    u_mods.push_back(unknowns.back().module());
  }
  // With an unbounded source the top equation involves h^{b+1}, which is free.
  const int top = c.open_above() ? b - 1 : b;
  for (int n = a; n <= top; ++n) {
    equations.emplace_back(c.term(n), d.term(n));
    e_mods.push_back(equations.back().module());
  }
  DirectSum us = direct_sum(u_mods, c.ring());
  DirectSum es = direct_sum(e_mods, c.ring());
  std::vector<Block> blocks;
  std::vector<ModuleMap> rhs;
  for (int n = a; n <= top; ++n) {
    const std::size_t row = static_cast<std::size_t>(n - a);
    const HomModule& e = equations[row];
    blocks.push_back({row, row, postcomposition(d.differential(n - 1), unknowns[row], e)});
    if (n + 1 <= b) blocks.push_back({row, row + 1, precomposition(c.differential(n), unknowns[row + 1], e)});
    rhs.push_back(e.element_of(f.component(n) - g.component(n)));
  }
  ModuleMap phi = block_map(us, es, blocks);
  FgModule one = FgModule::free(c.ring(), 1);
  ModuleMap target = pair(one, rhs, es);
  auto x = lift_columns(phi, target);
  if (!x) return std::nullopt;
  CochainHomotopy h{a, {}};
  for (std::size_t k = 0; k < unknowns.size(); ++k) h.maps.push_back(unknowns[k].map_from(us.projections[k] * *x));
  return h;
}

bool verify_homotopy(const CochainMap& f, const CochainMap& g, const CochainHomotopy& h) {
  const CochainComplex& c = f.source();
  const CochainComplex& d = f.target();
  const int top = c.open_above() ? c.hi() - 1 : c.hi();
  for (int n = c.lo(); n <= top; ++n) {
    ModuleMap lhs = f.component(n) - g.component(n);
    ModuleMap rhs = d.differential(n - 1) * h.at(n);
    if (n + 1 <= c.hi()) rhs = rhs + h.at(n + 1) * c.differential(n);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

CochainComplex mapping_cone(const CochainMap& f) {
  const CochainComplex& c = f.source();
  const CochainComplex& d = f.target();
  const BaseRing& ring = c.ring();
  const int lo = std::min(c.lo() - 1, d.lo());
  if (c.open_below() || d.open_below()) throw DomainError("mapping_cone: complexes must be known down to their lowest degree");
  const bool bounded = !c.open_above() && !d.open_above();
  const int hi = bounded ? std::max(c.hi() - 1, d.hi()) : std::min(c.hi() - 1, d.hi());
  std::vector<DirectSum> sums;
  std::vector<FgModule> terms;
  for (int n = lo; n <= hi; ++n) {
    sums.push_back(direct_sum({c.term(n + 1), d.term(n)}, ring));
    terms.push_back(sums.back().module);
  }
  std::vector<ModuleMap> diffs;
  for (int n = lo; n < hi; ++n) {
    const DirectSum& s = sums[static_cast<std::size_t>(n - lo)];
    const DirectSum& t = sums[static_cast<std::size_t>(n + 1 - lo)];
    std::vector<Block> blocks{{0, 0, -c.differential(n + 1)}, {1, 0, f.component(n + 1)}, {1, 1, d.differential(n)}};
    diffs.push_back(block_map(s, t, blocks));
  }
  return CochainComplex(ring, lo, std::move(terms), std::move(diffs), bounded);
}

bool is_quasi_isomorphism(const CochainMap& f, int lo, int hi) {
  for (int n = lo; n <= hi; ++n)
    if (!is_isomorphism(f.on_cohomology(n))) return false;
  return true;
}

bool is_contractible(const CochainComplex& c) {
  return chain_homotopic(CochainMap::identity(c), CochainMap::zero(c, c)).has_value();
}

namespace {

struct HomTerms {
  std::vector<HomModule> homs;  // homs[k] = Hom(C^{hi-k}, W)
};

HomTerms hom_terms(const CochainComplex& c, const FgModule& w) {
  HomTerms t;
  for (int n = c.hi(); n >= c.lo(); --n) t.homs.emplace_back(c.term(n), w);
  return t;
}

CochainComplex hom_complex(const CochainComplex& c, const HomTerms& t) {
  std::vector<FgModule> terms;
  std::vector<ModuleMap> diffs;
  for (std::size_t k = 0; k < t.homs.size(); ++k) {
    terms.push_back(t.homs[k].module());
    const int n = c.hi() - static_cast<int>(k);
    if (k + 1 < t.homs.size()) diffs.push_back(precomposition(c.differential(n - 1), t.homs[k], t.homs[k + 1]));
  }
  CochainComplex out(c.ring(), -c.hi(), std::move(terms), std::move(diffs), !c.open_below());
  return c.open_above() ? out.with_open_bottom() : out;
}

}  // namespace

CochainComplex hom_into(const CochainComplex& c, const FgModule& w) { return hom_complex(c, hom_terms(c, w)); }

CochainMap hom_into(const CochainMap& f, const FgModule& w) {
  HomTerms s = hom_terms(f.target(), w);
  HomTerms t = hom_terms(f.source(), w);
  CochainComplex src = hom_complex(f.target(), s);
  CochainComplex tgt = hom_complex(f.source(), t);
  std::vector<ModuleMap> comps;
  for (int d = src.lo(); d <= src.hi(); ++d) {
    const int n = -d;
    const HomModule& from = s.homs[static_cast<std::size_t>(f.target().hi() - n)];
    if (!f.source().contains(n)) {
      comps.push_back(ModuleMap::zero(from.module(), tgt.term(d)));
      continue;
    }
    const HomModule& to = t.homs[static_cast<std::size_t>(f.source().hi() - n)];
    comps.push_back(precomposition(f.component(n), from, to));
  }
  return CochainMap(src, tgt, std::move(comps));
}

}  // namespace gres
