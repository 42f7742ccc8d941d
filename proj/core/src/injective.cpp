#include "gres/injective.hpp"

#include "gres/errors.hpp"
#include "gres/hom.hpp"
#include "gres/subquotient.hpp"

#include <map>
#include <sstream>

namespace gres {

InjectiveClass InjectiveClass::cogenerators(std::vector<FgModule> modules) {
  if (modules.empty()) throw InvariantViolation("injective class needs at least one cogenerator");
  const BaseRing ring = modules.front().ring();
  for (const auto& w : modules)
    if (!(w.ring() == ring)) throw InvariantViolation("cogenerators over different rings");
  return InjectiveClass(Mode::cogenerators, ring, std::move(modules));
}

InjectiveClass InjectiveClass::all_objects(const BaseRing& ring) { return InjectiveClass(Mode::all_objects, ring, {}); }

InjectiveClass InjectiveClass::field_absolute(const BaseRing& ring) {
  if (!ring.is_field()) throw InvariantViolation("field-absolute class over a ring that is not a field");
  return InjectiveClass(Mode::field_absolute, ring, {});
}

std::vector<FgModule> InjectiveClass::test_modules() const {
  switch (mode_) {
    case Mode::cogenerators:
      return cogenerators_;
    case Mode::field_absolute:
      return {FgModule::free(ring_, 1)};
    case Mode::all_objects:
      break;
  }
  throw DomainError("the all-objects class has no finite set of test modules");
}

std::string InjectiveClass::str() const {
  std::ostringstream os;
  switch (mode_) {
    case Mode::cogenerators:
      os << "{";
      for (std::size_t i = 0; i < cogenerators_.size(); ++i) os << (i ? ", " : "") << cogenerators_[i].str();
      os << "} over " << ring_.name();
      break;
    case Mode::all_objects:
      os << "all objects over " << ring_.name();
      break;
    case Mode::field_absolute:
      os << "all vector spaces over " << ring_.name();
      break;
  }
  return os.str();
}

bool is_g_monic(const InjectiveClass& cls, const ModuleMap& f) {
  switch (cls.mode()) {
    case InjectiveClass::Mode::all_objects:
      return splitting_test(f).split_mono;
    case InjectiveClass::Mode::field_absolute:
      return is_injective(f);
    case InjectiveClass::Mode::cogenerators:
      break;
  }
  for (const auto& w : cls.modules()) {
    HomModule from(f.codomain(), w), to(f.domain(), w);
    if (!is_surjective(precomposition(f, from, to))) return false;
  }
  return true;
}

bool is_g_monic(const InjectiveClass& cls, const CochainMap& f, int from) {
  for (int n = std::max(from, f.source().lo()); n <= f.source().hi(); ++n)
    if (!is_g_monic(cls, f.component(n))) return false;
  return true;
}

Embedding evaluation_embedding(const InjectiveClass& cls, const FgModule& m) {
  if (cls.mode() != InjectiveClass::Mode::cogenerators) return {m, ModuleMap::identity(m)};
  std::vector<FgModule> factors;
  std::vector<ModuleMap> maps;
  for (const auto& w : cls.modules()) {
    HomModule h(m, w);
    for (const auto& g : h.generators()) {
      factors.push_back(w);
      maps.push_back(g);
    }
  }
  DirectSum e = direct_sum(factors, cls.ring());
  return {e.module, pair(m, maps, e)};
}

namespace {

InjectivityResult injective_directly(const InjectiveClass& cls, const FgModule& m) {
  Embedding e = evaluation_embedding(cls, m);
  auto r = extend_along(e.map, ModuleMap::identity(m));
  return {r.has_value(), r};
}

}  // namespace

InjectivityResult is_g_injective(const InjectiveClass& cls, const FgModule& m) {
  if (cls.mode() != InjectiveClass::Mode::cogenerators) return {true, ModuleMap::identity(m)};
  if (m.ngens() <= 1) return injective_directly(cls, m);
  // M is the sum of its cyclic summands, so it is injective iff each summand is,
  // and the retraction of E(M) is assembled from theirs.
  std::map<Integer, ModuleMap> pieces;
  for (const auto& o : m.orders()) {
    if (pieces.count(o)) continue;
    InjectivityResult c = injective_directly(cls, FgModule(m.ring(), {o}));
    if (!c.injective) return {false, std::nullopt};
    if (c.retraction->denominator() != 1) return injective_directly(cls, m);
    pieces.emplace(o, *c.retraction);
  }
  Embedding e = evaluation_embedding(cls, m);
  Matrix r(m.ngens(), e.module.ngens());
  std::size_t column = 0;
  std::vector<std::size_t> local(m.ngens(), 0);  // next coordinate of E(Z/o_j)
  for (const auto& w : cls.modules()) {
    HomModule h(m, w);
    for (const auto& g : h.generators()) {
      std::size_t j = 0;
      auto column_is_zero = [&](std::size_t c) {
        for (std::size_t row = 0; row < w.ngens(); ++row)
          if (g.matrix()(row, c) != 0) return false;
        return true;
      };
      while (j < m.ngens() && column_is_zero(j)) ++j;
      const Matrix& piece = pieces.at(m.orders()[j]).matrix();
      for (std::size_t k = 0; k < w.ngens(); ++k) r(j, column + k) = piece(0, local[j] + k);
      local[j] += w.ngens();
      column += w.ngens();
    }
  }
  ModuleMap retraction(e.module, m, std::move(r));
  if (!(retraction * e.map == ModuleMap::identity(m))) throw InvariantViolation("assembled retraction does not split");
  return {true, retraction};
}

CochainComplex Resolution::augmented_complex() const {
  std::vector<FgModule> terms{base};
  std::vector<ModuleMap> diffs{augmentation};
  for (int n = complex.lo(); n <= complex.hi(); ++n) {
    terms.push_back(complex.term(n));
    if (n < complex.hi()) diffs.push_back(complex.differential(n));
  }
  return CochainComplex(base.ring(), -1, std::move(terms), std::move(diffs), complex.bounded());
}

AugmentedCosimplicialModule Resolution::cosimplicial(int n_max) const {
  CosimplicialModule x = denormalize(complex, n_max);
  // Level 0 of the Dold-Kan object is I^0 itself.
  return AugmentedCosimplicialModule(base, ModuleMap(base, x.level(0), augmentation.matrix()), x);
}

Resolution step_resolution(const InjectiveClass& cls, const FgModule& a, int s_max) {
  if (cls.mode() == InjectiveClass::Mode::all_objects)
    throw DomainError("step resolutions need a cogenerator or field class");
  if (!(a.ring() == cls.ring())) throw DomainError("module and class over different rings");
  if (s_max < 0) throw DomainError("negative resolution length");
  Resolution r;
  r.base = a;
  r.provenance = Provenance::step;
  FgModule k = a;
  std::vector<FgModule> terms;
  bool finished = false;
  for (int n = 0; n <= s_max; ++n) {
    Embedding e = evaluation_embedding(cls, k);
    CokernelResult c = cokernel(e.map);
    r.syzygies.push_back(k);
    r.embeddings.push_back(e.map);
    r.projections.push_back(c.projection);
    terms.push_back(e.module);
    auto cert = is_g_injective(cls, e.module);
    if (!cert.injective) throw InvariantViolation("evaluation embedding target is not injective");
    r.certificates.push_back(*cert.retraction);
    k = c.module;
    if (k.is_zero()) {
      finished = true;
      break;
    }
  }
  std::vector<ModuleMap> diffs;
  for (std::size_t n = 0; n + 1 < terms.size(); ++n) diffs.push_back(r.embeddings[n + 1] * r.projections[n]);
  r.augmentation = r.embeddings.front();
  r.complex = CochainComplex(cls.ring(), 0, std::move(terms), std::move(diffs), finished);
  return r;
}

bool ResolutionReport::valid() const {
  if (!g_equivalence) return false;
  for (bool b : termwise_injective)
    if (!b) return false;
  return true;
}

ResolutionReport validate_weak_resolution(const InjectiveClass& cls, const AugmentedCosimplicialModule& y) {
  const CosimplicialModule& x = y.body;
  if (x.is_simplicial()) throw DomainError("weak resolutions are cosimplicial");
  ResolutionReport report;
  for (int n = 0; n <= x.n_max(); ++n) {
    bool ok = is_g_injective(cls, x.level(n)).injective;
    report.termwise_injective.push_back(ok);
    if (!ok) report.failures.push_back("level " + std::to_string(n) + " is not injective");
  }
  report.g_equivalence = true;
  if (cls.mode() == InjectiveClass::Mode::all_objects) {
    // Exact for Hom into every object means the augmented complex is split exact.
    CochainComplex c = y.augmented_complex();
    if (!is_contractible(c)) {
      report.g_equivalence = false;
      report.failures.push_back("augmented normalized complex is not contractible");
    }
    return report;
  }
  for (const auto& w : cls.test_modules()) {
    CosimplicialModule hx = hom_into(x, w);
    HomModule h0(x.level(0), w), ha(y.base, w);
    AugmentedCosimplicialModule hy(ha.module(), precomposition(y.augmentation, h0, ha), hx);
    CochainComplex c = hy.augmented_complex();
    // Degree 1 carries Hom(A, W); degree -n carries N_n of Hom(Y, W).
    for (int d = 1; d > c.lo(); --d) {
      if (!c.cohomology(d).is_zero()) {
        report.g_equivalence = false;
        report.failures.push_back("Hom(-, " + w.str() + ") is not exact in simplicial degree " + std::to_string(-d));
        break;
      }
    }
  }
  return report;
}

MapClassification classify_map(const InjectiveClass& cls, const CochainMap& f) {
  const CochainComplex& c = f.source();
  const CochainComplex& d = f.target();
  if (c.open_below() || d.open_below()) throw DomainError("classify_map needs complexes bounded below");
  MapClassification out;
  const int lo = std::min(c.lo(), d.lo());
  const int hi = std::max(c.hi(), d.hi());
  // A truncated complex says nothing about its top degree, so that degree is left out.
  const bool open = c.open_above() || d.open_above();
  const int top = open ? -hi + 1 : -hi - 1;
  if (cls.mode() == InjectiveClass::Mode::all_objects) {
    if (open) throw DomainError("classify_map in the all-objects class needs bounded complexes");
    out.g_equivalence = is_contractible(mapping_cone(f));
  } else {
    out.g_equivalence = true;
    for (const auto& w : cls.test_modules()) {
      CochainMap hf = hom_into(f, w);
      if (!is_quasi_isomorphism(hf, top, -lo + 1)) {
        out.g_equivalence = false;
        break;
      }
    }
  }
  out.g_cofibration = true;
  for (int n = std::max(lo, 1); n <= hi; ++n)
    if (!is_g_monic(cls, f.component(n))) {
      out.g_cofibration = false;
      break;
    }
  out.g_fibration = true;
  for (int n = lo; n <= hi && out.g_fibration; ++n) {
    ModuleMap fn = f.component(n);
    if (!factor_through(fn, ModuleMap::identity(fn.codomain()))) {
      out.g_fibration = false;
      break;
    }
    out.g_fibration = is_g_injective(cls, kernel(fn).module).injective;
  }
  return out;
}

}  // namespace gres
