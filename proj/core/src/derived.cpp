#include "gres/derived.hpp"

#include "gres/errors.hpp"
#include "gres/hom.hpp"
#include "gres/subquotient.hpp"

namespace gres {

std::vector<FgModule> derived_additive(const Functor& t, const CochainComplex& resolution, int s_max) {
  if (!t.additive()) throw DomainError("the additive shortcut needs an additive functor, not " + t.name());
  std::vector<FgModule> terms;
  std::vector<ModuleMap> diffs;
  for (int n = resolution.lo(); n <= resolution.hi(); ++n) {
    terms.push_back(t.apply(resolution.term(n)));
    if (n < resolution.hi()) diffs.push_back(t.apply(resolution.differential(n)));
  }
  CochainComplex applied(resolution.ring(), resolution.lo(), std::move(terms), std::move(diffs),
                         !resolution.open_above());
  std::vector<FgModule> out;
  for (int s = 0; s <= s_max; ++s) out.push_back(applied.cohomology(s));
  return out;
}

DerivedResult derived_from(const Functor& t, const AugmentedCosimplicialModule& y, int s_max, Provenance provenance) {
  if (s_max < 0) throw DomainError("negative degree bound");
  if (s_max >= y.body.n_max())
    throw DegreeOutOfRange("pi^" + std::to_string(s_max) + " needs levels up to " + std::to_string(s_max + 1) +
                           ", have " + std::to_string(y.body.n_max()));
  CochainComplex n = normalize(apply_levelwise(y.body, t));
  DerivedResult r;
  r.provenance = provenance;
  r.trusted_top = s_max;
  for (int s = 0; s <= s_max; ++s) r.values.push_back(n.cohomology(s));
  return r;
}

DerivedResult derived_functor(const InjectiveClass& cls, const Functor& t, const FgModule& a, int s_max) {
  if (s_max < 0) throw DomainError("negative degree bound");
  Resolution res = step_resolution(cls, a, s_max + 1);
  if (!t.additive()) return derived_from(t, res.cosimplicial(s_max + 1), s_max, Provenance::step);
  DerivedResult r;
  r.provenance = Provenance::step;
  r.trusted_top = s_max;
  r.values = derived_additive(t, res.complex, s_max);
  return r;
}

bool InvarianceReport::all_agree() const {
  for (bool b : agree)
    if (!b) return false;
  return true;
}

InvarianceReport derived_invariance_check(const InjectiveClass& cls, const Functor& t, const FgModule& a, int s_max,
                                          const std::vector<AugmentedCosimplicialModule>& resolutions) {
  InvarianceReport report;
  report.window = s_max;
  for (std::size_t k = 0; k < resolutions.size(); ++k) {
    const auto& y = resolutions[k];
    if (!(y.base.ring() == a.ring())) throw DomainError("resolution " + std::to_string(k) + " is over another ring");
    ResolutionReport v = validate_weak_resolution(cls, y);
    if (!v.valid())
      throw InvariantViolation("resolution " + std::to_string(k) + " is not a weak resolution: " + v.failures.front());
    report.window = std::min(report.window, y.body.n_max() - 1);
  }
  if (report.window < 0) throw DegreeOutOfRange("no common degree window");
  for (const auto& y : resolutions) report.values.push_back(derived_from(t, y, report.window).values);
  for (int s = 0; s <= report.window; ++s) {
    bool same = true;
    for (std::size_t k = 1; k < report.values.size(); ++k)
      same = same && report.values[k][s].isomorphic(report.values[0][s]);
    report.agree.push_back(same);
  }
  return report;
}

Completion completion(const InjectiveClass& cls, const FgModule& a) {
  Resolution r = step_resolution(cls, a, 1);
  const FgModule i0 = r.complex.term(0);
  const ModuleMap d0 = r.complex.hi() >= 1 ? r.complex.differential(0) : ModuleMap::zero(i0, FgModule::zero(a.ring()));
  KernelResult k = kernel(d0);
  auto alpha = lift_columns(k.inclusion, r.augmentation);
  if (!alpha) throw InvariantViolation("the augmentation does not land in the equalizer");
  return {k.module, *alpha, k.inclusion, std::move(r)};
}

ModuleMap completion_map(const InjectiveClass& cls, const ModuleMap& f) {
  Completion ca = completion(cls, f.domain());
  Completion cb = completion(cls, f.codomain());
  auto phi = extend_along(ca.resolution.augmentation, cb.resolution.augmentation * f);
  if (!phi) throw InvariantViolation("no extension of " + f.str() + " to the injective hulls");
  auto lf = lift_columns(cb.inclusion, *phi * ca.inclusion);
  if (!lf) throw InvariantViolation("the extension of " + f.str() + " does not preserve equalizers");
  return *lf;
}

ModuleMap completion_multiplication(const InjectiveClass& cls, const FgModule& a) {
  Completion ca = completion(cls, a);
  const FgModule i0 = ca.resolution.complex.term(0);
  ModuleMap l_incl = completion_map(cls, ca.inclusion);
  ModuleMap alpha_inverse;
  if (!is_isomorphism(completion(cls, i0).alpha, &alpha_inverse))
    throw InvariantViolation("an injective module is not complete");
  auto mu = lift_columns(ca.inclusion, alpha_inverse * l_incl);
  if (!mu) throw InvariantViolation("the multiplication does not land in the equalizer");
  return *mu;
}

bool is_g_equivalence(const InjectiveClass& cls, const ModuleMap& f) {
  if (cls.mode() == InjectiveClass::Mode::all_objects) return is_isomorphism(f);
  for (const auto& w : cls.test_modules())
    if (!is_isomorphism(precomposition(f, HomModule(f.codomain(), w), HomModule(f.domain(), w)))) return false;
  return true;
}

std::string CompletenessResult::str() const {
  switch (kind) {
    case Completeness::complete:
      return "complete";
    case Completeness::good:
      return "good-not-complete";
    case Completeness::bad:
      break;
  }
  return "bad-window(" + std::to_string(window) + ")";
}

CompletenessResult completeness_classify(const InjectiveClass& cls, const FgModule& a, int cap) {
  if (cap < 1) throw DomainError("iteration cap must be positive");
  CompletenessResult out;
  out.iterates.push_back(a);
  Completion c = completion(cls, a);
  out.iterates.push_back(c.module);
  if (is_isomorphism(c.alpha)) return out;
  if (is_g_equivalence(cls, c.alpha)) {
    out.kind = Completeness::good;
    if (!completion(cls, c.module).module.isomorphic(c.module))
      throw InvariantViolation("completion of the good module " + a.str() + " is not idempotent");
    return out;
  }
  out.kind = Completeness::bad;
  out.window = 1;
  while (out.window < cap) {
    Completion next = completion(cls, out.iterates.back());
    if (is_g_equivalence(cls, next.alpha)) break;
    out.iterates.push_back(next.module);
    ++out.window;
  }
  return out;
}

}  // namespace gres
