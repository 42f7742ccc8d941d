#pragma once

#include "gres/functor.hpp"
#include "gres/injective.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gres {

struct DerivedResult {
  std::vector<FgModule> values;  // R^s for 0 <= s <= s_max
  Provenance provenance = Provenance::step;
  int trusted_top = 0;
};

/// R^s T(A) from the step resolution. Additive T uses H^s(T I); otherwise
/// T is applied to the Dold-Kan object of the resolution before normalizing.
DerivedResult derived_functor(const InjectiveClass& cls, const Functor& t, const FgModule& a, int s_max);

/// pi^s T Y for a weak resolution Y, for s up to one below its top level.
DerivedResult derived_from(const Functor& t, const AugmentedCosimplicialModule& y, int s_max,
                           Provenance provenance = Provenance::user);

/// H^s(T I) for an additive T applied to a resolution complex.
std::vector<FgModule> derived_additive(const Functor& t, const CochainComplex& resolution, int s_max);

struct InvarianceReport {
  std::vector<std::vector<FgModule>> values;  // per resolution
  int window = 0;                             // degrees 0..window are compared
  std::vector<bool> agree;                    // per degree
  bool all_agree() const;
};

/// Computes pi^s T on every resolution and compares invariant factors.
/// Throws InvariantViolation if a resolution does not validate.
InvarianceReport derived_invariance_check(const InjectiveClass& cls, const Functor& t, const FgModule& a, int s_max,
                                          const std::vector<AugmentedCosimplicialModule>& resolutions);

/// The completion with alpha: A -> LA and the inclusion of LA into I^0.
struct Completion {
  FgModule module;
  ModuleMap alpha;
  ModuleMap inclusion;
  Resolution resolution;
};

/// Equalizer of the two cofaces I^0 -> I^1, as the kernel of d^0.
Completion completion(const InjectiveClass& cls, const FgModule& a);
/// L f: LA -> LB, the restriction of any extension I^0_A -> I^0_B of f.
ModuleMap completion_map(const InjectiveClass& cls, const ModuleMap& f);
/// mu: L L A -> L A.
ModuleMap completion_multiplication(const InjectiveClass& cls, const FgModule& a);

/// Hom(f, W) is a bijection for every test module W.
bool is_g_equivalence(const InjectiveClass& cls, const ModuleMap& f);

enum class Completeness { complete, good, bad };

struct CompletenessResult {
  Completeness kind = Completeness::complete;
  int window = 0;                  // bad: iterations without reaching a good object
  std::vector<FgModule> iterates;  // A, LA, LLA, ...
  std::string str() const;
};

CompletenessResult completeness_classify(const InjectiveClass& cls, const FgModule& a, int cap = 4);

}  // namespace gres
