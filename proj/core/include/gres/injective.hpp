#pragma once

#include "gres/complex.hpp"
#include "gres/cosimplicial.hpp"
#include "gres/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gres {

/// A class of relative injectives, given by cogenerators or by one of two degenerate modes.
class InjectiveClass {
 public:
  enum class Mode { cogenerators, all_objects, field_absolute };

  static InjectiveClass cogenerators(std::vector<FgModule> modules);
  /// Every object is injective; equivalences are chain homotopy equivalences.
  static InjectiveClass all_objects(const BaseRing& ring);
  /// Vector spaces over a field: every object is injective.
  static InjectiveClass field_absolute(const BaseRing& ring);

  Mode mode() const { return mode_; }
  const BaseRing& ring() const { return ring_; }
  const std::vector<FgModule>& modules() const { return cogenerators_; }
  /// Modules W for which exactness of Hom(-, W) is tested.
  std::vector<FgModule> test_modules() const;
  std::string str() const;

 private:
  InjectiveClass(Mode mode, BaseRing ring, std::vector<FgModule> cogens)
      : mode_(mode), ring_(std::move(ring)), cogenerators_(std::move(cogens)) {}
  Mode mode_;
  BaseRing ring_;
  std::vector<FgModule> cogenerators_;
};

bool is_g_monic(const InjectiveClass& cls, const ModuleMap& f);
/// Degreewise test over [from, hi].
bool is_g_monic(const InjectiveClass& cls, const CochainMap& f, int from);

struct Embedding {
  FgModule module;
  ModuleMap map;
};

/// M -> product of cogenerators, one factor per generator of each Hom(M, W_i).
Embedding evaluation_embedding(const InjectiveClass& cls, const FgModule& m);

struct InjectivityResult {
  bool injective = false;
  std::optional<ModuleMap> retraction;  // of the evaluation embedding
};
InjectivityResult is_g_injective(const InjectiveClass& cls, const FgModule& m);

enum class Provenance { step, triple, user };

/// A -> I^0 -> I^1 -> ... with syzygies K^n and the splices K^n -> I^n -> K^{n+1}.
struct Resolution {
  FgModule base;
  ModuleMap augmentation;
  CochainComplex complex;
  std::vector<FgModule> syzygies;
  std::vector<ModuleMap> embeddings;
  std::vector<ModuleMap> projections;
  std::vector<ModuleMap> certificates;  // retractions witnessing injectivity of I^n
  Provenance provenance = Provenance::step;

  int s_max() const { return complex.hi(); }
  /// A in degree -1 followed by I^0, I^1, ...
  CochainComplex augmented_complex() const;
  /// The cosimplicial resolution obtained by Dold-Kan, with augmentation into level 0.
  AugmentedCosimplicialModule cosimplicial(int n_max) const;
};

Resolution step_resolution(const InjectiveClass& cls, const FgModule& a, int s_max);

struct ResolutionReport {
  std::vector<bool> termwise_injective;
  bool g_equivalence = false;
  std::vector<std::string> failures;
  bool valid() const;
};

/// Termwise injectivity plus acyclicity of Hom(Y, W) -> Hom(A, W) for every test module.
ResolutionReport validate_weak_resolution(const InjectiveClass& cls, const AugmentedCosimplicialModule& y);

struct MapClassification {
  bool g_equivalence = false;
  bool g_cofibration = false;
  bool g_fibration = false;
};
MapClassification classify_map(const InjectiveClass& cls, const CochainMap& f);

}  // namespace gres
