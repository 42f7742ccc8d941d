#pragma once

#include "gres/complex.hpp"
#include "gres/module.hpp"
#include "gres/simplex.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gres {

enum class Orientation { cosimplicial, simplicial };

/// A cosimplicial or simplicial module truncated at level n_max.
///
/// Structure maps are stored by the map of the simplex category they
/// represent: coface(n, i) is X(delta^i) for delta^i: [n] -> [n+1] and
/// codegeneracy(n, j) is X(sigma^j) for sigma^j: [n+1] -> [n]. For a
/// cosimplicial module these point up and down as usual; for a simplicial
/// module they are the faces d_i: X_{n+1} -> X_n and degeneracies
/// s_j: X_n -> X_{n+1}.
class CosimplicialModule {
 public:
  CosimplicialModule() = default;
  CosimplicialModule(Orientation orientation, BaseRing ring, std::vector<FgModule> levels,
                     std::vector<std::vector<ModuleMap>> cofaces, std::vector<std::vector<ModuleMap>> codegeneracies);

  /// Skips the identity check; for builders whose output satisfies the identities by construction.
  static CosimplicialModule trusted(Orientation orientation, BaseRing ring, std::vector<FgModule> levels,
                                    std::vector<std::vector<ModuleMap>> cofaces,
                                    std::vector<std::vector<ModuleMap>> codegeneracies);
  static CosimplicialModule constant(const FgModule& a, int n_max, Orientation orientation = Orientation::cosimplicial);

  Orientation orientation() const { return orientation_; }
  bool is_simplicial() const { return orientation_ == Orientation::simplicial; }
  const BaseRing& ring() const { return ring_; }
  int n_max() const { return static_cast<int>(levels_.size()) - 1; }
  const FgModule& level(int n) const;

  const ModuleMap& coface(int n, int i) const;
  const ModuleMap& codegeneracy(int n, int j) const;
  /// Simplicial names: d_i: X_n -> X_{n-1} and s_j: X_n -> X_{n+1}.
  const ModuleMap& face(int n, int i) const { return coface(n - 1, i); }
  const ModuleMap& degeneracy(int n, int j) const { return codegeneracy(n, j); }

  /// X(theta) for any monotone map within the truncation.
  ModuleMap apply(const simplex::Monotone& theta) const;

  /// Throws InvariantViolation naming the first failing identity.
  void check_identities() const;
  CosimplicialModule truncated(int n_max) const;

 private:
  Orientation orientation_ = Orientation::cosimplicial;
  BaseRing ring_ = BaseRing::integers();
  std::vector<FgModule> levels_;
  std::vector<std::vector<ModuleMap>> cofaces_;
  std::vector<std::vector<ModuleMap>> codegeneracies_;

  void check_shapes() const;
  /// X(a after b) in the orientation of this object.
  ModuleMap compose(const ModuleMap& a, const ModuleMap& b) const;
};

/// Levelwise maps commuting with all structure maps.
struct CosimplicialMap {
  CosimplicialModule source;
  CosimplicialModule target;
  std::vector<ModuleMap> components;

  CosimplicialMap(CosimplicialModule source, CosimplicialModule target, std::vector<ModuleMap> components);
  static CosimplicialMap identity(const CosimplicialModule& x);
};

/// Normalized complex with the inclusions N^n -> X^n.
struct Normalization {
  CochainComplex complex;
  std::vector<ModuleMap> inclusions;
};

/// Cosimplicial: N^n = intersection of ker s^j, differential sum (-1)^i d^i.
/// Simplicial: N_n = intersection of ker d_i for i >= 1 with differential d_0,
/// stored in cochain degree -n.
Normalization normalization(const CosimplicialModule& x);
inline CochainComplex normalize(const CosimplicialModule& x) { return normalization(x).complex; }
CochainMap normalize_map(const CosimplicialMap& f);

/// Unnormalized complex with alternating-sum differential on the full levels.
CochainComplex moore_complex(const CosimplicialModule& x);

/// pi^s = H^s(N X) for cosimplicial input; pi_s = H_s(N X) for simplicial input.
FgModule cohomotopy(const CosimplicialModule& x, int s);

/// Dold-Kan: level n is the sum over surjections [n] -> [k] of C^k.
/// A cosimplicial module needs C in degrees >= 0; a simplicial one reads C
/// in degrees <= 0 as a chain complex.
CosimplicialModule denormalize(const CochainComplex& c, int n_max, Orientation orientation = Orientation::cosimplicial);
CosimplicialMap denormalize_map(const CochainMap& f, const CosimplicialModule& source, const CosimplicialModule& target);

/// Projection N(denormalize(C)) -> C onto the identity summand; an isomorphism of complexes.
CochainMap dold_kan_comparison(const CochainComplex& c, const Normalization& n);

/// Map X^n -> (denormalize N X)^n sending x to its components along each surjection.
/// Only defined for cosimplicial input; each component is an isomorphism.
CosimplicialMap dold_kan_unit(const CosimplicialModule& x, int n_max);

struct LatchingObject {
  FgModule module;
  ModuleMap map;  // L^n -> X^n
};
struct MatchingObject {
  FgModule module;
  ModuleMap map;  // X^n -> M^n
};
LatchingObject latching(const CosimplicialModule& x, int n);
MatchingObject matching(const CosimplicialModule& x, int n);

/// Hom(X, W) levelwise, with the opposite orientation.
CosimplicialModule hom_into(const CosimplicialModule& x, const FgModule& w);

/// Levelwise additive functor given on objects and maps.
struct LevelFunctor {
  std::function<FgModule(const FgModule&)> on_object;
  std::function<ModuleMap(const ModuleMap&, const FgModule&, const FgModule&)> on_map;
};
CosimplicialModule apply_levelwise(const CosimplicialModule& x, const LevelFunctor& f);

/// A: base, alpha: A -> X^0 with d^0 alpha = d^1 alpha (cosimplicial),
/// or epsilon: X_0 -> A with epsilon d_0 = epsilon d_1 (simplicial).
struct AugmentedCosimplicialModule {
  FgModule base;
  ModuleMap augmentation;
  CosimplicialModule body;

  AugmentedCosimplicialModule(FgModule base, ModuleMap augmentation, CosimplicialModule body);

  /// Normalized complex with the base in degree -1 (cosimplicial) or 1 (simplicial).
  CochainComplex augmented_complex() const;
  /// Cohomotopy relative to the augmentation.
  FgModule relative_cohomotopy(int s) const;
};

/// Set maps s_{-1}: K_n -> K_{n+1} for n >= -1 on an augmented simplicial
/// module, given on coordinate vectors. They need not be additive.
struct LeftContraction {
  std::function<std::vector<Integer>(int n, const std::vector<Integer>& x)> map;
  int top = 0;  // identities are checked for n <= top
};

/// Exhaustively checks d_0 s = 1, d_{i+1} s = s d_i and s_{j+1} s = s s_j
/// on finite levels; returns the first failure.
std::optional<std::string> check_contraction(const AugmentedCosimplicialModule& k, const LeftContraction& c);

/// Verifies the contraction, then reports whether the augmented normalized
/// complex is exact in every computed degree.
bool contraction_acyclic(const AugmentedCosimplicialModule& k, const LeftContraction& c);

}  // namespace gres
