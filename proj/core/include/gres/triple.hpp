#pragma once

#include "gres/cosimplicial.hpp"
#include "gres/injective.hpp"
#include "gres/module.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gres {

/// An endofunctor with unit eta: M -> GM and multiplication mu: GGM -> GM.
class Triple {
 public:
  virtual ~Triple() = default;
  virtual FgModule apply(const FgModule& m) const = 0;
  /// G(f): G(dom f) -> G(cod f).
  virtual ModuleMap apply(const ModuleMap& f) const = 0;
  virtual ModuleMap unit(const FgModule& m) const = 0;
  virtual ModuleMap multiplication(const FgModule& m) const = 0;
  virtual std::string name() const = 0;

  /// G^k applied to a module or a map.
  FgModule power(const FgModule& m, int k) const;
  ModuleMap power(const ModuleMap& f, int k) const;
};

class IdentityTriple final : public Triple {
 public:
  FgModule apply(const FgModule& m) const override { return m; }
  ModuleMap apply(const ModuleMap& f) const override { return f; }
  ModuleMap unit(const FgModule& m) const override { return ModuleMap::identity(m); }
  ModuleMap multiplication(const FgModule& m) const override { return ModuleMap::identity(m); }
  std::string name() const override { return "identity"; }
};

/// GM = product over cogenerators W of W^{Hom(M, W)}, indexed by the whole finite Hom set.
///
/// Coordinates of GM are ordered by cogenerator, then by the mixed-radix index
/// of the homomorphism in the Hom module, then by the generators of W. G acts on
/// a map g: M -> N by sending the factor at f: N -> W to the factor at f g.
class CodensityTriple final : public Triple {
 public:
  static constexpr std::uint64_t default_limit = std::uint64_t(1) << 16;

  explicit CodensityTriple(InjectiveClass cls, std::uint64_t max_coordinates = default_limit);

  FgModule apply(const FgModule& m) const override;
  ModuleMap apply(const ModuleMap& f) const override;
  ModuleMap unit(const FgModule& m) const override;
  ModuleMap multiplication(const FgModule& m) const override;
  std::string name() const override { return "codensity " + cls_.str(); }

  std::uint64_t max_coordinates() const { return limit_; }
  /// Coordinates of GM without building it; throws SizeLimitExceeded past the limit.
  std::uint64_t coordinates(const FgModule& m) const;

 private:
  struct Data;
  const Data& data(const FgModule& m) const;
  std::uint64_t hom_index(std::size_t w, const Data& d, const ModuleMap& f) const;

  InjectiveClass cls_;
  std::uint64_t limit_;
  mutable std::map<std::vector<Integer>, std::shared_ptr<Data>> cache_;
};

/// Levels G^{n+1}A with d^i = G^i eta G^{n-i+1} and s^j = G^j mu G^{n-j}, augmented by eta_A.
AugmentedCosimplicialModule triple_resolution(const Triple& t, const FgModule& a, int n_max);

/// Unit, associativity and naturality checks; returns the first failure.
std::optional<std::string> check_triple_laws(const Triple& t, const FgModule& m);
std::optional<std::string> check_naturality(const Triple& t, const ModuleMap& f);

/// For an injective I with retraction r of eta_I, the left contraction
/// s_{-1} f = r G(f) on the augmented simplicial module Hom(G^{*+1}A, I) -> Hom(A, I).
struct TripleContraction {
  AugmentedCosimplicialModule augmented;
  LeftContraction contraction;
};
TripleContraction triple_contraction(const Triple& t, const FgModule& a, const FgModule& injective,
                                     const ModuleMap& retraction, int n_max);

}  // namespace gres
