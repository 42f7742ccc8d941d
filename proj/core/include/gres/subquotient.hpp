#pragma once

#include "gres/module.hpp"
#include "gres/smith.hpp"

#include <optional>

namespace gres {

/// numerator / denominator for lattices denominator <= numerator <= Z^n,
/// where Z^n is the coordinate space of some ambient module. The quotient is
/// brought to a cyclic decomposition by a Smith normal form.
class Subquotient {
 public:
  Subquotient(const BaseRing& ring, Lattice numerator, const Lattice& denominator);

  const FgModule& module() const { return module_; }
  const Lattice& numerator() const { return numerator_; }
  /// Column j lifts generator j to the ambient coordinates.
  const Matrix& representatives() const { return reps_; }

  std::optional<std::vector<Integer>> try_project(std::span<const Integer> v) const;
  std::vector<Integer> project(std::span<const Integer> v) const;
  /// The map domain -> module() sending generator j to the class of columns[:, j] / denominator.
  ModuleMap project_map(const FgModule& domain, const Matrix& columns, const Integer& denominator = 1) const;
  /// module() -> ambient along the representatives.
  ModuleMap inclusion(const FgModule& ambient) const;

 private:
  FgModule module_;
  Lattice numerator_;
  Matrix reps_;
  Matrix proj_;
};

struct KernelResult {
  FgModule module;
  ModuleMap inclusion;
};

struct ImageResult {
  FgModule module;
  ModuleMap inclusion;
  ModuleMap corestriction;
};

struct CokernelResult {
  FgModule module;
  ModuleMap projection;
};

struct SubquotientResult {
  KernelResult kernel;
  ImageResult image;
  CokernelResult cokernel;
};

KernelResult kernel(const ModuleMap& f);
ImageResult image(const ModuleMap& f);
CokernelResult cokernel(const ModuleMap& f);
SubquotientResult subquotient(const ModuleMap& f);

/// The relation lattice of a module: relations among its cyclic generators.
Lattice relation_lattice(const FgModule& m);

/// ker(outgoing) / im(incoming) for incoming: A -> B, outgoing: B -> C.
class Homology {
 public:
  Homology(const ModuleMap& incoming, const ModuleMap& outgoing);
  /// Homology of 0 -> B -> C or of A -> B -> 0 style ends.
  static Homology cycles_mod(const FgModule& middle, const std::optional<ModuleMap>& incoming,
                             const std::optional<ModuleMap>& outgoing);

  const FgModule& module() const { return sq_.module(); }
  const Subquotient& subquotient() const { return sq_; }
  const FgModule& ambient() const { return ambient_; }

 private:
  Homology(FgModule ambient, Subquotient sq) : ambient_(std::move(ambient)), sq_(std::move(sq)) {}
  FgModule ambient_;
  Subquotient sq_;
};

/// The map H(src) -> H(dst) induced by a degreewise map f between the middle terms.
ModuleMap induced_on_homology(const Homology& src, const Homology& dst, const ModuleMap& f);

/// Solve f * h = g one generator of the domain of g at a time. Exact when
/// f is injective or the domain of g is free; otherwise the columnwise
/// solution may fail to respect relations and DomainError is thrown.
std::optional<ModuleMap> lift_columns(const ModuleMap& f, const ModuleMap& g);

/// True when f is an isomorphism; `inverse` receives the inverse.
bool is_isomorphism(const ModuleMap& f, ModuleMap* inverse = nullptr);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);

}  // namespace gres

namespace gres {

/// The module with generators e_0..e_{n-1} and the given relations (one
/// relation per column of `relations`), together with the projection from
/// the free module on the e_i.
CokernelResult presented_module(const BaseRing& ring, const Matrix& relations);

}  // namespace gres
