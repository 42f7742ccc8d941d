#pragma once

#include "gres/module.hpp"

#include <optional>
#include <vector>

namespace gres {

/// Hom(source, target) as a module. A homomorphism between cyclic
/// decompositions is a matrix whose (i, j) entry lies in Hom(Z/o_j, Z/e_i),
/// itself cyclic, so Hom is the direct sum of those entry groups. Generators
/// are the elementary maps, ordered lexicographically by (row, column).
class HomModule {
 public:
  HomModule(FgModule source, FgModule target);

  const FgModule& source() const { return source_; }
  const FgModule& target() const { return target_; }
  const FgModule& module() const { return module_; }
  std::size_t ngens() const { return entries_.size(); }
  /// The elementary maps, built on first use.
  const std::vector<ModuleMap>& generators() const;

  /// Coordinates of f as an element of module() (a map from the free rank-one module).
  ModuleMap element_of(const ModuleMap& f) const;
  std::vector<Integer> coordinates(const ModuleMap& f) const;
  /// sum_k coords[k] * generator_k, divided by `denominator`.
  ModuleMap map_from(std::span<const Integer> coords, const Integer& denominator = 1) const;
  /// Inverse of element_of.
  ModuleMap map_from(const ModuleMap& element) const;

 private:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Integer value;
  };
  FgModule source_, target_, module_;
  std::vector<Entry> entries_;
  std::vector<std::ptrdiff_t> slot_;  // row * source.ngens + col -> generator index or -1
  mutable std::vector<ModuleMap> generators_;
  mutable bool generators_built_ = false;

  friend ModuleMap precomposition(const ModuleMap& f, const HomModule& from, const HomModule& to);
  friend ModuleMap postcomposition(const ModuleMap& g, const HomModule& from, const HomModule& to);
  /// Writes raw entry (row, col) of a composite into column `column` of `out`.
  void accumulate(std::size_t row, std::size_t col, Integer raw, Matrix& out, std::size_t column) const;
};

/// f^*: Hom(B, W) -> Hom(A, W) for f: A -> B.
ModuleMap precomposition(const ModuleMap& f, const HomModule& from, const HomModule& to);
/// g_*: Hom(X, M) -> Hom(X, N) for g: M -> N.
ModuleMap postcomposition(const ModuleMap& g, const HomModule& from, const HomModule& to);

struct SplittingResult {
  bool split_epi = false;
  bool split_mono = false;
  std::optional<ModuleMap> section;     // f * section = id
  std::optional<ModuleMap> retraction;  // retraction * f = id
};

SplittingResult splitting_test(const ModuleMap& f);

/// h: X -> M with f * h = g, if any (f: M -> N, g: X -> N).
std::optional<ModuleMap> factor_through(const ModuleMap& f, const ModuleMap& g);
/// h: B -> W with h * f = g, if any (f: A -> B, g: A -> W).
std::optional<ModuleMap> extend_along(const ModuleMap& f, const ModuleMap& g);

}  // namespace gres
