#pragma once

#include "gres/module.hpp"
#include "gres/subquotient.hpp"

#include <optional>
#include <vector>

namespace gres {

/// Cochain complex C^lo -> ... -> C^hi with differentials of degree +1.
///
/// A bounded complex is zero outside [lo, hi]. A complex that is open above
/// is only known up to hi: asking for C^{hi+1} or for H^hi raises
/// DegreeOutOfRange. Open below is the mirror image, used for truncated
/// chain complexes, which are stored with negated degrees.
class CochainComplex {
 public:
  CochainComplex() = default;
  CochainComplex(BaseRing ring, int lo, std::vector<FgModule> terms, std::vector<ModuleMap> differentials,
                 bool bounded = true);

  static CochainComplex zero(const BaseRing& ring) { return CochainComplex(ring, 0, {}, {}); }
  static CochainComplex concentrated(const FgModule& m, int degree);

  const BaseRing& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  std::size_t length() const { return terms_.size(); }
  bool bounded() const { return !open_above_ && !open_below_; }
  bool open_above() const { return open_above_; }
  bool open_below() const { return open_below_; }
  CochainComplex with_open_bottom() const;
  bool contains(int n) const { return n >= lo_ && n <= hi(); }

  const FgModule& term(int n) const;
  /// delta^n: C^n -> C^{n+1}.
  ModuleMap differential(int n) const;

  Homology cohomology_data(int n) const;
  FgModule cohomology(int n) const { return cohomology_data(n).module(); }
  /// True when every known cohomology group vanishes.
  bool is_acyclic() const;
  /// The same complex restricted to degrees <= top and marked open above.
  CochainComplex truncated(int top) const;

  std::string str() const;

 private:
  BaseRing ring_ = BaseRing::integers();
  int lo_ = 0;
  std::vector<FgModule> terms_;
  std::vector<ModuleMap> diffs_;
  bool open_above_ = false;
  bool open_below_ = false;
  FgModule zero_;
};

/// f^n: C^n -> D^n for n in the source's range.
class CochainMap {
 public:
  CochainMap() = default;
  CochainMap(CochainComplex source, CochainComplex target, std::vector<ModuleMap> components);

  static CochainMap identity(const CochainComplex& c);
  static CochainMap zero(const CochainComplex& source, const CochainComplex& target);

  const CochainComplex& source() const { return source_; }
  const CochainComplex& target() const { return target_; }
  ModuleMap component(int n) const;
  const std::vector<ModuleMap>& components() const { return components_; }

  CochainMap operator*(const CochainMap& rhs) const;
  CochainMap operator+(const CochainMap& rhs) const;
  CochainMap operator-(const CochainMap& rhs) const;
  bool operator==(const CochainMap& other) const;

  ModuleMap on_cohomology(int n) const;

 private:
  CochainComplex source_;
  CochainComplex target_;
  std::vector<ModuleMap> components_;
};

/// h^n: C^n -> D^{n-1} with f - g = delta h + h delta.
struct CochainHomotopy {
  int lo = 0;
  std::vector<ModuleMap> maps;
  const ModuleMap& at(int n) const { return maps.at(static_cast<std::size_t>(n - lo)); }
};

/// Decides whether f and g are cochain homotopic and returns a witness.
std::optional<CochainHomotopy> chain_homotopic(const CochainMap& f, const CochainMap& g);
bool verify_homotopy(const CochainMap& f, const CochainMap& g, const CochainHomotopy& h);

/// cone^n = C^{n+1} + D^n with d(c, b) = (-delta c, f c + delta b).
CochainComplex mapping_cone(const CochainMap& f);

/// Induced maps on all cohomology groups are isomorphisms within [lo, hi].
bool is_quasi_isomorphism(const CochainMap& f, int lo, int hi);

/// Contractible means id is homotopic to 0.
bool is_contractible(const CochainComplex& c);

/// Hom(C, W) with Hom(C^n, W) in degree -n.
CochainComplex hom_into(const CochainComplex& c, const FgModule& w);
/// Hom(f, W): Hom(D, W) -> Hom(C, W).
CochainMap hom_into(const CochainMap& f, const FgModule& w);

}  // namespace gres
