#pragma once

#include "gres/cosimplicial.hpp"
#include "gres/module.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gres {

/// A finite-dimensional coalgebra over a field, given in a basis c_0 .. c_{d-1}.
///
/// The comultiplication is a (d*d) x d matrix whose row (i*d + j) holds the
/// coefficient of c_i (x) c_j; the counit is a 1 x d matrix.
class Coalgebra {
 public:
  Coalgebra(BaseRing ring, ModuleMap comultiplication, ModuleMap counit);

  /// k with Delta(1) = 1 (x) 1.
  static Coalgebra trivial(const BaseRing& ring);
  /// Basis 1, x with x primitive.
  static Coalgebra exterior(const BaseRing& ring);
  /// Functions on n points dualized: every basis element is group-like.
  static Coalgebra group_like(const BaseRing& ring, std::size_t points);
  /// C (x) D with the shuffled comultiplication.
  static Coalgebra tensor(const Coalgebra& c, const Coalgebra& d);

  const BaseRing& ring() const { return ring_; }
  std::size_t dim() const { return module_.ngens(); }
  const FgModule& module() const { return module_; }
  const ModuleMap& comultiplication() const { return delta_; }
  const ModuleMap& counit() const { return counit_; }
  /// Delta(g) = g (x) g and eps(g) = 1 for the basis element g.
  bool is_group_like(std::size_t g) const;

 private:
  BaseRing ring_;
  FgModule module_;
  ModuleMap delta_, counit_;
};

enum class Side { right, left };

/// rho: M -> M (x) C for a right comodule, C (x) M for a left one, basis order row-major.
class Comodule {
 public:
  Comodule(const Coalgebra& c, Side side, ModuleMap coaction);

  /// k coacted on through the group-like basis element g.
  static Comodule at_group_like(const Coalgebra& c, Side side, std::size_t g);
  /// C over itself.
  static Comodule regular(const Coalgebra& c, Side side);
  /// k^n with rho(m) = m (x) 1 over the trivial coalgebra.
  static Comodule trivial(const Coalgebra& c, Side side, std::size_t dim);

  Side side() const { return side_; }
  std::size_t dim() const { return module_.ngens(); }
  const FgModule& module() const { return module_; }
  const ModuleMap& coaction() const { return rho_; }

 private:
  Side side_;
  FgModule module_;
  ModuleMap rho_;
};

/// Levels MA (x) C^{(x)n} (x) MB with d^0 = rho_A (x) id, d^{n+1} = id (x) rho_B,
/// d^i = Delta on the i-th C factor and s^j = eps on factor j + 1.
CosimplicialModule cobar_complex(const Coalgebra& c, const Comodule& ma, const Comodule& mb, int n_max,
                                 std::uint64_t max_dim = std::uint64_t(1) << 12);

/// Cotor_s for s <= s_max, as pi^s of the cobar construction truncated at s_max + 1.
std::vector<FgModule> cotor(const Coalgebra& c, const Comodule& ma, const Comodule& mb, int s_max,
                            std::uint64_t max_dim = std::uint64_t(1) << 12);

struct CollapseReport {
  bool collapses = false;
  std::vector<FgModule> cotor;
  int s_max = 0;
  std::string str() const;
};

/// Cotor_0 = MC and Cotor_s = 0 for 0 < s <= s_max. Only the truncated range is verified.
CollapseReport collapses_strongly(const Coalgebra& c, const Comodule& ma, const Comodule& mb, const FgModule& mc,
                                  int s_max);

}  // namespace gres
