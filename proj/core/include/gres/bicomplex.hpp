#pragma once

#include "gres/complex.hpp"
#include "gres/cosimplicial.hpp"
#include "gres/module.hpp"

#include <string>
#include <vector>

namespace gres {

/// Entries C^{p,q} on a rectangle with anticommuting differentials
/// h: C^{p,q} -> C^{p+1,q} and v: C^{p,q} -> C^{p,q+1}. A simplicial
/// direction is stored with negated degrees, like chain complexes.
class Bicomplex {
 public:
  Bicomplex() = default;
  /// entries[p - p_lo][q - q_lo]; horizontal has one row fewer, vertical one column fewer.
  Bicomplex(BaseRing ring, int p_lo, int q_lo, std::vector<std::vector<FgModule>> entries,
            std::vector<std::vector<ModuleMap>> horizontal, std::vector<std::vector<ModuleMap>> vertical);

  const BaseRing& ring() const { return ring_; }
  int p_lo() const { return p_lo_; }
  int p_hi() const { return p_lo_ + static_cast<int>(entries_.size()) - 1; }
  int q_lo() const { return q_lo_; }
  int q_hi() const { return q_lo_ + (entries_.empty() ? 0 : static_cast<int>(entries_.front().size())) - 1; }

  /// Zero outside the rectangle.
  const FgModule& entry(int p, int q) const;
  ModuleMap horizontal(int p, int q) const;
  ModuleMap vertical(int p, int q) const;

  std::string str() const;

 private:
  bool inside(int p, int q) const { return p >= p_lo_ && p <= p_hi() && q >= q_lo_ && q <= q_hi(); }
  BaseRing ring_ = BaseRing::integers();
  int p_lo_ = 0, q_lo_ = 0;
  std::vector<std::vector<FgModule>> entries_;
  std::vector<std::vector<ModuleMap>> horizontal_, vertical_;
  FgModule zero_;
};

/// Tot^n = sum over p + q = n of C^{p,q}, ordered by p, with differential h + v.
struct TotalComplex {
  CochainComplex complex;
  /// filtration[n - lo][k] is the p of generator k of Tot^n.
  std::vector<std::vector<int>> filtration;
};
TotalComplex total_complex(const Bicomplex& b);

/// X^{m,n}: rows are the horizontal objects X^{*,n}, columns the vertical X^{m,*}.
class BicosimplicialModule {
 public:
  BicosimplicialModule() = default;
  /// Checks matching levels and that horizontal and vertical structure maps commute.
  BicosimplicialModule(std::vector<CosimplicialModule> rows, std::vector<CosimplicialModule> columns);
  static BicosimplicialModule trusted(std::vector<CosimplicialModule> rows, std::vector<CosimplicialModule> columns);

  int m_max() const { return static_cast<int>(columns_.size()) - 1; }
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  Orientation horizontal_orientation() const { return rows_.front().orientation(); }
  Orientation vertical_orientation() const { return columns_.front().orientation(); }
  const BaseRing& ring() const { return rows_.front().ring(); }
  const FgModule& level(int m, int n) const { return rows_.at(static_cast<std::size_t>(n)).level(m); }
  const CosimplicialModule& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
  const CosimplicialModule& column(int m) const { return columns_.at(static_cast<std::size_t>(m)); }

  void check_identities() const;

 private:
  void check_shapes() const;
  std::vector<CosimplicialModule> rows_, columns_;
};

/// Dold-Kan in both directions. Horizontal input degrees must suit `horizontal`,
/// vertical ones `vertical` (degrees <= 0 for a simplicial direction).
BicosimplicialModule denormalize(const Bicomplex& b, int m_max, int n_max, Orientation horizontal,
                                 Orientation vertical);
/// Normalization in both directions; the vertical differential carries the sign (-1)^p.
Bicomplex normalize(const BicosimplicialModule& x);

/// Levels X^{n,n}; both directions must have the same orientation.
CosimplicialModule diagonal(const BicosimplicialModule& x);

/// X^m (x) Y^n with f (x) id horizontally and id (x) g vertically.
BicosimplicialModule external_tensor(const CosimplicialModule& x, const CosimplicialModule& y);
/// con(X): X^{m,n} = X^m for all n.
BicosimplicialModule vertically_constant(const CosimplicialModule& x, int n_max,
                                         Orientation vertical = Orientation::cosimplicial);

struct EzReport {
  bool iso = false;
  std::vector<FgModule> diagonal;  // pi^s of the diagonal
  std::vector<FgModule> total;     // H^s of Tot of the double normalization
};
/// Compares the two sides in degrees 0..degree_bound; both truncations must exceed the bound.
EzReport ez_compare(const BicosimplicialModule& x, int degree_bound);

}  // namespace gres
