#pragma once

#include "gres/bicomplex.hpp"
#include "gres/complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gres {

/// A complex with each generator of each term assigned a filtration degree p;
/// F^p is spanned by the generators of degree at least p and must be a subcomplex.
using FilteredComplex = TotalComplex;

/// Entries E_r^{s,t} with s = p and t = p - n for filtration p and total degree n,
/// so d_r: E_r^{s,t} -> E_r^{s+r,t+r-1}.
struct SpectralPage {
  int r = 1;
  BaseRing ring = BaseRing::integers();
  std::map<std::pair<int, int>, FgModule> entries;
  std::map<std::pair<int, int>, ModuleMap> differentials;  // keyed by source (s, t)

  /// Zero for bidegrees outside the computed region.
  FgModule entry(int s, int t) const;
  std::string str() const;
};

/// H^n(Tot) against the E_inf entries of total degree n.
struct AbutmentReport {
  int degree = 0;  // t - s
  FgModule homology;
  std::map<int, FgModule> graded;  // F^sH / F^{s+1}H
  bool graded_match = false;       // each graded piece is isomorphic to its E_inf entry
  bool consistent = false;         // ranks add up and finite orders multiply
  bool split = false;              // H is the sum of its graded pieces; false flags an extension
};

struct SpectralSequence {
  std::vector<SpectralPage> pages;  // E_1 .. E_{r_max}
  SpectralPage e_inf;
  int stabilization = 1;  // first r with d_r' = 0 for all r' >= r
  std::vector<AbutmentReport> abutment;
};

SpectralSequence ss_pages(const FilteredComplex& c, int r_max);
SpectralSequence ss_pages(const Bicomplex& b, int r_max);
/// A cosimplicial simplicial module: cosimplicial rows, simplicial columns.
SpectralSequence ss_pages(const BicosimplicialModule& x, int r_max);

/// Returns a failure message unless d_r d_r = 0 and E_{r+1} = H(E_r, d_r) entrywise.
std::optional<std::string> check_page_transition(const SpectralPage& page, const SpectralPage& next);

/// pi_t of every column of a cosimplicial simplicial module, as a cosimplicial module in s.
CosimplicialModule levelwise_homotopy(const BicosimplicialModule& x, int t);

}  // namespace gres
