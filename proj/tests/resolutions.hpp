#pragma once

// Alternative weak resolutions built from a step resolution by padding and reshuffling.

#include "gres/cosimplicial.hpp"
#include "gres/injective.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace randomized {

using namespace gres;

inline ModuleMap permutation(const FgModule& m, const std::vector<std::size_t>& perm, FgModule* image) {
  std::vector<Integer> orders(m.ngens());
  Matrix p(m.ngens(), m.ngens());
  for (std::size_t j = 0; j < m.ngens(); ++j) {
    orders[perm[j]] = m.orders()[j];
    p(perm[j], j) = 1;
  }
  *image = FgModule(m.ring(), orders);
  return ModuleMap(m, *image, p);
}

/// The step resolution with a contractible J -> J spliced in at a random degree,
/// then conjugated by random permutations of the generators.
inline AugmentedCosimplicialModule padded_resolution(std::mt19937_64& rng, const InjectiveClass& cls,
                                                     const Resolution& r, int n_max) {
  const CochainComplex& c = r.complex;
  const int hi = c.hi();
  const FgModule& j = cls.modules()[rng() % cls.modules().size()];
  const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(hi, 1)));
  auto padded = [&](int n) { return n == k || n == k + 1; };
  auto sum = [&](const FgModule& m) {
    std::vector<Integer> o = m.orders();
    o.insert(o.end(), j.orders().begin(), j.orders().end());
    return FgModule(m.ring(), o);
  };
  std::vector<FgModule> terms;
  for (int n = 0; n <= std::max(hi, k + 1); ++n) terms.push_back(padded(n) ? sum(c.term(n)) : c.term(n));
  auto widen = [&](const ModuleMap& f, int from, int to) {
    const FgModule& s = terms[static_cast<std::size_t>(from)];
    const FgModule& t = terms[static_cast<std::size_t>(to)];
    Matrix m(t.ngens(), s.ngens());
    m.set_block(0, 0, f.matrix());
    if (from == k && to == k + 1)
      for (std::size_t i = 0; i < j.ngens(); ++i) m(f.codomain().ngens() + i, f.domain().ngens() + i) = 1;
    return ModuleMap(s, t, m);
  };
  std::vector<ModuleMap> diffs;
  for (int n = 0; n + 1 < static_cast<int>(terms.size()); ++n)
    diffs.push_back(widen(c.differential(n), n, n + 1));
  Matrix aug(terms[0].ngens(), r.base.ngens());
  aug.set_block(0, 0, r.augmentation.matrix());

  std::vector<ModuleMap> perms;
  std::vector<FgModule> shuffled;
  for (const auto& t : terms) {
    std::vector<std::size_t> perm(t.ngens());
    std::iota(perm.begin(), perm.end(), std::size_t(0));
    std::shuffle(perm.begin(), perm.end(), rng);
    FgModule image;
    perms.push_back(permutation(t, perm, &image));
    shuffled.push_back(image);
  }
  std::vector<ModuleMap> sdiffs;
  for (std::size_t n = 0; n < diffs.size(); ++n) {
    ModuleMap inverse;
    is_isomorphism(perms[n], &inverse);
    sdiffs.push_back(perms[n + 1] * diffs[n] * inverse);
  }
  CochainComplex out(c.ring(), 0, shuffled, sdiffs, !c.open_above());
  CosimplicialModule x = denormalize(out, n_max);
  ModuleMap a = perms[0] * ModuleMap(r.base, terms[0], aug);
  return AugmentedCosimplicialModule(r.base, ModuleMap(r.base, x.level(0), a.matrix()), x);
}

}  // namespace randomized
