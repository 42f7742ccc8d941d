#include "gres/triple.hpp"

#include "gres/enumerate.hpp"
#include "gres/errors.hpp"
#include "gres/hom.hpp"

namespace gres {

FgModule Triple::power(const FgModule& m, int k) const {
  FgModule out = m;
  for (int i = 0; i < k; ++i) out = apply(out);
  return out;
}

ModuleMap Triple::power(const ModuleMap& f, int k) const {
  ModuleMap out = f;
  for (int i = 0; i < k; ++i) out = apply(out);
  return out;
}

struct CodensityTriple::Data {
  FgModule gamma;
  std::vector<HomModule> homs;
  std::vector<ElementIndexer> indexers;
  std::vector<std::size_t> offsets;
};

CodensityTriple::CodensityTriple(InjectiveClass cls, std::uint64_t max_coordinates)
    : cls_(std::move(cls)), limit_(max_coordinates) {
  if (cls_.mode() != InjectiveClass::Mode::cogenerators) throw DomainError("codensity triple needs cogenerators");
  if (!cls_.ring().is_finite()) throw DomainError("codensity triple needs a finite base ring");
}

std::uint64_t CodensityTriple::coordinates(const FgModule& m) const {
  std::uint64_t total = 0;
  for (const auto& w : cls_.modules()) {
    // |Hom(M, W)| is the product of |Hom(Z/o, Z/e)| = gcd(o, e) over pairs of generators.
    std::uint64_t count = 1;
    for (const auto& o : m.orders())
      for (const auto& e : w.orders()) {
        const std::uint64_t ord = gcd(o, e).convert_to<std::uint64_t>();
        if (count > limit_ / ord) throw SizeLimitExceeded("codensity triple: Hom(" + m.str() + ", " + w.str() + ") too large");
        count *= ord;
      }
    total += count * w.ngens();
    if (total > limit_)
      throw SizeLimitExceeded("codensity triple: G(" + m.str() + ") exceeds " + std::to_string(limit_) + " coordinates");
  }
  return total;
}

const CodensityTriple::Data& CodensityTriple::data(const FgModule& m) const {
  if (!(m.ring() == cls_.ring())) throw DomainError("codensity triple: module over a different ring");
  auto it = cache_.find(m.orders());
  if (it != cache_.end()) return *it->second;
  coordinates(m);
  auto d = std::make_shared<Data>();
  std::vector<Integer> orders;
  for (const auto& w : cls_.modules()) {
    d->homs.emplace_back(m, w);
    d->indexers.emplace_back(d->homs.back().module());
    d->offsets.push_back(orders.size());
    for (std::uint64_t k = 0; k < d->indexers.back().size(); ++k)
      orders.insert(orders.end(), w.orders().begin(), w.orders().end());
  }
  d->gamma = FgModule(cls_.ring(), std::move(orders));
  return *cache_.emplace(m.orders(), std::move(d)).first->second;
}

std::uint64_t CodensityTriple::hom_index(std::size_t w, const Data& d, const ModuleMap& f) const {
  return d.indexers[w].index(d.homs[w].coordinates(f));
}

FgModule CodensityTriple::apply(const FgModule& m) const { return data(m).gamma; }

ModuleMap CodensityTriple::unit(const FgModule& m) const {
  const Data& d = data(m);
  Matrix out(d.gamma.ngens(), m.ngens());
  for (std::size_t i = 0; i < d.homs.size(); ++i) {
    const std::size_t w = cls_.modules()[i].ngens();
    for (std::uint64_t k = 0; k < d.indexers[i].size(); ++k) {
      ModuleMap f = d.homs[i].map_from(d.indexers[i].element(k));
      out.set_block(d.offsets[i] + k * w, 0, f.matrix());
    }
  }
  return ModuleMap(m, d.gamma, std::move(out));
}

ModuleMap CodensityTriple::apply(const ModuleMap& g) const {
  const Data& src = data(g.domain());
  const Data& dst = data(g.codomain());
  Matrix out(dst.gamma.ngens(), src.gamma.ngens());
  for (std::size_t i = 0; i < dst.homs.size(); ++i) {
    const std::size_t w = cls_.modules()[i].ngens();
    // The factor at f: N -> W reads the factor at f g, whose coordinates are linear in f.
    ModuleMap pre = precomposition(g, dst.homs[i], src.homs[i]);
    for (std::uint64_t k = 0; k < dst.indexers[i].size(); ++k) {
      std::vector<Integer> coords = src.homs[i].module().reduce(pre.matrix().apply(dst.indexers[i].element(k)));
      const std::uint64_t from = src.indexers[i].index(coords);
      for (std::size_t r = 0; r < w; ++r) out(dst.offsets[i] + k * w + r, src.offsets[i] + from * w + r) = 1;
    }
  }
  return ModuleMap(src.gamma, dst.gamma, std::move(out));
}

ModuleMap CodensityTriple::multiplication(const FgModule& m) const {
  const Data& inner = data(m);
  const Data& outer = data(inner.gamma);
  Matrix out(inner.gamma.ngens(), outer.gamma.ngens());
  for (std::size_t i = 0; i < inner.homs.size(); ++i) {
    const FgModule& wmod = cls_.modules()[i];
    const std::size_t w = wmod.ngens();
    for (std::uint64_t k = 0; k < inner.indexers[i].size(); ++k) {
      // The projection of GM onto its factor at (i, k), as a point of Hom(GM, W_i).
      Matrix proj(w, inner.gamma.ngens());
      for (std::size_t r = 0; r < w; ++r) proj(r, inner.offsets[i] + k * w + r) = 1;
      const std::uint64_t from = hom_index(i, outer, ModuleMap(inner.gamma, wmod, std::move(proj)));
      for (std::size_t r = 0; r < w; ++r) out(inner.offsets[i] + k * w + r, outer.offsets[i] + from * w + r) = 1;
    }
  }
  return ModuleMap(outer.gamma, inner.gamma, std::move(out));
}

AugmentedCosimplicialModule triple_resolution(const Triple& t, const FgModule& a, int n_max) {
  if (n_max < 0) throw DomainError("triple resolution: negative truncation");
  std::vector<FgModule> g{a};
  for (int k = 1; k <= n_max + 1; ++k) g.push_back(t.apply(g.back()));
  auto at = [&](int k) -> const FgModule& { return g[static_cast<std::size_t>(k)]; };
  std::vector<FgModule> levels;
  for (int n = 0; n <= n_max; ++n) levels.push_back(at(n + 1));
  std::vector<std::vector<ModuleMap>> cof, cod;
  for (int n = 0; n < n_max; ++n) {
    std::vector<ModuleMap> fs, ss;
    for (int i = 0; i <= n + 1; ++i) fs.push_back(t.power(t.unit(at(n + 1 - i)), i));
    for (int j = 0; j <= n; ++j) ss.push_back(t.power(t.multiplication(at(n - j)), j));
    cof.push_back(std::move(fs));
    cod.push_back(std::move(ss));
  }
  CosimplicialModule x(Orientation::cosimplicial, a.ring(), std::move(levels), std::move(cof), std::move(cod));
  return AugmentedCosimplicialModule(a, t.unit(a), std::move(x));
}

std::optional<std::string> check_triple_laws(const Triple& t, const FgModule& m) {
  const FgModule gm = t.apply(m);
  const ModuleMap mu = t.multiplication(m);
  const ModuleMap id = ModuleMap::identity(gm);
  if (!(mu * t.unit(gm) == id)) return "mu . eta G != id on " + m.str();
  if (!(mu * t.apply(t.unit(m)) == id)) return "mu . G eta != id on " + m.str();
  if (!(mu * t.multiplication(gm) == mu * t.apply(mu))) return "mu . mu G != mu . G mu on " + m.str();
  return std::nullopt;
}

std::optional<std::string> check_naturality(const Triple& t, const ModuleMap& f) {
  if (!(t.apply(f) * t.unit(f.domain()) == t.unit(f.codomain()) * f)) return "eta is not natural for " + f.str();
  if (!(t.multiplication(f.codomain()) * t.power(f, 2) == t.apply(f) * t.multiplication(f.domain())))
    return "mu is not natural for " + f.str();
  return std::nullopt;
}

TripleContraction triple_contraction(const Triple& t, const FgModule& a, const FgModule& injective,
                                     const ModuleMap& retraction, int n_max) {
  if (!(retraction * t.unit(injective) == ModuleMap::identity(injective)))
    throw InvariantViolation("triple contraction: retraction does not split the unit");
  AugmentedCosimplicialModule res = triple_resolution(t, a, n_max);
  CosimplicialModule k = hom_into(res.body, injective);
  // homs[k] = Hom(G^k A, I); level n of the contraction target is homs[n + 1].
  auto homs = std::make_shared<std::vector<HomModule>>();
  FgModule g = a;
  for (int i = 0; i <= n_max + 1; ++i) {
    homs->emplace_back(g, injective);
    g = t.apply(g);
  }
  AugmentedCosimplicialModule aug((*homs)[0].module(), precomposition(res.augmentation, (*homs)[1], (*homs)[0]), k);
  LeftContraction c;
  c.top = n_max - 1;
  c.map = [homs, &t, retraction](int n, const std::vector<Integer>& v) {
    const HomModule& from = (*homs)[static_cast<std::size_t>(n + 1)];
    const HomModule& to = (*homs)[static_cast<std::size_t>(n + 2)];
    ModuleMap f = from.map_from(v);
    return to.coordinates(retraction * t.apply(f));
  };
  return {std::move(aug), std::move(c)};
}

}  // namespace gres
