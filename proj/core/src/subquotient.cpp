#include "gres/subquotient.hpp"

#include "gres/errors.hpp"

namespace gres {

namespace {

Lattice image_with_relations(const ModuleMap& f) {
  return Lattice::span(hstack(f.matrix(), relation_lattice(f.codomain()).basis()));
}

}  // namespace

Lattice relation_lattice(const FgModule& m) { return Lattice::relations(m.orders()); }

Subquotient::Subquotient(const BaseRing& ring, Lattice numerator, const Lattice& denominator)
    : numerator_(ring.kind() == BaseRing::Kind::rationals ? numerator.saturation() : std::move(numerator)) {
  const std::size_t r = numerator_.rank();
  Matrix x(r, denominator.rank());
  for (std::size_t j = 0; j < denominator.rank(); ++j) {
    auto c = numerator_.coordinates(denominator.basis().column(j));
    if (!c) throw DomainError("subquotient: denominator is not contained in numerator");
    for (std::size_t i = 0; i < r; ++i) x(i, j) = (*c)[i];
  }
  SmithForm s = smith_normal_form(x, {.left = true, .left_inverse = true, .right = false, .right_inverse = false});
  std::vector<std::size_t> kept;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < r; ++i) {
    Integer d = i < s.rank ? s.D(i, i) : Integer(0);
    if (ring.is_unit_order(d)) continue;
    kept.push_back(i);
    orders.push_back(d);
  }
  module_ = FgModule(ring, std::move(orders));
  reps_ = numerator_.basis() * s.U_inverse.select_cols(kept);
  proj_ = s.U.select_rows(kept);
}

std::optional<std::vector<Integer>> Subquotient::try_project(std::span<const Integer> v) const {
  auto c = numerator_.coordinates(v);
  if (!c) return std::nullopt;
  return module_.reduce(proj_.apply(*c));
}

std::vector<Integer> Subquotient::project(std::span<const Integer> v) const {
  auto p = try_project(v);
  if (!p) throw DomainError("subquotient: element does not lie in the numerator");
  return *p;
}

ModuleMap Subquotient::project_map(const FgModule& domain, const Matrix& columns, const Integer& denominator) const {
  Matrix m(module_.ngens(), columns.cols());
  for (std::size_t j = 0; j < columns.cols(); ++j) m.set_column(j, project(columns.column(j)));
  return ModuleMap(domain, module_, std::move(m), denominator);
}

ModuleMap Subquotient::inclusion(const FgModule& ambient) const { return ModuleMap(module_, ambient, reps_); }

KernelResult kernel(const ModuleMap& f) {
  Lattice num = preimage(f.matrix(), relation_lattice(f.codomain()));
  Subquotient sq(f.domain().ring(), std::move(num), relation_lattice(f.domain()));
  return {sq.module(), sq.inclusion(f.domain())};
}

ImageResult image(const ModuleMap& f) {
  Subquotient sq(f.domain().ring(), image_with_relations(f), relation_lattice(f.codomain()));
  ModuleMap incl = sq.inclusion(f.codomain());
  ModuleMap core = sq.project_map(f.domain(), f.matrix(), f.denominator());
  return {sq.module(), std::move(incl), std::move(core)};
}

CokernelResult cokernel(const ModuleMap& f) {
  const std::size_t n = f.codomain().ngens();
  Subquotient sq(f.domain().ring(), Lattice::full(n), image_with_relations(f));
  ModuleMap proj = sq.project_map(f.codomain(), Matrix::identity(n));
  return {sq.module(), std::move(proj)};
}

SubquotientResult subquotient(const ModuleMap& f) { return {kernel(f), image(f), cokernel(f)}; }

Homology::Homology(const ModuleMap& incoming, const ModuleMap& outgoing)
    : Homology(cycles_mod(incoming.codomain(), incoming, outgoing)) {}

Homology Homology::cycles_mod(const FgModule& middle, const std::optional<ModuleMap>& incoming,
                              const std::optional<ModuleMap>& outgoing) {
  if (incoming && !(incoming->codomain() == middle)) throw DomainError("homology: incoming map has wrong codomain");
  if (outgoing && !(outgoing->domain() == middle)) throw DomainError("homology: outgoing map has wrong domain");
  Lattice rel = relation_lattice(middle);
  Lattice cycles = outgoing ? preimage(outgoing->matrix(), relation_lattice(outgoing->codomain()))
                            : Lattice::full(middle.ngens());
  Lattice bounds = incoming ? image_with_relations(*incoming) : rel;
  return Homology(middle, Subquotient(middle.ring(), std::move(cycles), bounds));
}

ModuleMap induced_on_homology(const Homology& src, const Homology& dst, const ModuleMap& f) {
  if (!(f.domain() == src.ambient()) || !(f.codomain() == dst.ambient()))
    throw DomainError("induced_on_homology: map does not match the complexes");
  Matrix images = f.matrix() * src.subquotient().representatives();
  return dst.subquotient().project_map(src.module(), images, f.denominator());
}

std::optional<ModuleMap> lift_columns(const ModuleMap& f, const ModuleMap& g) {
  if (!(f.codomain() == g.codomain())) throw DomainError("lift: maps have different codomains");
  const FgModule& m = f.domain();
  const FgModule& x = g.domain();
  const bool rational = m.ring().kind() == BaseRing::Kind::rationals;
  Matrix system = rational ? f.matrix() : hstack(f.matrix(), relation_lattice(f.codomain()).basis());
  SmithForm s = smith_normal_form(system, {.left = true, .left_inverse = false, .right = true, .right_inverse = false});

  std::vector<ModuleMap> columns;
  for (std::size_t j = 0; j < x.ngens(); ++j) {
    std::vector<Integer> y = g.matrix().column(j);
    if (rational)
      for (auto& v : y) v *= f.denominator();
    std::vector<Integer> uy = s.U.apply(y);
    Integer den = 1;
    for (std::size_t i = 0; i < uy.size(); ++i) {
      if (i < s.rank) {
        if (!rational && uy[i] % s.D(i, i) != 0) return std::nullopt;
        if (rational) den = lcm(den, s.D(i, i) / gcd(uy[i], s.D(i, i)));
      } else if (uy[i] != 0) {
        return std::nullopt;
      }
    }
    std::vector<Integer> z(system.cols());
    for (std::size_t i = 0; i < s.rank; ++i) z[i] = uy[i] * den / s.D(i, i);
    std::vector<Integer> sol = s.V.apply(z);
    sol.resize(m.ngens());
    columns.push_back(ModuleMap::element(m, sol, den * g.denominator()));
  }
  try {
    return from_element_columns(x, m, columns);
  } catch (const InvariantViolation&) {
    throw DomainError("lift_columns: columnwise lift does not respect relations of the source");
  }
}

bool is_injective(const ModuleMap& f) { return kernel(f).module.is_zero(); }

bool is_surjective(const ModuleMap& f) { return cokernel(f).module.is_zero(); }

bool is_isomorphism(const ModuleMap& f, ModuleMap* inverse) {
  if (!is_injective(f) || !is_surjective(f)) return false;
  if (inverse) {
    auto inv = lift_columns(f, ModuleMap::identity(f.codomain()));
    if (!inv) throw DomainError("is_isomorphism: bijective map without inverse");
    *inverse = *inv;
  }
  return true;
}

}  // namespace gres

namespace gres {

CokernelResult presented_module(const BaseRing& ring, const Matrix& relations) {
  FgModule gens = FgModule::free(ring, relations.rows());
  FgModule rels = FgModule::free(ring, relations.cols());
  return cokernel(ModuleMap(rels, gens, relations));
}

}  // namespace gres
