#include "gres/hom.hpp"

#include "gres/errors.hpp"
#include "gres/subquotient.hpp"

namespace gres {

HomModule::HomModule(FgModule source, FgModule target) : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_.ring() == target_.ring())) throw DomainError("Hom between modules over different rings");
  const BaseRing& ring = source_.ring();
  const std::size_t k = source_.ngens();
  const std::size_t l = target_.ngens();
  slot_.assign(k * l, -1);
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < l; ++i) {
    const Integer& e = target_.orders()[i];
    for (std::size_t j = 0; j < k; ++j) {
      const Integer& o = source_.orders()[j];
      Integer order, value;
      if (o == 0) {
        order = e;
        value = 1;
      } else if (e == 0) {
        continue;
      } else {
        order = gcd(o, e);
        value = e / order;
      }
      if (ring.is_unit_order(order)) continue;
      slot_[i * k + j] = static_cast<std::ptrdiff_t>(entries_.size());
      entries_.push_back({i, j, value});
      orders.push_back(order);
    }
  }
  module_ = FgModule(ring, std::move(orders));
}

const std::vector<ModuleMap>& HomModule::generators() const {
  if (!generators_built_) {
    for (const auto& en : entries_) {
      Matrix m(target_.ngens(), source_.ngens());
      m(en.row, en.col) = en.value;
      generators_.emplace_back(source_, target_, std::move(m));
    }
    generators_built_ = true;
  }
  return generators_;
}

void HomModule::accumulate(std::size_t row, std::size_t col, Integer raw, Matrix& out, std::size_t column) const {
  const Integer& e = target_.orders()[row];
  if (e != 0) raw = reduce(raw, e);
  if (raw == 0) return;
  std::ptrdiff_t s = slot_[row * source_.ngens() + col];
  if (s < 0) throw InvariantViolation("composite lands outside the admissible subgroup");
  const Integer& g = entries_[static_cast<std::size_t>(s)].value;
  if (raw % g != 0) throw InvariantViolation("composite entry is not a multiple of the generator");
  out(static_cast<std::size_t>(s), column) += raw / g;
}

std::vector<Integer> HomModule::coordinates(const ModuleMap& f) const {
  if (!(f.domain() == source_) || !(f.codomain() == target_)) throw DomainError("Hom coordinates: map has wrong type");
  if (f.denominator() != 1) throw DomainError("Hom coordinates: use element_of for fractional maps");
  return element_of(f).matrix().column(0);
}

ModuleMap HomModule::element_of(const ModuleMap& f) const {
  if (!(f.domain() == source_) || !(f.codomain() == target_)) throw DomainError("Hom coordinates: map has wrong type");
  const std::size_t k = source_.ngens();
  std::vector<Integer> c(entries_.size());
  for (std::size_t i = 0; i < target_.ngens(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Integer& v = f.matrix()(i, j);
      if (v == 0) continue;
      std::ptrdiff_t s = slot_[i * k + j];
      if (s < 0) throw InvariantViolation("Hom coordinates: entry outside the admissible subgroup");
      const Integer& g = entries_[static_cast<std::size_t>(s)].value;
      if (v % g != 0) throw InvariantViolation("Hom coordinates: entry is not a multiple of the generator");
      c[static_cast<std::size_t>(s)] = v / g;
    }
  return ModuleMap::element(module_, c, f.denominator());
}

ModuleMap HomModule::map_from(std::span<const Integer> coords, const Integer& denominator) const {
  if (coords.size() != entries_.size()) throw DomainError("Hom element has wrong length");
  Matrix m(target_.ngens(), source_.ngens());
  for (std::size_t s = 0; s < entries_.size(); ++s) m(entries_[s].row, entries_[s].col) = coords[s] * entries_[s].value;
  return ModuleMap(source_, target_, std::move(m), denominator);
}

ModuleMap HomModule::map_from(const ModuleMap& element) const {
  if (!(element.codomain() == module_) || element.domain().ngens() != 1)
    throw DomainError("Hom element has wrong type");
  return map_from(element.matrix().column(0), element.denominator());
}

ModuleMap precomposition(const ModuleMap& f, const HomModule& from, const HomModule& to) {
  if (!(from.source() == f.codomain()) || !(to.source() == f.domain()) || !(from.target() == to.target()))
    throw DomainError("precomposition: Hom modules do not match the map");
  // Generator (i, j, v) sends b_j to v w_i; after f, a_k goes to v f(j, k) w_i.
  const Matrix& a = f.matrix();
  Matrix out(to.ngens(), from.ngens());
  for (std::size_t s = 0; s < from.entries_.size(); ++s) {
    const auto& en = from.entries_[s];
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(en.col, k) != 0) to.accumulate(en.row, k, en.value * a(en.col, k), out, s);
  }
  return ModuleMap(from.module(), to.module(), std::move(out), f.denominator());
}

ModuleMap postcomposition(const ModuleMap& g, const HomModule& from, const HomModule& to) {
  if (!(from.target() == g.domain()) || !(to.target() == g.codomain()) || !(from.source() == to.source()))
    throw DomainError("postcomposition: Hom modules do not match the map");
  // Generator (i, j, v) sends x_j to v m_i; after g, x_j goes to sum_r v g(r, i) n_r.
  const Matrix& a = g.matrix();
  Matrix out(to.ngens(), from.ngens());
  for (std::size_t s = 0; s < from.entries_.size(); ++s) {
    const auto& en = from.entries_[s];
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, en.row) != 0) to.accumulate(r, en.col, en.value * a(r, en.row), out, s);
  }
  return ModuleMap(from.module(), to.module(), std::move(out), g.denominator());
}

std::optional<ModuleMap> factor_through(const ModuleMap& f, const ModuleMap& g) {
  if (!(f.codomain() == g.codomain())) throw DomainError("factor_through: codomain mismatch");
  HomModule from(g.domain(), f.domain());
  HomModule to(g.domain(), f.codomain());
  auto x = lift_columns(postcomposition(f, from, to), to.element_of(g));
  if (!x) return std::nullopt;
  return from.map_from(*x);
}

std::optional<ModuleMap> extend_along(const ModuleMap& f, const ModuleMap& g) {
  if (!(f.domain() == g.domain())) throw DomainError("extend_along: domain mismatch");
  HomModule from(f.codomain(), g.codomain());
  HomModule to(f.domain(), g.codomain());
  auto x = lift_columns(precomposition(f, from, to), to.element_of(g));
  if (!x) return std::nullopt;
  return from.map_from(*x);
}

SplittingResult splitting_test(const ModuleMap& f) {
  SplittingResult r;
  r.section = factor_through(f, ModuleMap::identity(f.codomain()));
  r.retraction = extend_along(f, ModuleMap::identity(f.domain()));
  r.split_epi = r.section.has_value();
  r.split_mono = r.retraction.has_value();
  return r;
}

}  // namespace gres
