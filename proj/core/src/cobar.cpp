#include "gres/cobar.hpp"

#include "gres/errors.hpp"

#include <sstream>

namespace gres {

namespace {

FgModule space(const BaseRing& ring, std::size_t dim) { return FgModule::free(ring, dim); }

ModuleMap id(const BaseRing& ring, std::size_t dim) { return ModuleMap::identity(space(ring, dim)); }

/// f (x) g on row-major tensor bases.
ModuleMap kron(const ModuleMap& f, const ModuleMap& g) {
  const Matrix& a = f.matrix();
  const Matrix& b = g.matrix();
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      if (a(i1, j1) == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) out(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
    }
  const BaseRing& ring = f.domain().ring();
  return ModuleMap(space(ring, out.cols()), space(ring, out.rows()), std::move(out),
                   f.denominator() * g.denominator());
}

ModuleMap kron(const ModuleMap& f, const ModuleMap& g, const ModuleMap& h) { return kron(kron(f, g), h); }

std::size_t power(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void require_field(const BaseRing& ring) {
  if (!ring.is_field()) throw DomainError("cobar constructions need a field, got " + ring.name());
}

}  // namespace

Coalgebra::Coalgebra(BaseRing ring, ModuleMap comultiplication, ModuleMap counit)
    : ring_(std::move(ring)), delta_(std::move(comultiplication)), counit_(std::move(counit)) {
  require_field(ring_);
  const std::size_t d = delta_.domain().ngens();
  module_ = space(ring_, d);
  if (delta_.codomain().ngens() != d * d) throw InvariantViolation("comultiplication must map C to C (x) C");
  if (counit_.domain().ngens() != d || counit_.codomain().ngens() != 1)
    throw InvariantViolation("counit must map C to k");
  if (!(delta_.domain() == module_) || !(counit_.domain() == module_))
    throw InvariantViolation("coalgebra maps over the wrong space");
  const ModuleMap i = id(ring_, d);
  if (!(kron(delta_, i) * delta_ == kron(i, delta_) * delta_)) throw InvariantViolation("comultiplication is not coassociative");
  if (!(ModuleMap(module_, module_, (kron(counit_, i) * delta_).matrix(), (kron(counit_, i) * delta_).denominator()) == i))
    throw InvariantViolation("left counit law fails");
  if (!(ModuleMap(module_, module_, (kron(i, counit_) * delta_).matrix(), (kron(i, counit_) * delta_).denominator()) == i))
    throw InvariantViolation("right counit law fails");
}

Coalgebra Coalgebra::trivial(const BaseRing& ring) {
  return Coalgebra(ring, id(ring, 1), id(ring, 1));
}

Coalgebra Coalgebra::exterior(const BaseRing& ring) {
  require_field(ring);
  // Basis 1, x: Delta(1) = 1 (x) 1, Delta(x) = x (x) 1 + 1 (x) x.
  Matrix delta(4, 2);
  delta(0, 0) = 1;
  delta(2, 1) = 1;
  delta(1, 1) = 1;
  Matrix eps(1, 2);
  eps(0, 0) = 1;
  return Coalgebra(ring, ModuleMap(space(ring, 2), space(ring, 4), std::move(delta)),
                   ModuleMap(space(ring, 2), space(ring, 1), std::move(eps)));
}

Coalgebra Coalgebra::group_like(const BaseRing& ring, std::size_t points) {
  require_field(ring);
  if (points == 0) throw InvariantViolation("a group-like coalgebra needs at least one point");
  Matrix delta(points * points, points);
  Matrix eps(1, points);
  for (std::size_t i = 0; i < points; ++i) {
    delta(i * points + i, i) = 1;
    eps(0, i) = 1;
  }
  return Coalgebra(ring, ModuleMap(space(ring, points), space(ring, points * points), std::move(delta)),
                   ModuleMap(space(ring, points), space(ring, 1), std::move(eps)));
}

Coalgebra Coalgebra::tensor(const Coalgebra& c, const Coalgebra& d) {
  if (!(c.ring() == d.ring())) throw DomainError("coalgebras over different fields");
  const std::size_t m = c.dim(), n = d.dim();
  // (c1, c2, d1, d2) -> (c1, d1, c2, d2)
  Matrix shuffle(m * m * n * n, m * m * n * n);
  for (std::size_t c1 = 0; c1 < m; ++c1)
    for (std::size_t c2 = 0; c2 < m; ++c2)
      for (std::size_t d1 = 0; d1 < n; ++d1)
        for (std::size_t d2 = 0; d2 < n; ++d2) shuffle(((c1 * n + d1) * m + c2) * n + d2, ((c1 * m + c2) * n + d1) * n + d2) = 1;
  const FgModule big = space(c.ring(), m * m * n * n);
  ModuleMap delta = ModuleMap(big, big, std::move(shuffle)) * kron(c.comultiplication(), d.comultiplication());
  return Coalgebra(c.ring(), delta, kron(c.counit(), d.counit()));
}

bool Coalgebra::is_group_like(std::size_t g) const {
  if (g >= dim()) return false;
  std::vector<Integer> e(dim(), 0);
  e[g] = 1;
  std::vector<Integer> gg(dim() * dim(), 0);
  gg[g * dim() + g] = 1;
  ModuleMap point = ModuleMap::element(module_, e);
  return delta_ * point == ModuleMap::element(space(ring_, dim() * dim()), gg) &&
         counit_ * point == ModuleMap::identity(space(ring_, 1));
}

Comodule::Comodule(const Coalgebra& c, Side side, ModuleMap coaction) : side_(side), rho_(std::move(coaction)) {
  const std::size_t m = rho_.domain().ngens();
  module_ = space(c.ring(), m);
  if (!(rho_.domain() == module_) || rho_.codomain().ngens() != m * c.dim())
    throw InvariantViolation("coaction has the wrong shape");
  const ModuleMap im = id(c.ring(), m), ic = id(c.ring(), c.dim());
  auto as_endo = [&](const ModuleMap& f) { return ModuleMap(module_, module_, f.matrix(), f.denominator()); };
  if (side == Side::right) {
    if (!(kron(rho_, ic) * rho_ == kron(im, c.comultiplication()) * rho_))
      throw InvariantViolation("right coaction is not coassociative");
    if (!(as_endo(kron(im, c.counit()) * rho_) == im)) throw InvariantViolation("right coaction fails the counit law");
  } else {
    if (!(kron(ic, rho_) * rho_ == kron(c.comultiplication(), im) * rho_))
      throw InvariantViolation("left coaction is not coassociative");
    if (!(as_endo(kron(c.counit(), im) * rho_) == im)) throw InvariantViolation("left coaction fails the counit law");
  }
}

Comodule Comodule::at_group_like(const Coalgebra& c, Side side, std::size_t g) {
  if (!c.is_group_like(g)) throw InvariantViolation("basis element " + std::to_string(g) + " is not group-like");
  Matrix rho(c.dim(), 1);
  rho(g, 0) = 1;
  return Comodule(c, side, ModuleMap(space(c.ring(), 1), space(c.ring(), c.dim()), std::move(rho)));
}

Comodule Comodule::regular(const Coalgebra& c, Side side) { return Comodule(c, side, c.comultiplication()); }

Comodule Comodule::trivial(const Coalgebra& c, Side side, std::size_t dim) {
  if (c.dim() != 1) throw DomainError("trivial comodules of arbitrary dimension need the trivial coalgebra");
  return Comodule(c, side, id(c.ring(), dim));
}

CosimplicialModule cobar_complex(const Coalgebra& c, const Comodule& ma, const Comodule& mb, int n_max,
                                 std::uint64_t max_dim) {
  if (ma.side() != Side::right || mb.side() != Side::left)
    throw DomainError("cobar construction needs a right comodule and a left comodule");
  if (n_max < 1) throw DomainError("cobar construction needs n_max >= 1");
  const BaseRing& ring = c.ring();
  const std::size_t a = ma.dim(), b = mb.dim(), d = c.dim();
  std::vector<FgModule> levels;
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t size = a * b;
    for (int k = 0; k < n && size <= max_dim; ++k) size *= d;
    if (size > max_dim)
      throw SizeLimitExceeded("cobar level " + std::to_string(n) + " exceeds " + std::to_string(max_dim) + " dimensions");
    levels.push_back(space(ring, static_cast<std::size_t>(size)));
  }
  std::vector<std::vector<ModuleMap>> cof, cod;
  for (int n = 0; n < n_max; ++n) {
    std::vector<ModuleMap> fs, ss;
    fs.push_back(kron(ma.coaction(), id(ring, power(d, n) * b)));
    for (int i = 1; i <= n; ++i)
      fs.push_back(kron(id(ring, a * power(d, i - 1)), c.comultiplication(), id(ring, power(d, n - i) * b)));
    fs.push_back(kron(id(ring, a * power(d, n)), mb.coaction()));
    for (int j = 0; j <= n; ++j) ss.push_back(kron(id(ring, a * power(d, j)), c.counit(), id(ring, power(d, n - j) * b)));
    cof.push_back(std::move(fs));
    cod.push_back(std::move(ss));
  }
  return CosimplicialModule(Orientation::cosimplicial, ring, std::move(levels), std::move(cof), std::move(cod));
}

std::vector<FgModule> cotor(const Coalgebra& c, const Comodule& ma, const Comodule& mb, int s_max, std::uint64_t max_dim) {
  if (s_max < 0) throw DomainError("cotor needs s_max >= 0");
  CochainComplex n = normalize(cobar_complex(c, ma, mb, s_max + 1, max_dim));
  std::vector<FgModule> out;
  for (int s = 0; s <= s_max; ++s) out.push_back(n.cohomology(s));
  return out;
}

std::string CollapseReport::str() const {
  std::ostringstream os;
  os << (collapses ? "collapses" : "does not collapse") << " (verified for s <= " << s_max << " only)";
  for (std::size_t s = 0; s < cotor.size(); ++s) os << "\n  Cotor_" << s << " = " << cotor[s].str();
  return os.str();
}

CollapseReport collapses_strongly(const Coalgebra& c, const Comodule& ma, const Comodule& mb, const FgModule& mc,
                                  int s_max) {
  CollapseReport r;
  r.s_max = s_max;
  r.cotor = cotor(c, ma, mb, s_max);
  r.collapses = r.cotor.front().isomorphic(mc);
  for (int s = 1; s <= s_max; ++s) r.collapses = r.collapses && r.cotor[static_cast<std::size_t>(s)].is_zero();
  return r;
}

}  // namespace gres
