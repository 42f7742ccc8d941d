#include "doctest.h"

#include "gres/bicomplex.hpp"
#include "gres/cobar.hpp"
#include "gres/errors.hpp"

#include <random>

using namespace gres;

namespace {

const BaseRing f2 = BaseRing::prime_field(2);

std::size_t dim(const FgModule& m) { return m.ngens() == 0 ? 0 : m.canonical_form().size(); }

}  // namespace

TEST_CASE("trivial coalgebra gives the constant object") {
  const Coalgebra k = Coalgebra::trivial(f2);
  const Comodule a = Comodule::trivial(k, Side::right, 1), b = Comodule::trivial(k, Side::left, 1);
  CosimplicialModule x = cobar_complex(k, a, b, 3);
  for (int n = 0; n <= 3; ++n) CHECK(x.level(n).ngens() == 1);
  for (int n = 0; n < 3; ++n)
    for (int i = 0; i <= n + 1; ++i) CHECK(x.coface(n, i) == ModuleMap::identity(x.level(n)));
  CochainComplex n = normalize(x);
  for (int s = 1; s < 3; ++s) CHECK(n.term(s).is_zero());
}

TEST_CASE("trivial coalgebra: Cotor_0 is the tensor product") {
  std::mt19937_64 rng(5);
  const BaseRing f3 = BaseRing::prime_field(3);
  const Coalgebra k = Coalgebra::trivial(f3);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3;
    auto c = cotor(k, Comodule::trivial(k, Side::right, a), Comodule::trivial(k, Side::left, b), 3);
    CHECK(dim(c[0]) == a * b);
    for (int s = 1; s <= 3; ++s) CHECK(c[static_cast<std::size_t>(s)].is_zero());
  }
}

TEST_CASE("exterior coalgebra") {
  const Coalgebra l = Coalgebra::exterior(f2);
  const Comodule a = Comodule::at_group_like(l, Side::right, 0), b = Comodule::at_group_like(l, Side::left, 0);
  CosimplicialModule x = cobar_complex(l, a, b, 4);
  for (int n = 0; n <= 4; ++n) CHECK(x.level(n).ngens() == (std::size_t(1) << n));
  auto c = cotor(l, a, b, 4);
  for (const auto& m : c) CHECK(dim(m) == 1);
  CollapseReport r = collapses_strongly(l, a, b, FgModule::free(f2, 1), 4);
  CHECK_FALSE(r.collapses);
  CHECK(r.str().find("s <= 4") != std::string::npos);

  // Over Q the reduced comultiplication of x also vanishes.
  const Coalgebra lq = Coalgebra::exterior(BaseRing::rationals());
  auto cq = cotor(lq, Comodule::at_group_like(lq, Side::right, 0), Comodule::at_group_like(lq, Side::left, 0), 3);
  for (const auto& m : cq) CHECK(dim(m) == 1);
}

TEST_CASE("group-like coalgebra on two points") {
  const Coalgebra g = Coalgebra::group_like(f2, 2);
  const Comodule a1 = Comodule::at_group_like(g, Side::right, 1), b1 = Comodule::at_group_like(g, Side::left, 1);
  const Comodule b0 = Comodule::at_group_like(g, Side::left, 0);
  CochainComplex n = normalize(cobar_complex(g, a1, b1, 4));
  for (int s = 0; s < 4; ++s) CHECK(dim(n.term(s)) == 1);
  auto same = cotor(g, a1, b1, 4);
  CHECK(dim(same[0]) == 1);
  for (int s = 1; s <= 4; ++s) CHECK(same[static_cast<std::size_t>(s)].is_zero());
  CHECK(collapses_strongly(g, a1, b1, FgModule::free(f2, 1), 4).collapses);
  for (const auto& m : cotor(g, a1, b0, 3)) CHECK(m.is_zero());
  CHECK(collapses_strongly(Coalgebra::trivial(f2), Comodule::trivial(Coalgebra::trivial(f2), Side::right, 2),
                           Comodule::trivial(Coalgebra::trivial(f2), Side::left, 3), FgModule::free(f2, 6), 3)
            .collapses);
}

TEST_CASE("cotor against the regular comodule and under longer truncation") {
  for (const Coalgebra& c : {Coalgebra::exterior(f2), Coalgebra::group_like(f2, 3)}) {
    auto r = cotor(c, Comodule::at_group_like(c, Side::right, 0), Comodule::regular(c, Side::left), 3);
    CHECK(dim(r[0]) == 1);
    for (int s = 1; s <= 3; ++s) CHECK(r[static_cast<std::size_t>(s)].is_zero());
  }
  const Coalgebra l = Coalgebra::exterior(f2);
  const Comodule b = Comodule::regular(l, Side::left);
  auto short_run = cotor(l, Comodule::regular(l, Side::right), b, 2);
  auto long_run = cotor(l, Comodule::regular(l, Side::right), b, 4);
  for (std::size_t s = 0; s <= 2; ++s) CHECK(short_run[s].isomorphic(long_run[s]));
  CHECK(dim(short_run[0]) == 2);
}

TEST_CASE("constructor checks") {
  const FgModule c2 = FgModule::free(f2, 2), c4 = FgModule::free(f2, 4), k = FgModule::free(f2, 1);
  Matrix bad(4, 2);
  bad(0, 0) = 1;
  bad(1, 1) = 1;  // Delta(x) = 1 (x) x is not counital
  Matrix eps(1, 2);
  eps(0, 0) = 1;
  CHECK_THROWS_AS(Coalgebra(f2, ModuleMap(c2, c4, bad), ModuleMap(c2, k, eps)), InvariantViolation);
  CHECK_THROWS_AS(Coalgebra::exterior(BaseRing::integers()), DomainError);
  const Coalgebra l = Coalgebra::exterior(f2);
  CHECK_THROWS_AS(Comodule::at_group_like(l, Side::right, 1), InvariantViolation);
  const Comodule a = Comodule::at_group_like(l, Side::right, 0), b = Comodule::at_group_like(l, Side::left, 0);
  CHECK_THROWS_AS(cobar_complex(l, b, a, 2), DomainError);
  CHECK_THROWS_AS(cobar_complex(l, a, b, 6, 16), SizeLimitExceeded);
}

TEST_CASE("Eilenberg-Zilber on a tensor square of cobar objects") {
  const Coalgebra l = Coalgebra::exterior(f2);
  const Comodule a = Comodule::at_group_like(l, Side::right, 0), b = Comodule::at_group_like(l, Side::left, 0);
  CosimplicialModule x = cobar_complex(l, a, b, 3);
  EzReport r = ez_compare(external_tensor(x, x), 2);
  CHECK(r.iso);
  // The diagonal is the cobar construction of the tensor square.
  const Coalgebra sq = Coalgebra::tensor(l, l);
  auto c = cotor(sq, Comodule::at_group_like(sq, Side::right, 0), Comodule::at_group_like(sq, Side::left, 0), 2);
  for (int s = 0; s <= 2; ++s) {
    CHECK(c[static_cast<std::size_t>(s)].isomorphic(r.diagonal[static_cast<std::size_t>(s)]));
    CHECK(dim(c[static_cast<std::size_t>(s)]) == static_cast<std::size_t>(s + 1));
  }
}
