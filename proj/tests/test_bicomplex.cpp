#include "doctest.h"
#include "oracles.hpp"
#include "random_complex.hpp"

#include "gres/bicomplex.hpp"
#include "gres/errors.hpp"
#include "gres/tensor.hpp"

using namespace gres;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

/// |H^n| of a complex of finite modules by counting kernels and images.
std::uint64_t brute_homology_size(const CochainComplex& c, int n) {
  std::uint64_t ker = oracle::count_kernel(c.differential(n));
  std::uint64_t im = n > c.lo() ? oracle::count_image(c.differential(n - 1)) : 1;
  return ker / im;
}

}  // namespace

TEST_CASE("total complex of small bicomplexes") {
  const BaseRing zz = BaseRing::integers();
  const FgModule z = FgModule::free(zz, 1);
  Bicomplex one(zz, 0, 0, {{z}}, {}, {{}});
  TotalComplex t1 = total_complex(one);
  CHECK(t1.complex.lo() == 0);
  CHECK(t1.complex.hi() == 0);
  CHECK(t1.complex.cohomology(0).isomorphic(z));

  // Z at (s, t) = (0, 1) and (1, 1) with h = 2, stored at q = -t.
  Bicomplex two(zz, 0, -1, {{z}, {z}}, {{ModuleMap(z, z, Matrix{{2}})}}, {{}, {}});
  TotalComplex t2 = total_complex(two);
  CHECK(t2.complex.lo() == -1);
  CHECK(t2.complex.cohomology(-1).is_zero());
  CHECK(t2.complex.cohomology(0).canonical_form() == ints({2}));
  CHECK(t2.filtration[0] == std::vector<int>{0});
  CHECK(t2.filtration[1] == std::vector<int>{1});

  CHECK_THROWS_AS(Bicomplex(zz, 0, 0, {{z, z}, {z, z}}, {{ModuleMap::identity(z), ModuleMap::identity(z)}},
                            {{ModuleMap::identity(z)}, {ModuleMap::identity(z)}}),
                  InvariantViolation);
}

TEST_CASE("total complexes of random bicomplexes") {
  std::mt19937_64 rng(12);
  const std::vector<BaseRing> rings{BaseRing::integers_mod(4), BaseRing::integers_mod(6), BaseRing::integers()};
  for (int trial = 0; trial < 30; ++trial) {
    Bicomplex b = randomized::random_bicomplex(rng, rings[trial % 3], 3, 3);
    TotalComplex t = total_complex(b);
    for (int n = t.complex.lo(); n <= t.complex.hi(); ++n)
      CHECK(*t.complex.cohomology(n).cardinality() == brute_homology_size(t.complex, n));
  }
}

TEST_CASE("exact rows give an acyclic total complex") {
  // Rows 0 -> Z/4 -> Z/4 (x)... built as the tensor of an exact row with a random column.
  const BaseRing r4 = BaseRing::integers_mod(4);
  const FgModule z4 = FgModule::cyclic(r4, 4), z2 = FgModule::cyclic(r4, 2);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    CochainComplex col = randomized::finite_complex(rng, r4, 0, 3);
    // Row: Z/2 -> Z/4 -> Z/2, exact, tensored with the column (all entries free over Z/2 or Z/4).
    std::vector<FgModule> row{z2, z4, z2};
    std::vector<ModuleMap> rd{ModuleMap(z2, z4, Matrix{{2}}), ModuleMap(z4, z2, Matrix{{1}})};
    std::vector<std::vector<FgModule>> e;
    std::vector<std::vector<ModuleMap>> h, v;
    for (int p = 0; p < 3; ++p) {
      e.emplace_back();
      v.emplace_back();
      if (p < 2) h.emplace_back();
      for (int q = 0; q < 3; ++q) {
        TensorProduct t(row[static_cast<std::size_t>(p)], col.term(q));
        e.back().push_back(t.module());
        if (p < 2)
          h.back().push_back(tensor_map(t, TensorProduct(row[static_cast<std::size_t>(p + 1)], col.term(q)),
                                        rd[static_cast<std::size_t>(p)], ModuleMap::identity(col.term(q))));
        if (q < 2) {
          ModuleMap m = tensor_map(t, TensorProduct(row[static_cast<std::size_t>(p)], col.term(q + 1)),
                                   ModuleMap::identity(row[static_cast<std::size_t>(p)]), col.differential(q));
          v.back().push_back(p % 2 ? -m : m);
        }
      }
    }
    Bicomplex b(r4, 0, 0, e, h, v);
    CochainComplex tot = total_complex(b).complex;
    // Z/2 -> Z/4 -> Z/2 is not split, so tensoring keeps exactness only where the column is flat;
    // compare against the brute-force count instead of asserting acyclicity blindly.
    for (int n = tot.lo(); n <= tot.hi(); ++n)
      CHECK(*tot.cohomology(n).cardinality() == brute_homology_size(tot, n));
    if (col.term(0).orders() == std::vector<Integer>{4} && col.term(1).orders() == std::vector<Integer>{4} &&
        col.term(2).orders() == std::vector<Integer>{4})
      CHECK(tot.is_acyclic());
  }
}

TEST_CASE("bicomplex Dold-Kan roundtrip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const BaseRing ring = trial % 2 ? BaseRing::integers_mod(4) : BaseRing::integers();
    Bicomplex b = randomized::random_bicomplex(rng, ring, 2, 2);
    BicosimplicialModule x = denormalize(b, 2, 2, Orientation::cosimplicial, Orientation::cosimplicial);
    CHECK_NOTHROW(x.check_identities());
    Bicomplex n = normalize(x);
    for (int p = 0; p <= 1; ++p)
      for (int q = 0; q <= 1; ++q) CHECK(n.entry(p, q).isomorphic(b.entry(p, q)));
    CochainComplex t0 = total_complex(b).complex, t1 = total_complex(n).complex.truncated(2);
    for (int d = 0; d <= 1; ++d) CHECK(t1.cohomology(d).isomorphic(t0.cohomology(d)));
  }
}

TEST_CASE("diagonal of constant directions") {
  std::mt19937_64 rng(2);
  const BaseRing r6 = BaseRing::integers_mod(6);
  CochainComplex c = randomized::finite_complex(rng, r6, 0, 3);
  CosimplicialModule y = denormalize(c, 3);
  BicosimplicialModule con = vertically_constant(y, 3);
  CHECK_NOTHROW(con.check_identities());
  CosimplicialModule d = diagonal(con);
  for (int n = 0; n <= 3; ++n) CHECK(d.level(n) == y.level(n));
  for (int n = 0; n < 3; ++n)
    for (int i = 0; i <= n + 1; ++i) CHECK(d.coface(n, i) == y.coface(n, i));
  EzReport r = ez_compare(con, 2);
  CHECK(r.iso);
  for (int s = 0; s <= 2; ++s) CHECK(r.diagonal[static_cast<std::size_t>(s)].isomorphic(cohomotopy(y, s)));

  BicosimplicialModule mixed = vertically_constant(y, 2, Orientation::simplicial);
  CHECK_THROWS_AS(diagonal(mixed), DomainError);
  CHECK_THROWS_AS(ez_compare(vertically_constant(y, 1), 1), DegreeOutOfRange);
}

TEST_CASE("Eilenberg-Zilber on denormalized bicomplexes") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    const BaseRing ring = trial % 2 ? BaseRing::integers_mod(4) : BaseRing::integers();
    Bicomplex b = randomized::random_bicomplex(rng, ring, 3, 3);
    BicosimplicialModule x = denormalize(b, 3, 3, Orientation::cosimplicial, Orientation::cosimplicial);
    EzReport r = ez_compare(x, 2);
    CHECK(r.iso);
  }
  for (int trial = 0; trial < 3; ++trial) {
    CosimplicialModule x = denormalize(randomized::finite_complex(rng, BaseRing::integers_mod(6), -2, 3), 3,
                                       Orientation::simplicial);
    CosimplicialModule y = denormalize(randomized::finite_complex(rng, BaseRing::integers_mod(6), -2, 3), 3,
                                       Orientation::simplicial);
    EzReport r = ez_compare(external_tensor(x, y), 2);
    CHECK(r.iso);
  }
}

TEST_CASE("external tensor products") {
  const BaseRing f2 = BaseRing::prime_field(2);
  std::mt19937_64 rng(5);
  CosimplicialModule x = denormalize(randomized::finite_complex(rng, f2, 0, 2), 3);
  CosimplicialModule y = denormalize(randomized::finite_complex(rng, f2, 0, 2), 3);
  BicosimplicialModule xy = external_tensor(x, y);
  CHECK_NOTHROW(xy.check_identities());
  EzReport r = ez_compare(xy, 2);
  CHECK(r.iso);
  // Kunneth over a field: pi^n of the diagonal is the sum of pi^a (x) pi^b.
  for (int n = 0; n <= 2; ++n) {
    std::size_t dim = 0;
    for (int a = 0; a <= n; ++a) dim += cohomotopy(x, a).ngens() * cohomotopy(y, n - a).ngens();
    CHECK(r.diagonal[static_cast<std::size_t>(n)].ngens() == dim);
  }
}
