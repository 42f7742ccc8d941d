#include "doctest.h"
#include "oracles.hpp"
#include "random_complex.hpp"

#include "gres/errors.hpp"
#include "gres/functor.hpp"
#include "gres/injective.hpp"
#include "gres/spectral.hpp"

using namespace gres;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

/// Vertical cohomology of each column, counted by brute force: |E_1^{s,t}|.
std::uint64_t brute_e1_size(const Bicomplex& b, int s, int t) {
  const int q = -t;
  if (q < b.q_lo() || q > b.q_hi()) return 1;
  std::uint64_t ker = oracle::count_kernel(b.vertical(s, q));
  std::uint64_t im = oracle::count_image(b.vertical(s, q - 1));
  return ker / im;
}

/// E_2 computed from column cohomology and the maps induced by the horizontal differential.
FgModule e2_by_columns(const Bicomplex& b, int s, int t) {
  const int q = -t;
  auto column_h = [&](int p) {
    return Homology::cycles_mod(b.entry(p, q), b.vertical(p, q - 1), b.vertical(p, q));
  };
  Homology here = column_h(s);
  std::optional<ModuleMap> in, out;
  if (s > b.p_lo()) in = induced_on_homology(column_h(s - 1), here, b.horizontal(s - 1, q));
  if (s < b.p_hi()) out = induced_on_homology(here, column_h(s + 1), b.horizontal(s, q));
  return Homology::cycles_mod(here.module(), in, out).module();
}

}  // namespace

TEST_CASE("two-entry spectral sequence") {
  const BaseRing zz = BaseRing::integers();
  const FgModule z = FgModule::free(zz, 1);
  Bicomplex b(zz, 0, -1, {{z}, {z}}, {{ModuleMap(z, z, Matrix{{2}})}}, {{}, {}});
  SpectralSequence ss = ss_pages(b, 3);
  REQUIRE(ss.pages.size() == 3);
  const SpectralPage& e1 = ss.pages[0];
  CHECK(e1.entry(0, 1).isomorphic(z));
  CHECK(e1.entry(1, 1).isomorphic(z));
  const ModuleMap& d1 = e1.differentials.at({0, 1});
  CHECK(abs(d1.matrix()(0, 0)) == 2);
  CHECK(ss.pages[1].entry(0, 1).is_zero());
  CHECK(ss.pages[1].entry(1, 1).canonical_form() == ints({2}));
  CHECK(ss.e_inf.entry(1, 1).canonical_form() == ints({2}));
  CHECK(ss.stabilization == 2);
  for (const auto& a : ss.abutment) {
    CHECK(a.graded_match);
    CHECK(a.consistent);
    CHECK(a.split);
  }
  CHECK_FALSE(check_page_transition(ss.pages[0], ss.pages[1]).has_value());
}

TEST_CASE("zero input gives zero pages") {
  const BaseRing r4 = BaseRing::integers_mod(4);
  const FgModule zero = FgModule::zero(r4);
  Bicomplex b(r4, 0, -1, {{zero, zero}, {zero, zero}},
              {{ModuleMap::zero(zero, zero), ModuleMap::zero(zero, zero)}},
              {{ModuleMap::zero(zero, zero)}, {ModuleMap::zero(zero, zero)}});
  SpectralSequence ss = ss_pages(b, 2);
  for (const auto& page : ss.pages)
    for (const auto& [k, m] : page.entries) CHECK(m.is_zero());
  CHECK(ss.stabilization == 1);
  Bicomplex above(r4, 0, 0, {{zero, zero}}, {}, {{ModuleMap::zero(zero, zero)}});
  CHECK_THROWS_AS(ss_pages(above, 2), DomainError);
}

TEST_CASE("filtration must be respected") {
  const BaseRing zz = BaseRing::integers();
  const FgModule z = FgModule::free(zz, 1);
  CochainComplex c(zz, 0, {z, z}, {ModuleMap::identity(z)});
  CHECK_THROWS_AS(ss_pages(TotalComplex{c, {{1}, {0}}}, 2), InvariantViolation);
  CHECK_THROWS_AS(ss_pages(TotalComplex{c, {{0}, {1}}}, 0), DomainError);
}

TEST_CASE("non-split extension in the abutment") {
  // H^0 = Z/4 with F^1 H = Z/2: both graded pieces are Z/2.
  const BaseRing zz = BaseRing::integers();
  const FgModule z2 = FgModule::free(zz, 2);
  CochainComplex c(zz, -1, {z2, z2}, {ModuleMap(z2, z2, Matrix{{2, 0}, {-1, 2}})});
  SpectralSequence ss = ss_pages(TotalComplex{c, {{0, 1}, {0, 1}}}, 3);
  const AbutmentReport& a = ss.abutment.at(1);
  CHECK(a.degree == 0);
  CHECK(a.homology.canonical_form() == ints({4}));
  CHECK(a.graded.at(0).canonical_form() == ints({2}));
  CHECK(a.graded.at(1).canonical_form() == ints({2}));
  CHECK(a.graded_match);
  CHECK(a.consistent);
  CHECK_FALSE(a.split);
}

TEST_CASE("random bicomplexes: pages against column cohomology") {
  std::mt19937_64 rng(31);
  const std::vector<BaseRing> rings{BaseRing::integers_mod(4), BaseRing::integers_mod(6), BaseRing::integers_mod(8)};
  for (int trial = 0; trial < 24; ++trial) {
    Bicomplex b = randomized::random_bicomplex(rng, rings[trial % 3], 3, 3, -2, 2);
    SpectralSequence ss = ss_pages(b, 4);
    TotalComplex tot = total_complex(b);
    for (int s = b.p_lo(); s <= b.p_hi(); ++s)
      for (int t = -b.q_hi(); t <= -b.q_lo(); ++t) {
        CHECK(*ss.pages[0].entry(s, t).cardinality() == brute_e1_size(b, s, t));
        CHECK(ss.pages[1].entry(s, t).isomorphic(e2_by_columns(b, s, t)));
      }
    for (std::size_t r = 0; r + 1 < ss.pages.size(); ++r) {
      auto failure = check_page_transition(ss.pages[r], ss.pages[r + 1]);
      CHECK_MESSAGE(!failure, (failure ? *failure : ""));
    }
    // |H^n(Tot)| is the product of the E_inf entries of total degree n.
    for (const auto& a : ss.abutment) {
      const int n = -a.degree;
      std::uint64_t product = 1;
      for (const auto& [k, m] : ss.e_inf.entries)
        if (k.first - k.second == n) product *= m.cardinality()->convert_to<std::uint64_t>();
      std::uint64_t ker = oracle::count_kernel(tot.complex.differential(n));
      std::uint64_t im = n > tot.complex.lo() ? oracle::count_image(tot.complex.differential(n - 1)) : 1;
      CHECK(product == ker / im);
      CHECK(a.graded_match);
      CHECK(a.consistent);
    }
  }
}

TEST_CASE("cosimplicial simplicial input: E_1 and E_2 from levelwise homotopy") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 8; ++trial) {
    const BaseRing ring = trial % 2 ? BaseRing::integers_mod(4) : BaseRing::prime_field(3);
    Bicomplex b = randomized::random_bicomplex(rng, ring, 2, 2, -1);
    BicosimplicialModule x = denormalize(b, 2, 2, Orientation::cosimplicial, Orientation::simplicial);
    SpectralSequence ss = ss_pages(x, 3);
    SpectralSequence direct = ss_pages(b, 3);
    for (int t = 0; t <= 1; ++t) {
      CosimplicialModule pi = levelwise_homotopy(x, t);
      CochainComplex n = normalize(pi);
      for (int s = 0; s <= 1; ++s) {
        CHECK(ss.pages[0].entry(s, t).isomorphic(n.term(s)));
        CHECK(ss.pages[1].entry(s, t).isomorphic(n.cohomology(s)));
        CHECK(ss.pages[1].entry(s, t).isomorphic(direct.pages[1].entry(s, t)));
      }
    }
  }
  Bicomplex b = randomized::random_bicomplex(rng, BaseRing::integers_mod(4), 2, 2, -1);
  CHECK_THROWS_AS(ss_pages(denormalize(b, 2, 2, Orientation::cosimplicial, Orientation::cosimplicial), 2), DomainError);
}

TEST_CASE("a resolution in the cosimplicial direction collapses onto t = 0") {
  const BaseRing r4 = BaseRing::integers_mod(4);
  const FgModule z2 = FgModule::cyclic(r4, 2);
  const FgModule z4 = FgModule::cyclic(r4, 4);
  Resolution res = step_resolution(InjectiveClass::cogenerators({z4}), z2, 4);
  CosimplicialModule y = apply_levelwise(res.cosimplicial(4).body, *hom_functor(z2));
  BicosimplicialModule x = vertically_constant(y, 2, Orientation::simplicial);
  SpectralSequence ss = ss_pages(x, 3);
  CHECK(ss.stabilization <= 2);
  for (int s = 0; s < 4; ++s) {
    CHECK(ss.pages[1].entry(s, 0).canonical_form() == ints({2}));
    for (int t = 1; t <= 2; ++t) CHECK(ss.pages[1].entry(s, t).is_zero());
  }
}
