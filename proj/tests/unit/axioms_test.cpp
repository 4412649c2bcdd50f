#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "transit/axioms.hpp"

using namespace transit;

namespace {

std::size_t at(const TransitFunction& r, const char* label) { return *r.ground().index_of(label); }

bool holds(const TransitFunction& r, AxiomId a) { return check_axiom(r, a).holds; }

bool oracle_holds(const TransitFunction& r, AxiomId a) {
  switch (a) {
    case AxiomId::b1: return oracle::b1(r);
    case AxiomId::b3: return oracle::b3(r);
    case AxiomId::m: return oracle::m(r);
    case AxiomId::j0: return oracle::j0(r);
    case AxiomId::ch: return oracle::ch(r);
    case AxiomId::p: return oracle::p(r);
    case AxiomId::a_prime: return oracle::a_prime(r);
    case AxiomId::k: return oracle::k(r);
    case AxiomId::cg: return oracle::cg(r);
  }
  return false;
}

}  // namespace

TEST(Axioms, Names) {
  EXPECT_EQ(label(AxiomId::j0), "J0");
  EXPECT_EQ(identifier(AxiomId::a_prime), "a_prime");
  EXPECT_EQ(parse_axiom("a'"), AxiomId::a_prime);
  EXPECT_EQ(parse_axiom("CH"), AxiomId::ch);
  EXPECT_FALSE(parse_axiom("b2"));
}

TEST(Axioms, GeometryNotMonotone) {
  const TransitFunction r = fixture::transit("geometry_not_monotone.json");
  const auto a = at(r, "a"), b = at(r, "b"), c = at(r, "c"), d = at(r, "d"), e = at(r, "e");
  const AxiomVerdict j = check_axiom(r, AxiomId::j0);
  ASSERT_FALSE(j.holds);
  EXPECT_TRUE(witness_confirms(r, AxiomId::j0, j));
  // the stated witness: c ∈ R(d,b), b ∈ R(c,a), c ∉ R(d,a)
  EXPECT_TRUE(r(d, b).contains(c) && r(c, a).contains(b) && !r(d, a).contains(c));
  const AxiomVerdict mono = check_axiom(r, AxiomId::m);
  ASSERT_FALSE(mono.holds);
  EXPECT_TRUE(witness_confirms(r, AxiomId::m, mono));
  EXPECT_TRUE(r(a, e).contains(b) && r(a, e).contains(d) && !r(b, d).is_subset_of(r(a, e)));
  EXPECT_TRUE(holds(r, AxiomId::b1));
}

TEST(Axioms, MonotoneB1J0NotGeometry) {
  const TransitFunction r = fixture::transit("monotone_b1_j0_not_geometry.json");
  EXPECT_TRUE(holds(r, AxiomId::m));
  EXPECT_TRUE(holds(r, AxiomId::j0));
  EXPECT_TRUE(holds(r, AxiomId::b1));
  // ch and p frozen from the brute-force oracle
  EXPECT_FALSE(oracle::ch(r));
  EXPECT_FALSE(oracle::p(r));
  EXPECT_FALSE(holds(r, AxiomId::ch));
  EXPECT_FALSE(holds(r, AxiomId::p));
}

TEST(Axioms, IndependenceExamples) {
  const TransitFunction r4 = fixture::transit("ch_b1_not_j0.json");
  EXPECT_TRUE(holds(r4, AxiomId::ch));
  EXPECT_TRUE(holds(r4, AxiomId::b1));
  EXPECT_FALSE(holds(r4, AxiomId::j0));

  const TransitFunction r5 = fixture::transit("j0_b1_not_ch.json");
  EXPECT_TRUE(holds(r5, AxiomId::j0));
  EXPECT_TRUE(holds(r5, AxiomId::b1));
  const AxiomVerdict ch = check_axiom(r5, AxiomId::ch);
  ASSERT_FALSE(ch.holds);
  EXPECT_TRUE(witness_confirms(r5, AxiomId::ch, ch));
  const auto a = at(r5, "a"), b = at(r5, "b"), c = at(r5, "c"), d = at(r5, "d"), e = at(r5, "e");
  EXPECT_TRUE(r5(a, e).contains(c) && r5(c, d).contains(b));
  EXPECT_FALSE((r5(a, d) | r5(a, e) | r5(d, e)).contains(b));

  const TransitFunction r6 = fixture::transit("j0_ch_not_b1.json");
  EXPECT_TRUE(holds(r6, AxiomId::j0));
  EXPECT_TRUE(holds(r6, AxiomId::ch));
  const AxiomVerdict b1 = check_axiom(r6, AxiomId::b1);
  ASSERT_FALSE(b1.holds);
  EXPECT_TRUE(witness_confirms(r6, AxiomId::b1, b1));
}

TEST(Axioms, PeanoWithoutCh) {
  const TransitFunction r = fixture::transit("peano_not_ch.json");
  EXPECT_TRUE(holds(r, AxiomId::p));
  EXPECT_TRUE(holds(r, AxiomId::b1));
  EXPECT_TRUE(holds(r, AxiomId::j0));
  const AxiomVerdict ch = check_axiom(r, AxiomId::ch);
  ASSERT_FALSE(ch.holds);
  EXPECT_TRUE(witness_confirms(r, AxiomId::ch, ch));
  const auto u = at(r, "u"), v = at(r, "v"), w = at(r, "w"), x = at(r, "x"), y = at(r, "y");
  EXPECT_TRUE(r(u, v).contains(x) && r(x, w).contains(y));
  EXPECT_FALSE((r(u, v) | r(u, w) | r(v, w)).contains(y));
}

TEST(Axioms, SetSystemExamples) {
  const TransitFunction r1 = fixture::transit("transit_sets_not_geometry.json");
  for (AxiomId a : {AxiomId::m, AxiomId::ch, AxiomId::j0, AxiomId::b1, AxiomId::a_prime, AxiomId::k})
    EXPECT_TRUE(holds(r1, a)) << label(a);
  const TransitFunction r3 = fixture::transit("transit_sets_without_full.json");
  const AxiomVerdict ap = check_axiom(r3, AxiomId::a_prime);
  EXPECT_FALSE(ap.holds);
  EXPECT_TRUE(witness_confirms(r3, AxiomId::a_prime, ap));
  const TransitFunction r4 = fixture::transit("transit_sets_not_closed.json");
  const AxiomVerdict k = check_axiom(r4, AxiomId::k);
  ASSERT_FALSE(k.holds);
  EXPECT_TRUE(witness_confirms(r4, AxiomId::k, k));
  const auto a = at(r4, "a"), b = at(r4, "b"), c = at(r4, "c"), d = at(r4, "d"), e = at(r4, "e");
  EXPECT_EQ(r4(a, e) & r4(c, d), (Subset{a, b, c}));
}

TEST(Axioms, MinimalTransitFunction) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const TransitFunction r{GroundSet(n)};
    for (AxiomId a : {AxiomId::b1, AxiomId::b3, AxiomId::m, AxiomId::j0, AxiomId::ch, AxiomId::p, AxiomId::k})
      EXPECT_TRUE(holds(r, a)) << label(a) << " n=" << n;
    EXPECT_EQ(holds(r, AxiomId::a_prime), n == 2);
  }
  const TransitFunction one{GroundSet(1)};
  for (AxiomId a : kAllAxioms) EXPECT_TRUE(holds(one, a)) << label(a);
}

TEST(Axioms, ProfileMatchesIndividualChecks) {
  const TransitFunction r = random_transit_function(6, 1, 0.5);
  const AxiomProfile p = axiom_profile(r);
  for (AxiomId a : kAllAxioms) EXPECT_EQ(p.holds(a), holds(r, a)) << label(a);
}

TEST(Axioms, AgreeWithLiteralOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 3 + seed % 3;
    const double density = 0.1 + 0.1 * static_cast<double>(seed % 5);
    const TransitFunction r = random_transit_function(n, seed, density);
    for (AxiomId a : kAllAxioms) {
      const AxiomVerdict v = check_axiom(r, a);
      ASSERT_EQ(v.holds, oracle_holds(r, a)) << label(a) << " seed " << seed;
      if (!v.holds) EXPECT_TRUE(witness_confirms(r, a, v)) << label(a) << " seed " << seed;
    }
  }
}

TEST(Axioms, WitnessConfirmsRejectsBogusWitness) {
  const TransitFunction r = fixture::transit("j0_ch_not_b1.json");
  AxiomVerdict fake = AxiomVerdict::fail("b1", {{"u", 0}, {"v", 1}, {"x", 1}});
  EXPECT_FALSE(witness_confirms(r, AxiomId::b1, fake));
}
