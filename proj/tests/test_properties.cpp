#include <gtest/gtest.h>

#include "properties.hpp"

using namespace locus;
using namespace locus::test;
using namespace locus::test::props;

TEST(Property, SPairsReduceToZero) {
  auto rep = spairs();
  EXPECT_TRUE(rep.ok()) << rep.failure;
  EXPECT_GE(rep.cases, 160);
}

TEST(Property, SPairsOfFixtureBases) {
  auto R = gf_ring("a, b, c, d");
  auto C = resolve_base(matrix(R, "bc-ad, c3-bd2, ac2-b2d, b3-a2c"));
  for (const auto& d : C.differentials()) EXPECT_TRUE(all_spairs_vanish(column_gb(d)));
  auto S = gf_ring("x, y, z, w");
  EXPECT_TRUE(all_spairs_vanish(ideal_gb(S, polys(*S, "z(yw-z2)-w(xw-yz), xz-y2"))));
}

TEST(Property, NaiveDivisionCatchesNonBases) {
  // {x2 - y, xy - 1} is not a Groebner basis under grevlex
  auto R = gf_ring("x, y");
  GroebnerBasis<PrimeField> fake(R, 1, {locus::detail::to_vec(polys(*R, "x2-y")), locus::detail::to_vec(polys(*R, "xy-1"))});
  EXPECT_FALSE(all_spairs_vanish(fake));
}

TEST(Property, OracleAgreesOnSmallCases) {
  auto R = gf_ring("x, y, z");
  EXPECT_TRUE(in_span_oracle(*R, poly(*R, "x2y"), polys(*R, "xy")));
  EXPECT_FALSE(in_span_oracle(*R, poly(*R, "y2"), polys(*R, "xy, x2")));
  EXPECT_TRUE(in_span_oracle(*R, poly(*R, "y3-x2z"), polys(*R, "y2-xz, xy-z2")) ==
              contains(ideal_gb(R, polys(*R, "y2-xz, xy-z2")), poly(*R, "y3-x2z")));
}

TEST(Property, MembershipMatchesLinearAlgebra) {
  auto rep = membership();
  EXPECT_TRUE(rep.ok()) << rep.failure;
  EXPECT_GE(rep.cases, 100);
  EXPECT_GE(rep.members, 20);
  EXPECT_GE(rep.nonmembers, 20);
}

TEST(Property, PrunedRandomResolutionsAreMinimalComplexes) {
  auto rep = pruned_complexes();
  EXPECT_TRUE(rep.ok()) << rep.failure;
  EXPECT_GE(rep.cases, 100);
  EXPECT_GE(rep.maps_checked, 50);
}

TEST(Property, BettiNumbersSurviveChangeOfBasis) {
  auto rep = betti_invariance();
  EXPECT_TRUE(rep.ok()) << rep.failure;
  EXPECT_EQ(rep.cases, 20 * static_cast<int>(betti_fixtures().size()));
}

TEST(Property, LiftUpRoundTrip) {
  auto rep = lift_round_trip();
  EXPECT_TRUE(rep.ok()) << rep.failure;
  EXPECT_GE(rep.cases, 100);
}

TEST(Property, StandardMonomialOracle) {
  std::vector<Monomial> gens = {Monomial{2, 0}, Monomial{0, 3}};
  EXPECT_EQ(standard_monomials(gens, {2, 3}), 6u);
  gens.push_back(Monomial{1, 1});
  EXPECT_EQ(standard_monomials(gens, {2, 3}), 4u);
}

TEST(Property, LengthEqualsStandardMonomialCount) {
  auto rep = monomial_lengths();
  EXPECT_TRUE(rep.ok()) << rep.failure;
  EXPECT_GE(rep.cases, 50);
}
