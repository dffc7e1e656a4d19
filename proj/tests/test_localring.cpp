#include <gtest/gtest.h>

#include "support.hpp"

using namespace locus;
using namespace locus::test;

namespace {

struct Origin : ::testing::Test {
  RingPtr<PrimeField> R = gf_ring("x, y, z");
  std::shared_ptr<const LocalRing<PrimeField>> RP = make_local_ring(R, polys(*R, "x, y, z"));
};

}  // namespace

TEST_F(Origin, Construction) {
  EXPECT_EQ(RP->nvars(), 3u);
  EXPECT_TRUE(RP->in_prime(poly(*R, "x+y2")));
  EXPECT_FALSE(RP->in_prime(poly(*R, "x+1")));
}

TEST(LocalRing, HeightThreePrime) {
  auto R = gf_ring("a, b, c, d");
  auto RP = make_local_ring(R, polys(*R, "a, b, c"));
  EXPECT_TRUE(RP->is_unit(RP->promote(poly(*R, "d"))));
  EXPECT_FALSE(RP->is_unit(RP->promote(poly(*R, "a+b"))));
}

TEST(LocalRing, NonVariablePrime) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x-1, y-1"));
  EXPECT_TRUE(RP->is_unit(RP->promote(poly(*R, "x"))));
  EXPECT_FALSE(RP->is_unit(RP->promote(poly(*R, "x2-y"))));
  EXPECT_EQ(RP->reduce(poly(*R, "xy")), R->one());
}

TEST(LocalRing, UnitIdealRejected) {
  auto R = gf_ring("x, y");
  EXPECT_THROW(make_local_ring(R, polys(*R, "1")), UnitIdeal);
  EXPECT_THROW(make_local_ring(R, polys(*R, "x, x+1")), UnitIdeal);
}

TEST_F(Origin, AdditionKeepsFraction) {
  auto a = frac(*RP, "x", "z+1");
  auto s = RP->add(a, RP->zero());
  EXPECT_EQ(s.num, a.num);
  EXPECT_EQ(s.den, a.den);
}

TEST_F(Origin, ProductIsStoredUnreduced) {
  auto p = RP->mul(frac(*RP, "1", "z+1"), RP->promote(poly(*R, "z+1")));
  EXPECT_EQ(p.num, poly(*R, "z+1"));
  EXPECT_EQ(p.den, poly(*R, "z+1"));
  EXPECT_TRUE(RP->equal(p, RP->one()));
}

TEST_F(Origin, ZeroNormalization) {
  auto p = RP->mul(frac(*RP, "1", "y+1"), RP->zero());
  EXPECT_TRUE(p.num.is_zero());
  EXPECT_EQ(p.den, R->one());
  EXPECT_TRUE(frac(*RP, "0", "x+1").den == R->one());
}

TEST_F(Origin, DenominatorIsMadeMonic) {
  auto a = frac(*RP, "x", "2z+2");
  EXPECT_EQ(a.den, poly(*R, "z+1"));
  EXPECT_EQ(a.num, R->constant(R->field().inv(2)) * poly(*R, "x"));
}

TEST_F(Origin, Equality) {
  EXPECT_TRUE(RP->equal(frac(*RP, "z+1", "z+1"), RP->one()));
  EXPECT_FALSE(RP->equal(RP->promote(poly(*R, "x")), RP->promote(poly(*R, "y"))));
  EXPECT_TRUE(RP->equal(frac(*RP, "x*(y+1)", "(z+1)*(y+1)"), frac(*RP, "x", "z+1")));
}

TEST_F(Origin, Units) {
  EXPECT_TRUE(RP->is_unit(RP->promote(poly(*R, "z+1"))));
  EXPECT_FALSE(RP->is_unit(frac(*RP, "x", "y+1")));
  EXPECT_FALSE(RP->is_unit(RP->zero()));
  auto u = frac(*RP, "x+1", "y+1");
  EXPECT_TRUE(RP->equal(RP->mul(u, RP->unit_inverse(u)), RP->one()));
  EXPECT_THROW(RP->unit_inverse(frac(*RP, "x", "1")), NotAUnit);
}

TEST_F(Origin, DenominatorInPrime) {
  EXPECT_THROW(frac(*RP, "1", "x"), NotAUnit);
  EXPECT_THROW(frac(*RP, "1", "0"), DivisionByZero);
}

TEST_F(Origin, Rendering) {
  EXPECT_EQ(RP->to_string(frac(*RP, "xy", "z+1")), "x*y/(z+1)");
  EXPECT_EQ(RP->to_string(frac(*RP, "x+y", "y+1")), "(x+y)/(y+1)");
  EXPECT_EQ(RP->to_string(RP->promote(poly(*R, "x2"))), "x^2");
}

TEST(Promote, Matrices) {
  auto R = gf_ring("x, y, z, w");
  auto RP = make_local_ring(R, polys(*R, "yw-z2, xw-yz, xz-y2"));
  auto I = matrix(R, "z3-2yzw+xw2, y2-xz");
  auto P = promote(I, RP);
  for (std::size_t c = 0; c < I.cols(); ++c) {
    EXPECT_EQ(P(0, c).num, I(0, c));
    EXPECT_EQ(P(0, c).den, R->one());
  }
  using M = Matrix<PolyRing<PrimeField>>;
  EXPECT_TRUE(promote(M(R, 2, 2), RP).is_zero());
  EXPECT_EQ(promote(M::identity(R, 2), RP), Matrix<LocalRing<PrimeField>>::identity(RP, 2));
}

TEST_F(Origin, LiftUpGorensteinIdeal) {
  Matrix<LocalRing<PrimeField>> m(RP, 1, 5,
                                  {RP->promote(poly(*R, "x3+y3")), RP->promote(poly(*R, "x3+z3")),
                                   frac(*RP, "xy", "z+1"), frac(*RP, "xz", "y+1"), frac(*RP, "yz", "x+1")});
  EXPECT_EQ(lift_up(m), matrix(R, "x3+y3, x3+z3, xy, xz, yz"));
}

TEST_F(Origin, LiftUpWithoutDenominators) {
  auto base = matrix(R, "x, y+1; 0, z");
  EXPECT_EQ(lift_up(promote(base, RP)), base);
}

TEST_F(Origin, LiftUpClearsSharedDenominatorOnce) {
  Matrix<LocalRing<PrimeField>> m(RP, 2, 1, {frac(*RP, "1", "z+1"), frac(*RP, "x", "z+1")});
  auto lifted = lift_up_with_scales(m);
  EXPECT_EQ(lifted.matrix, matrix(R, "1; x"));
  ASSERT_EQ(lifted.scales.size(), 1u);
  EXPECT_EQ(lifted.scales[0], poly(*R, "z+1"));
  auto back = promote(lifted.matrix, RP);
  auto u = RP->promote(lifted.scales[0]);
  EXPECT_TRUE(RP->is_unit(u));
  for (std::size_t r = 0; r < 2; ++r) EXPECT_TRUE(RP->equal(back(r, 0), RP->mul(u, m(r, 0))));
}

TEST(LocalRing, RationalCoefficients) {
  auto R = qq_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  auto a = RP->fraction(R->variable(0), R->constant(R->field().from_string("2/3")) + R->variable(1));
  EXPECT_EQ(RP->to_string(a), "x/(y+2/3)");
  EXPECT_TRUE(RP->equal(RP->mul(a, RP->unit_inverse(RP->promote(R->one() + R->variable(0)))),
                        RP->mul(RP->unit_inverse(RP->promote(R->one() + R->variable(0))), a)));
}
