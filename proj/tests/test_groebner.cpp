#include <algorithm>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace locus;
using namespace locus::test;

namespace {

template <class F>
bool same_set(std::vector<Polynomial<F>> a, std::vector<Polynomial<F>> b) {
  if (a.size() != b.size()) return false;
  for (auto& p : a) p = p.monic();
  for (auto& p : b) p = p.monic();
  for (const auto& p : a) {
    if (std::find(b.begin(), b.end(), p) == b.end()) return false;
  }
  return true;
}

}  // namespace

TEST(NormalForm, Basics) {
  auto R = gf_ring("x, y");
  auto G = ideal_gb(R, polys(*R, "x"));
  EXPECT_TRUE(normal_form(poly(*R, "x2"), G).is_zero());
  EXPECT_EQ(normal_form(poly(*R, "y"), G), poly(*R, "y"));
}

TEST(NormalForm, TwistedCubicMember) {
  auto R = gf_ring("x, y, z, w");
  auto P = ideal_gb(R, polys(*R, "yw-z2, xw-yz, xz-y2"));
  auto f = poly(*R, "z*(yw-z2) - w*(xw-yz)");
  EXPECT_TRUE(normal_form(f, P).is_zero());
  EXPECT_FALSE(contains(P, poly(*R, "x")));
}

TEST(GroebnerBasis, SingleGenerator) {
  auto R = gf_ring("x, y");
  auto G = ideal_gb(R, polys(*R, "x"));
  EXPECT_TRUE(same_set(G.polynomials(), polys(*R, "x")));
}

TEST(GroebnerBasis, OneSPolynomialStep) {
  auto R = gf_ring("x, y");
  auto G = ideal_gb(R, polys(*R, "y-x2, y"));
  EXPECT_TRUE(same_set(G.polynomials(), polys(*R, "x2, y")));
}

TEST(GroebnerBasis, TwistedCubicIsAlreadyABasis) {
  auto R = gf_ring("x, y, z, w");
  auto gens = polys(*R, "yw-z2, xw-yz, xz-y2");
  auto G = ideal_gb(R, gens);
  EXPECT_TRUE(same_set(G.polynomials(), gens));
  EXPECT_TRUE(spairs_reduce_to_zero(G));
}

TEST(GroebnerBasis, UnitIdeal) {
  auto R = gf_ring("x, y");
  auto G = ideal_gb(R, polys(*R, "x, x+1"));
  EXPECT_TRUE(G.is_unit_ideal());
  EXPECT_EQ(G.size(), 1u);
}

TEST(GroebnerBasis, LexEliminates) {
  auto R = gf_ring("t, x, y", MonomialOrder::Lex);
  auto G = ideal_gb(R, polys(*R, "x-t2, y-t3"));
  bool found = false;
  for (const auto& g : G.polynomials()) {
    if (g.lead_monomial()[0] == 0) found = found || g == poly(*R, "x3-y2").monic();
  }
  EXPECT_TRUE(found);
}

TEST(GroebnerBasis, RejectsForeignRing) {
  auto R = gf_ring("x");
  auto S = gf_ring("x");
  EXPECT_THROW(ideal_gb(R, {S->variable(0)}), RingMismatch);
}

TEST(Syzygies, LocalSyzygyMatrix) {
  auto R = gf_ring("a, b, c, d, e, f");
  auto f = matrix(R, "-abc+def, 0, -b3+acd; 0, abc-def, ab2-cd2-c; ab2-cd2-c, -b3+acd, 0");
  auto g = syz_base(f);
  EXPECT_EQ(g.rows(), 3u);
  EXPECT_EQ(g.cols(), 1u);
  EXPECT_TRUE((f * g).is_zero());
  auto h = syz_base(g);
  EXPECT_EQ(h.rows(), 1u);
  EXPECT_EQ(h.cols(), 0u);
}

TEST(Syzygies, Koszul) {
  auto R = gf_ring("x, y");
  auto m = matrix(R, "x, y");
  auto s = syz_base(m);
  ASSERT_EQ(s.cols(), 1u);
  EXPECT_TRUE((m * s).is_zero());
  auto G = column_gb(s);
  EXPECT_TRUE(contains(G, polys(*R, "-y, x")));
  // s is a nonzero scalar multiple of (-y, x)
  EXPECT_EQ(s(0, 0).monic(), poly(*R, "y"));
}

TEST(Syzygies, InjectiveMap) {
  auto R = gf_ring("x, y");
  auto s = syz_base(Matrix<PolyRing<PrimeField>>::identity(R, 2));
  EXPECT_EQ(s.rows(), 2u);
  EXPECT_EQ(s.cols(), 0u);
}

TEST(Modulo, Examples) {
  auto R = gf_ring("x, y");
  using M = Matrix<PolyRing<PrimeField>>;
  EXPECT_EQ(modulo_base(M::identity(R, 2), M(R, 2, 0)).cols(), 0u);

  auto f = matrix(R, "x, y");
  auto all = column_gb(modulo_base(f, f));
  EXPECT_TRUE(contains(all, polys(*R, "1, 0")));
  EXPECT_TRUE(contains(all, polys(*R, "0, 1")));

  auto m = modulo_base(matrix(R, "x"), matrix(R, "x2"));
  auto G = column_gb(m);
  EXPECT_TRUE(contains(G, polys(*R, "x")));
  EXPECT_FALSE(contains(G, polys(*R, "1")));
  ASSERT_EQ(m.cols(), 1u);
  EXPECT_EQ(m(0, 0).monic(), poly(*R, "x"));
}

TEST(Resolution, RationalQuartic) {
  auto R = gf_ring("a, b, c, d");
  auto I = matrix(R, "bc-ad, c3-bd2, ac2-b2d, b3-a2c");
  auto C = resolve_base(I);
  EXPECT_EQ(C.ranks(), (std::vector<std::size_t>{1, 4, 4, 1}));
  EXPECT_TRUE(C.is_complex());
}

TEST(Resolution, Gorenstein) {
  auto R = gf_ring("x, y, z");
  auto C = resolve_base(matrix(R, "x3+y3, x3+z3, xy, xz, yz"));
  EXPECT_EQ(C.ranks(), (std::vector<std::size_t>{1, 5, 5, 1}));
  EXPECT_TRUE(C.is_complex());
}

TEST(Resolution, FreeModule) {
  auto R = gf_ring("x");
  auto C = resolve_base(Matrix<PolyRing<PrimeField>>(R, 1, 0));
  EXPECT_EQ(C.length(), 0u);
  EXPECT_EQ(C.ranks(), (std::vector<std::size_t>{1}));
}

TEST(Resolution, InhomogeneousInput) {
  auto R = gf_ring("x, y");
  auto C = resolve_base(matrix(R, "x-y2, y-x3"));
  EXPECT_TRUE(C.is_complex());
  EXPECT_EQ(C.rank(1), 2u);
}

TEST(TrimColumns, DropsRedundantColumns) {
  auto R = gf_ring("x, y");
  auto m = trim_columns(matrix(R, "x, y, x2+xy, x+y"), {0});
  EXPECT_EQ(m.cols(), 2u);
}

TEST(Groebner, RationalCoefficients) {
  auto R = qq_ring("x, y, z");
  auto G = ideal_gb(R, polys(*R, "x5+y3+z3, x3+y5+z3, x3+y3+z5"));
  EXPECT_TRUE(spairs_reduce_to_zero(G));
  EXPECT_FALSE(G.is_unit_ideal());
}
