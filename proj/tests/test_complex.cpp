#include <gtest/gtest.h>

#include "support.hpp"

using namespace locus;
using namespace locus::test;

using Ranks = std::vector<std::size_t>;
using LM = Matrix<LocalRing<PrimeField>>;
using LC = ChainComplex<LocalRing<PrimeField>>;

namespace {

struct Quartic : ::testing::Test {
  RingPtr<PrimeField> R = gf_ring("a, b, c, d");
  ChainComplex<PolyRing<PrimeField>> C = resolve_base(matrix(R, "bc-ad, c3-bd2, ac2-b2d, b3-a2c"));
};

/// d_orig * basis(i) == basis(i-1) * d_pruned for every differential.
template <class Ring>
bool chain_map(const ChainComplex<Ring>& orig, const PrunedComplex<Ring>& p) {
  for (std::size_t i = 1; i <= orig.length(); ++i) {
    auto lhs = orig.differential(i) * p.map.basis(i);
    auto rhs_src = p.map.basis(i - 1);
    if (i <= p.complex.length()) {
      if (!(lhs == rhs_src * p.complex.differential(i))) return false;
    } else if (!lhs.is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST(ChainComplex, Shapes) {
  auto R = gf_ring("x");
  using M = Matrix<PolyRing<PrimeField>>;
  EXPECT_THROW(ChainComplex<PolyRing<PrimeField>>(R, {M(R, 1, 2), M(R, 3, 1)}), ShapeMismatch);
  ChainComplex<PolyRing<PrimeField>> c(R, {M(R, 1, 2), M(R, 2, 1)});
  EXPECT_EQ(c.ranks(), (Ranks{1, 2, 1}));
  EXPECT_EQ(c.to_string(), "1 <-- 2 <-- 1");
  EXPECT_THROW(c.differential(0), IndexOutOfRange);
  EXPECT_THROW(c.differential(3), IndexOutOfRange);
}

TEST_F(Quartic, TensorKeepsRanks) {
  auto RM = make_local_ring(R, polys(*R, "a, b, c, d"));
  auto D = tensor_to_local(C, RM);
  EXPECT_EQ(D.ranks(), (Ranks{1, 4, 4, 1}));
  EXPECT_TRUE(D.is_complex());
}

TEST_F(Quartic, PrunedAtOrigin) {
  auto RM = make_local_ring(R, polys(*R, "a, b, c, d"));
  auto D = tensor_to_local(C, RM);
  auto E = prune_complex(D);
  EXPECT_EQ(betti_ranks(E.complex), (Ranks{1, 4, 4, 1}));
  EXPECT_EQ(E.map.eliminations(), 0u);
}

TEST_F(Quartic, PrunedAtHeightThreePrime) {
  auto RP = make_local_ring(R, polys(*R, "a, b, c"));
  auto D = tensor_to_local(C, RP);
  auto E = prune_complex(D);
  EXPECT_EQ(betti_ranks(E.complex), (Ranks{1, 2, 1}));
  EXPECT_TRUE(E.complex.is_complex());
  EXPECT_TRUE(is_unit_free(E.complex));
  EXPECT_TRUE(chain_map(D, E));
}

TEST(Prune, GorensteinAlreadyMinimal) {
  auto R = gf_ring("x, y, z");
  auto RP = make_local_ring(R, polys(*R, "x, y, z"));
  auto C = tensor_to_local(resolve_base(matrix(R, "x3+y3, x3+z3, xy, xz, yz")), RP);
  EXPECT_EQ(C.ranks(), (Ranks{1, 5, 5, 1}));
  EXPECT_EQ(betti_ranks(prune_complex(C).complex), (Ranks{1, 5, 5, 1}));
}

TEST(Prune, EmptyComplex) {
  auto R = gf_ring("x");
  auto RP = make_local_ring(R, polys(*R, "x"));
  auto C = tensor_to_local(ChainComplex<PolyRing<PrimeField>>(R, 1), RP);
  EXPECT_EQ(C.length(), 0u);
  auto E = prune_complex(C);
  EXPECT_EQ(E.complex.ranks(), (Ranks{1}));
  EXPECT_EQ(betti_ranks(E.complex), (Ranks{1}));
}

TEST(Prune, SingleUnit) {
  auto R = gf_ring("x");
  auto RP = make_local_ring(R, polys(*R, "x"));
  LC C(RP, {LM(RP, 1, 1, {frac(*RP, "x+1", "1")})});
  auto E = prune_unit(C, 1);
  EXPECT_EQ(E.rank(0), 0u);
  EXPECT_EQ(E.rank(1), 0u);
  EXPECT_TRUE(E.ranks().empty());
}

TEST(Prune, UnitPivotLeavesRemainder) {
  auto R = gf_ring("x");
  auto RP = make_local_ring(R, polys(*R, "x"));
  LC C(RP, {LM(RP, 2, 2, {frac(*RP, "x+1", "1"), RP->zero(), RP->zero(), frac(*RP, "x", "1")})});
  auto E = prune_unit(C, 1);
  ASSERT_EQ(E.differential(1).rows(), 1u);
  ASSERT_EQ(E.differential(1).cols(), 1u);
  EXPECT_TRUE(RP->equal(E.differential(1)(0, 0), RP->promote(poly(*R, "x"))) ||
              RP->equal(E.differential(1)(0, 0), RP->promote(poly(*R, "x2+x"))));
  EXPECT_THROW(prune_unit(E, 1), NotAUnit);
}

TEST(Prune, DiffWithoutUnitsIsUnchanged) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  auto C = tensor_to_local(resolve_base(matrix(R, "x, y")), RP);
  auto D = prune_diff(C, 1);
  EXPECT_EQ(D.differential(1), C.differential(1));
  EXPECT_EQ(D.ranks(), C.ranks());
}

TEST(Prune, IdentityDifferential) {
  auto R = gf_ring("x");
  auto RP = make_local_ring(R, polys(*R, "x"));
  auto D = prune_diff(LC(RP, {LM::identity(RP, 3)}), 1);
  EXPECT_EQ(D.differential(1).rows(), 0u);
  EXPECT_EQ(D.differential(1).cols(), 0u);
}

TEST(Prune, SyzygyExampleFirstDifferential) {
  auto R = gf_ring("a, b, c, d, e, f");
  auto RM = make_local_ring(R, polys(*R, "a, b, c, d, e, f"));
  auto f = matrix(R, "-abc+def, 0, -b3+acd; 0, abc-def, ab2-cd2-c; ab2-cd2-c, -b3+acd, 0");
  auto g = syz_base(f);
  LC C(RM, {promote(g, RM), promote(syz_base(g), RM)});
  auto D = prune_diff(C, 1);
  EXPECT_EQ(D.differential(1).rows(), 3u);
  EXPECT_EQ(D.differential(1).cols(), 1u);
}

TEST(Prune, PruneDiffIsMinimalAtItsIndex) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  // resolution of R/(x, x+y, y) has units once localized
  auto C = tensor_to_local(resolve_base(matrix(R, "x, x+y, y+x2")), RP);
  auto E = prune_complex(C);
  EXPECT_TRUE(is_unit_free(E.complex));
  EXPECT_EQ(betti_ranks(E.complex), (Ranks{1, 2, 1}));
  EXPECT_TRUE(chain_map(C, E));
  EXPECT_THROW(betti_ranks(C), NotMinimal);
}

TEST(PruningMap, ChangeAndInverse) {
  auto R = gf_ring("a, b, c, d");
  auto RP = make_local_ring(R, polys(*R, "a, b, c"));
  auto C = tensor_to_local(resolve_base(matrix(R, "bc-ad, c3-bd2, ac2-b2d, b3-a2c")), RP);
  auto E = prune_complex(C);
  for (std::size_t d = 0; d < E.map.degrees(); ++d) {
    auto ch = E.map.change(d), inv = E.map.inverse(d);
    auto n = E.map.original_rank(d);
    EXPECT_EQ(ch * inv, LM::identity(RP, n)) << "degree " << d;
    EXPECT_EQ(inv * ch, LM::identity(RP, n)) << "degree " << d;
  }
}
