#include <gtest/gtest.h>

#include "support.hpp"

using namespace locus;
using namespace locus::test;

using K = PrimeField;
using Sizes = std::vector<std::size_t>;

namespace {

template <class F>
LocalModule<F> quotient_by(const std::shared_ptr<const LocalRing<F>>& RP, const std::vector<Polynomial<F>>& gens) {
  Ideal<PolyRing<F>> I(RP->base_ptr(), gens);
  return LocalModule<F>::cokernel(promote(I.matrix(), RP));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Length, EmbeddedTwistedCubic) {
  auto R = gf_ring("x, y, z, w");
  auto RP = make_local_ring(R, polys(*R, "yw-z2, xw-yz, xz-y2"));
  auto N = quotient_by(RP, polys(*R, "z(yw-z2)-w(xw-yz), xz-y2"));
  EXPECT_EQ(length_of(N), 2u);
  EXPECT_EQ(hilbert_samuel_values(ParameterIdeal<K>::maximal(RP), N, 3), (Sizes{1, 1, 0, 0}));
}

TEST(Length, RationalZeroDimensional) {
  auto R = qq_ring("x, y, z");
  auto RP = make_local_ring(R, polys(*R, "x, y, z"));
  auto M = quotient_by(RP, polys(*R, "x5+y3+z3, x3+y5+z3, x3+y3+z5"));
  EXPECT_EQ(length_of(M), 27u);
  auto h = hilbert_samuel_values(ParameterIdeal<RationalField>::maximal(RP), M, 7);
  EXPECT_EQ(h, (Sizes{1, 3, 6, 7, 6, 3, 1, 0}));
  std::size_t sum = 0;
  for (auto v : h) sum += v;
  EXPECT_EQ(sum, 27u);
}

TEST(Length, ZeroModule) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  EXPECT_EQ(length_of(LocalModule<K>::zero(RP)), 0u);
  EXPECT_EQ(length_of(quotient_by(RP, polys(*R, "1+x"))), 0u);
}

TEST(Length, InfiniteLengthGuard) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  try {
    length_of(LocalModule<K>::free(RP, 1), 100);
    FAIL() << "expected InfiniteLength";
  } catch (const InfiniteLength& e) {
    EXPECT_EQ(e.cap(), 100);
    EXPECT_NE(std::string(e.what()).find("length may be infinite"), std::string::npos);
  }
  EXPECT_THROW(length_of(quotient_by(RP, polys(*R, "y")), 10), InfiniteLength);
}

TEST(HilbertSamuel, MaximalIdealOfThePlane) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  auto N = LocalModule<K>::free(RP, 1);
  EXPECT_EQ(hilbert_samuel_values(ParameterIdeal<K>::maximal(RP), N, 5), (Sizes{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(hilbert_samuel_function(ParameterIdeal<K>::maximal(RP), N, 4), 5u);
}

TEST(HilbertSamuel, BinomialClosedForm) {
  auto R = gf_ring("x, y, z");
  auto RP = make_local_ring(R, polys(*R, "x, y, z"));
  auto h = hilbert_samuel_values(ParameterIdeal<K>::maximal(RP), LocalModule<K>::free(RP, 1), 4);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(h[n], binomial(n + 2, 2)) << "n = " << n;
}

TEST(HilbertSamuel, ParameterIdealX2Y3) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  ParameterIdeal<K> q(RP, promote(polys(*R, "x2, y3"), *RP));
  EXPECT_FALSE(q.is_maximal());
  EXPECT_EQ(hilbert_samuel_values(q, LocalModule<K>::free(RP, 1), 5), (Sizes{6, 12, 18, 24, 30, 36}));
}

TEST(HilbertSamuel, RejectsUnitGenerators) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  EXPECT_THROW(ParameterIdeal<K>(RP, promote(polys(*R, "x, 1+y"), *RP)), Error);
}

TEST(HilbertSamuel, LengthDecomposition) {
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  for (const char* gens : {"y-x2, y", "y-x3, y", "x3, y2", "x2+y3, xy"}) {
    auto M = quotient_by(RP, polys(*R, gens));
    auto len = length_of(M);
    auto h = hilbert_samuel_values(ParameterIdeal<K>::maximal(RP), M, len + 1);
    std::size_t sum = 0;
    for (auto v : h) sum += v;
    EXPECT_EQ(sum, len) << gens;
    EXPECT_EQ(h.back(), 0u) << gens;
  }
}

TEST(Multiplicity, PlaneCurves) {
  auto R = gf_ring("x, y");
  auto at = [&](const char* curves, const char* point) {
    return multiplicity_at(Ideal<PolyRing<K>>(R, polys(*R, curves)), polys(*R, point));
  };
  EXPECT_EQ(at("y-x2, y-x", "x-1, y-1"), 1u);
  EXPECT_EQ(at("y-x2, y", "x-1, y-1"), 0u);
  EXPECT_EQ(at("y-x2, y-x", "x, y"), 1u);
  EXPECT_EQ(at("y-x2, y", "x, y"), 2u);
  EXPECT_EQ(at("y-x3, y-x2", "x, y"), 2u);
  EXPECT_EQ(at("y-x3, y", "x, y"), 3u);
  EXPECT_EQ(at("y-x3, y-x2", "x-1, y-1"), 1u);
  EXPECT_EQ(at("y-x3, y", "x-1, y-1"), 0u);
}

TEST(Multiplicity, BezoutAcrossPoints) {
  // y = x^2 meets y = x at the origin and at (1,1); total 2 = 2 * 1
  auto R = gf_ring("x, y");
  Ideal<PolyRing<K>> I(R, polys(*R, "y-x2, y-x"));
  EXPECT_EQ(multiplicity_at(I, polys(*R, "x, y")) + multiplicity_at(I, polys(*R, "x-1, y-1")), 2u);
}
