// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit status
// if any criterion fails.

#include <iostream>
#include <sstream>

#include "properties.hpp"

using namespace locus;
using namespace locus::test;

namespace {

using K = PrimeField;
using Sizes = std::vector<std::size_t>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Outcome quartic() {
  Outcome o;
  auto R = gf_ring("a, b, c, d");
  auto C = resolve_base(matrix(R, "bc-ad, c3-bd2, ac2-b2d, b3-a2c"));
  o.check(C.ranks() == Sizes{1, 4, 4, 1}, "res ranks " + show(C.ranks()));
  auto RM = make_local_ring(R, polys(*R, "a, b, c, d"));
  auto EM = betti_ranks(prune_complex(tensor_to_local(C, RM)).complex);
  o.check(EM == Sizes{1, 4, 4, 1}, "ranks at (a,b,c,d) " + show(EM));
  auto RP = make_local_ring(R, polys(*R, "a, b, c"));
  auto EP = betti_ranks(prune_complex(tensor_to_local(C, RP)).complex);
  o.check(EP == Sizes{1, 2, 1}, "ranks at (a,b,c) " + show(EP));
  // the same through the script front end, starting from monomialCurveIdeal
  auto out = run_script(slurp(std::string(LOCUS_SCRIPTS_DIR) + "/quartic.lr"));
  o.check(out.size() == 4 && out[1] == "1 <-- 4 <-- 4 <-- 1" && out[2] == "1 <-- 4 <-- 4 <-- 1" &&
              out[3] == "1 <-- 2 <-- 1",
          "script transcript differs");
  return o;
}

Outcome gorenstein() {
  Outcome o;
  auto R = gf_ring("x, y, z");
  auto RP = make_local_ring(R, polys(*R, "x, y, z"));
  Matrix<LocalRing<K>> IP(RP, 1, 5,
                          {RP->promote(poly(*R, "x3+y3")), RP->promote(poly(*R, "x3+z3")),
                           frac(*RP, "xy", "z+1"), frac(*RP, "xz", "y+1"), frac(*RP, "yz", "x+1")});
  auto I = lift_up(IP);
  o.check(I == matrix(R, "x3+y3, x3+z3, xy, xz, yz"), "liftUp gave " + I.to_string());
  auto C = resolve_base(I);
  o.check(C.ranks() == Sizes{1, 5, 5, 1}, "res ranks " + show(C.ranks()));
  auto D = tensor_to_local(C, RP);
  o.check(D.ranks() == Sizes{1, 5, 5, 1}, "ranks after tensoring " + show(D.ranks()));
  o.check(betti_ranks(prune_complex(D).complex) == Sizes{1, 5, 5, 1}, "pruned ranks changed");
  return o;
}

Outcome syzygy() {
  Outcome o;
  auto R = gf_ring("a, b, c, d, e, f");
  auto RM = make_local_ring(R, polys(*R, "a, b, c, d, e, f"));
  auto f = promote(matrix(R, "-abc+def, 0, -b3+acd; 0, abc-def, ab2-cd2-c; ab2-cd2-c, -b3+acd, 0"), RM);
  // lift, resolve, localize, prune the first differential
  auto fl = lift_up(f);
  auto g = syz_base(fl);
  auto h = syz_base(g);
  ChainComplex<LocalRing<K>> C(RM, {promote(g, RM), promote(h, RM)});
  auto GM = prune_diff(C, 1).differential(1);
  o.check(GM.rows() == 3 && GM.cols() == 1, "pruned differential is not a single column");
  if (!o.pass) return o;
  auto expected = polys(*R, "b3-acd, ab2-cd2-c, -abc+def");
  auto w = Matrix<LocalRing<K>>::from_columns(RM, 3, {promote(expected, *RM)});
  bool same = mingens(LocalModule<K>::subquotient(w, GM)).cols() == 0 &&
              mingens(LocalModule<K>::subquotient(GM, w)).cols() == 0;
  // unit multiple: proportional entries with a unit ratio
  for (std::size_t r = 0; r < 3; ++r) {
    same = same && RM->equal(RM->mul(GM(r, 0), w(0, 0)), RM->mul(GM(0, 0), w(r, 0)));
  }
  o.check(same, "column is not a unit multiple of (b3-acd, ab2-cd2-c, -abc+def)");
  o.check((f * GM).is_zero(), "f * GM != 0");
  auto s = syz_local(f);
  o.check(s.cols() == 1 && (f * s).is_zero(), "syz f disagrees");
  return o;
}

Outcome twisted_cubic() {
  Outcome o;
  auto R = gf_ring("x, y, z, w");
  auto RP = make_local_ring(R, polys(*R, "yw-z2, xw-yz, xz-y2"));
  Ideal<PolyRing<K>> I(R, polys(*R, "z(yw-z2)-w(xw-yz), xz-y2"));
  auto N = LocalModule<K>::cokernel(promote(I.matrix(), RP));
  auto len = length_of(N);
  o.check(len == 2, "length " + std::to_string(len));
  auto h = hilbert_samuel_values(ParameterIdeal<K>::maximal(RP), N, 3);
  o.check(h == Sizes{1, 1, 0, 0}, "HSF " + show(h));
  return o;
}

Outcome intersections() {
  Outcome o;
  auto R = gf_ring("x, y");
  auto at = [&](const char* curves, const char* point) {
    return multiplicity_at(Ideal<PolyRing<K>>(R, polys(*R, curves)), polys(*R, point));
  };
  Sizes got = {at("y-x2, y-x", "x-1, y-1"), at("y-x2, y", "x-1, y-1"), at("y-x2, y-x", "x, y"),
               at("y-x2, y", "x, y"),       at("y-x3, y-x2", "x, y"),    at("y-x3, y", "x, y"),
               at("y-x3, y-x2", "x-1, y-1"), at("y-x3, y", "x-1, y-1")};
  o.check(got == Sizes{1, 0, 1, 2, 2, 3, 1, 0}, "lengths " + show(got));
  auto out = run_script(slurp(std::string(LOCUS_SCRIPTS_DIR) + "/intersections.lr"));
  o.check(out == std::vector<std::string>{"1", "0", "1", "2", "2", "3", "1", "0"}, "script transcript differs");
  return o;
}

Outcome hilbert_samuel() {
  Outcome o;
  auto R = gf_ring("x, y");
  auto RP = make_local_ring(R, polys(*R, "x, y"));
  auto N = LocalModule<K>::free(RP, 1);
  auto hm = hilbert_samuel_values(ParameterIdeal<K>::maximal(RP), N, 5);
  o.check(hm == Sizes{1, 2, 3, 4, 5, 6}, "H_m " + show(hm));
  ParameterIdeal<K> q(RP, promote(polys(*R, "x2, y3"), *RP));
  auto hq = hilbert_samuel_values(q, N, 5);
  o.check(hq == Sizes{6, 12, 18, 24, 30, 36}, "H_q " + show(hq));
  bool guarded = false;
  try {
    length_of(N, 100);
  } catch (const InfiniteLength& e) {
    guarded = e.cap() == 100;
  }
  o.check(guarded, "length(RP^1) did not raise the infinite-length guard at cap 100");
  return o;
}

Outcome rational() {
  Outcome o;
  auto out = run_script(slurp(std::string(LOCUS_SCRIPTS_DIR) + "/rational.lr"));
  o.check(out.size() == 4, "unexpected transcript length");
  if (!o.pass) return o;
  o.check(out[2] == "27", "script length " + out[2]);
  o.check(out[3] == "{1, 3, 6, 7, 6, 3, 1, 0}", "script HSF " + out[3]);
  auto R = qq_ring("x, y, z");
  auto RP = make_local_ring(R, polys(*R, "x, y, z"));
  Ideal<PolyRing<RationalField>> I(R, polys(*R, "x5+y3+z3, x3+y5+z3, x3+y3+z5"));
  auto M = LocalModule<RationalField>::cokernel(promote(I.matrix(), RP));
  auto len = length_of(M);
  auto h = hilbert_samuel_values(ParameterIdeal<RationalField>::maximal(RP), M, 7);
  std::size_t sum = 0;
  for (auto v : h) sum += v;
  o.check(len == 27 && sum == 27 && h == Sizes{1, 3, 6, 7, 6, 3, 1, 0},
          "length " + std::to_string(len) + ", HSF " + show(h));
  return o;
}

Outcome properties() {
  Outcome o;
  auto a = props::spairs();
  o.check(a.ok(), "(a) " + a.failure);
  auto b = props::membership();
  o.check(b.ok() && b.cases >= 100, "(b) " + b.failure);
  auto c = props::pruned_complexes();
  o.check(c.ok() && c.cases >= 100, "(c) " + c.failure);
  auto d = props::betti_invariance(20);
  o.check(d.ok(), "(d) " + d.failure);
  auto e = props::lift_round_trip();
  o.check(e.ok() && e.cases >= 100, "(e) " + e.failure);
  auto f = props::monomial_lengths();
  o.check(f.ok() && f.cases >= 50, "(f) " + f.failure);
  if (o.pass) {
    o.detail = std::to_string(a.cases) + "/" + std::to_string(b.cases) + "/" + std::to_string(c.cases) + "/" +
               std::to_string(d.cases) + "/" + std::to_string(e.cases) + "/" + std::to_string(f.cases) +
               " cases";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"rational quartic Betti numbers", quartic},
      {"Gorenstein liftUp and resolution", gorenstein},
      {"local syzygy of the 3x3 matrix", syzygy},
      {"embedded twisted cubic length and HSF", twisted_cubic},
      {"intersection multiplicities", intersections},
      {"Hilbert-Samuel functions and length guard", hilbert_samuel},
      {"QQ length 27 and HSF", rational},
      {"property suites", properties},
  };
  int failed = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << c.name;
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << '\n';
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
