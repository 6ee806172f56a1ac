#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "shacert/cubicsurface.hpp"
#include "shacert/error.hpp"

using namespace shacert;

namespace {

const DiagonalCubic kSum{Quad{1, 1, 1, 1}};

BigInt cube(const BigInt& v) { return v * v * v; }

BigInt form(const Quad& c, const Quad& x) {
  return c[0] * cube(x[0]) + c[1] * cube(x[1]) + c[2] * cube(x[2]) + c[3] * cube(x[3]);
}

int vp(BigInt n, std::uint64_t p) {
  if (n == 0) return 1 << 20;
  int v = 0;
  while (n % BigInt(static_cast<unsigned long>(p)) == 0) {
    n /= BigInt(static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

/// Primitive zeros in the box, normalised to a positive first nonzero
/// coordinate, by enumerating all four coordinates.
std::vector<Quad> brute_zeros(const Quad& c, long h) {
  std::set<Quad> out;
  for (long a = -h; a <= h; ++a)
    for (long b = -h; b <= h; ++b)
      for (long d = -h; d <= h; ++d)
        for (long e = -h; e <= h; ++e) {
          Quad x{a, b, d, e};
          if (form(c, x) != 0) continue;
          long g = std::gcd(std::gcd(a, b), std::gcd(d, e));
          if (g != 1) continue;
          long lead = a ? a : b ? b : d ? d : e;
          if (lead < 0) continue;
          out.insert(x);
        }
  return {out.begin(), out.end()};
}

}  // namespace

TEST(DiagonalCubic, Basics) {
  const auto s = DiagonalCubic::cassels_guy();
  EXPECT_EQ(s.coef, (Quad{5, 9, 10, 12}));
  EXPECT_EQ(DiagonalCubic{}.coef, s.coef);
  EXPECT_EQ(s.bad_primes(), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_TRUE(s.is_bad(3));
  EXPECT_FALSE(s.is_bad(7));
  EXPECT_EQ(s.eval(Quad{1, 1, 1, 1}), 36);
  EXPECT_EQ(s.partial(Quad{2, 0, 0, 0}, 0), 60);
  EXPECT_EQ(DiagonalCubic(Quad{7, 1, 1, 11}).bad_primes(), (std::vector<std::uint64_t>{3, 7, 11}));
  try {
    DiagonalCubic bad(Quad{1, 0, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(SmoothPoint, ExamplesAtGoodPrimes) {
  const auto s = DiagonalCubic::cassels_guy();
  auto w = smooth_fp_point(s, 7);
  EXPECT_EQ(w.point, (Quad{1, 1, 0, 0}));
  EXPECT_EQ(w.kind, WitnessKind::SmoothModP);
  EXPECT_TRUE(verify_witness(s, w));
  w = smooth_fp_point(s, 11);
  EXPECT_EQ(w.point, (Quad{1, 2, 0, 0}));
  w = smooth_fp_point(kSum, 5);
  EXPECT_EQ(w.point, (Quad{1, -1, 0, 0}));
  EXPECT_EQ(w.place(), "p=5");
}

TEST(SmoothPoint, WrongBranchAtBadPrimes) {
  const auto s = DiagonalCubic::cassels_guy();
  for (std::uint64_t p : {2u, 3u, 5u}) {
    try {
      (void)smooth_fp_point(s, p);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::WrongBranch);
    }
  }
}

TEST(SmoothPoint, EveryGoodPrimeUpToAThousand) {
  const auto s = DiagonalCubic::cassels_guy();
  for (auto p : primes_below(1001)) {
    if (s.is_bad(p)) continue;
    const auto w = smooth_fp_point(s, p);
    const BigInt P(static_cast<unsigned long>(p));
    EXPECT_EQ(form(s.coef, w.point) % P, 0) << p;
    bool unit = false;
    for (int i = 0; i < 4; ++i) unit = unit || s.partial(w.point, i) % P != 0;
    EXPECT_TRUE(unit) << p;
    const auto lead = std::find_if(w.point.begin(), w.point.end(), [](const BigInt& v) { return v != 0; });
    ASSERT_NE(lead, w.point.end());
    EXPECT_EQ(*lead, 1);
    for (const auto& v : w.point) EXPECT_LE(2 * abs(v), P);
    EXPECT_TRUE(verify_witness(s, w));
  }
}

TEST(HenselSearch, BadPrimesOfCasselsGuy) {
  const auto s = DiagonalCubic::cassels_guy();
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto w = local_solvable(s, p);
    ASSERT_TRUE(w) << p;
    EXPECT_EQ(w->kind, WitnessKind::HenselBadPrime);
    ASSERT_GE(w->newton_index, 0);
    const int v = vp(form(s.coef, w->point), p);
    const int e = vp(s.partial(w->point, w->newton_index), p);
    EXPECT_EQ(v, w->value_valuation);
    EXPECT_EQ(e, w->derivative_valuation);
    EXPECT_GT(v, 2 * e) << p;
    EXPECT_TRUE(verify_witness(s, *w));
  }
  const auto w3 = *local_solvable(s, 3);
  EXPECT_EQ(w3.point, (Quad{1, 0, 1, 1}));
  EXPECT_EQ(w3.value_valuation, 3);
  EXPECT_EQ(w3.derivative_valuation, 1);
  EXPECT_EQ(local_solvable(s, 2)->point, (Quad{1, 1, 0, 0}));
  EXPECT_EQ(local_solvable(s, 5)->point, (Quad{1, 1, 0, 2}));
}

TEST(HenselSearch, TamperedWitnessFails) {
  const auto s = DiagonalCubic::cassels_guy();
  auto w = *local_solvable(s, 3);
  w.point[3] += 1;
  EXPECT_FALSE(verify_witness(s, w));
  auto r = real_witness(s);
  r.real_cube += 1;
  EXPECT_FALSE(verify_witness(s, r));
}

TEST(RealPlace, OddDegreeWitness) {
  const auto s = DiagonalCubic::cassels_guy();
  const auto w = real_witness(s);
  EXPECT_EQ(w.p, 0u);
  EXPECT_EQ(w.kind, WitnessKind::RealOddDegree);
  EXPECT_EQ(w.real_cube, make_rat(-5, 12));
  EXPECT_TRUE(verify_witness(s, w));
  ASSERT_TRUE(local_solvable(s, 0));
  EXPECT_EQ(local_solvable(s, 0)->kind, WitnessKind::RealOddDegree);
}

TEST(RationalSearch, MatchesFourFoldEnumeration) {
  for (const auto& c : {Quad{1, 1, 1, 1}, Quad{1, 2, -3, 5}, Quad{1, -1, 2, -2}, Quad{5, 9, 10, 12}}) {
    const DiagonalCubic s(c);
    EXPECT_EQ(rational_search(s, 3), brute_zeros(c, 3)) << s.text();
  }
}

TEST(RationalSearch, Invariants) {
  const DiagonalCubic s(Quad{1, -1, 1, -1});
  const auto pts = rational_search(s, 6, 3);
  ASSERT_FALSE(pts.empty());
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  for (const auto& x : pts) {
    EXPECT_EQ(s.eval(x), 0);
    BigInt g = 0;
    for (const auto& v : x) {
      EXPECT_LE(abs(v), 6);
      g = gcd(g, v);
    }
    EXPECT_EQ(g, 1);
    const auto lead = std::find_if(x.begin(), x.end(), [](const BigInt& v) { return v != 0; });
    EXPECT_GT(*lead, 0);
  }
  EXPECT_EQ(pts, rational_search(s, 6, 1));
}

TEST(RationalSearch, SmallExamples) {
  auto pts = rational_search(kSum, 1);
  EXPECT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts.front(), (Quad{0, 0, 1, -1}));
  pts = rational_search(DiagonalCubic(Quad{2, -2, 3, 7}), 1);
  EXPECT_EQ(pts.front(), (Quad{1, -1, 1, -1}));
  EXPECT_NE(std::find(pts.begin(), pts.end(), Quad{1, 1, 0, 0}), pts.end());
  EXPECT_TRUE(rational_search(DiagonalCubic::cassels_guy(), 20).empty());
  EXPECT_THROW(rational_search(kSum, 0), Error);
}

TEST(CasselsGuy, SmallBoundsPass) {
  const auto r = verify_cassels_guy(5, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.real_verified);
  ASSERT_EQ(r.primes.size(), 3u);
  for (const auto& c : r.primes) {
    EXPECT_TRUE(c.bad);
    EXPECT_TRUE(c.verified);
  }
  EXPECT_TRUE(r.search_empty);
  EXPECT_THROW(verify_cassels_guy(3, 1), Error);
}

TEST(CasselsGuy, BadPrimesAboveTheBoundAreIncluded) {
  const DiagonalCubic s(Quad{1, 1, 1, 13});
  const auto r = verify_cassels_guy(5, 2, s);
  ASSERT_FALSE(r.primes.empty());
  EXPECT_EQ(r.primes.back().p, 13u);
  EXPECT_TRUE(r.primes.back().bad);
  EXPECT_TRUE(r.locally_solvable);
  EXPECT_FALSE(r.search_empty);
  EXPECT_FALSE(r.pass);
}

TEST(Format, Quad) {
  EXPECT_EQ(format_quad(Quad{1, -1, 0, 2}), "(1,-1,0,2)");
  EXPECT_EQ(to_string(WitnessKind::HenselBadPrime), std::string("hensel"));
}
