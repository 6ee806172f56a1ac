#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shacert/hyperelliptic.hpp"

using namespace shacert;

namespace {

Poly<FqCtx> fq_poly(const FqCtx& F, std::vector<BigInt> c) { return Poly<FqCtx>::from_ints(F, c); }

CurveModel<FqCtx> curve(const FqCtx& F, std::vector<BigInt> c) { return {fq_poly(F, std::move(c)), Chart::Model1, "custom"}; }

FqElem el(const FqCtx& F, long v) { return F.from_int(std::int64_t{v}); }

}  // namespace

TEST(Family, ChartsAreRelatedBySubstitution) {
  // f1(x, t) = t^6 f2(x / t, 1 / t): compare at sample points over Q.
  const auto f1 = family_model1();
  const auto f2 = family_model2();
  for (long t : {-3L, 2L, 5L})
    for (long x : {-2L, 0L, 1L, 4L}) {
      const BigRat T = make_rat(1, t);
      const BigRat X = make_rat(x, t);
      auto eval = [](const BivarPoly& f, const BigRat& xv, const BigRat& tv) {
        BigRat acc = 0;
        for (int i = f.degree(); i >= 0; --i) {
          BigRat c = 0;
          const auto& ct = f.coeffs()[static_cast<std::size_t>(i)];
          for (int j = ct.degree(); j >= 0; --j) c = c * tv + BigRat(ct.coeffs()[static_cast<std::size_t>(j)]);
          acc = acc * xv + c;
        }
        return acc;
      };
      BigRat t6 = BigRat(t) * t * t * t * t * t;
      EXPECT_EQ(eval(f1, BigRat(x), BigRat(t)), t6 * eval(f2, X, T));
    }
}

TEST(Specialize, FiberAtMinusOneOverF3) {
  const auto F = fq_make(3);
  const auto c = specialize_fiber(F, Chart::Model1, el(F, -1));
  EXPECT_EQ(c.f, fq_poly(F, {0, 1, 0, 0, 0, 2, 2}));
  EXPECT_EQ(c.param, "t=2");
  EXPECT_FALSE(c.degenerate());
  const auto inf = fiber_at_infinity(F);
  EXPECT_EQ(inf.chart, Chart::Model2);
  EXPECT_EQ(inf.param, "T=0");
  EXPECT_EQ(inf.f, fq_poly(F, {-8, -1, 0, 0, 0, 0, -1}));
}

TEST(Specialize, FiberOverF9IsBaseChange) {
  const auto F9 = fq_make(9);
  const auto c9 = specialize_fiber(F9, Chart::Model1, el(F9, -1));
  EXPECT_EQ(c9.f, fq_poly(F9, {0, 1, 0, 0, 0, 2, 2}));
}

TEST(CountPoints, FiberAtMinusOne) {
  const auto n3 = count_points(specialize_fiber(fq_make(3), Chart::Model1, el(fq_make(3), -1)));
  EXPECT_EQ(n3.total, 1u);
  EXPECT_TRUE(n3.smooth);
  const auto F9 = fq_make(9);
  const auto n9 = count_points(specialize_fiber(F9, Chart::Model1, el(F9, -1)));
  EXPECT_EQ(n9.total, 15u);
  EXPECT_TRUE(n9.smooth);
  EXPECT_TRUE(within_weil_bound(n3, 2));
  EXPECT_TRUE(within_weil_bound(n9, 2));
}

TEST(CountPoints, QuinticWithOnePointAtInfinity) {
  const auto F = fq_make(3);
  const auto n = count_points(curve(F, {1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(n.affine, 3u);
  EXPECT_EQ(n.infinity, 1);
  EXPECT_EQ(n.total, 4u);
}

TEST(CountPoints, PointsAtInfinityByLeadingCoefficient) {
  const auto F = fq_make(5);
  EXPECT_EQ(points_at_infinity(curve(F, {1, 0, 0, 0, 0, 0, 1})), 2);
  EXPECT_EQ(points_at_infinity(curve(F, {1, 0, 0, 0, 0, 0, 2})), 0);
  EXPECT_EQ(points_at_infinity(curve(F, {1, 0, 0, 0, 0, 3})), 1);
  EXPECT_TRUE(curve(F, {1, 0, 0, 1}).degenerate());
  EXPECT_THROW(count_points(curve(fq_make(4), {1, 0, 0, 0, 0, 1})), Error);
}

TEST(CountPoints, AffineCountMatchesDoubleEnumeration) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 25u}) {
    const auto F = fq_make(q);
    for (const auto& t : fq_enumerate(F)) {
      const auto c = specialize_fiber(F, Chart::Model1, t);
      EXPECT_EQ(count_points(c).affine, oracle::affine_points_brute(c.f)) << q << " " << c.param;
    }
    const auto inf = fiber_at_infinity(F);
    EXPECT_EQ(count_points(inf).affine, oracle::affine_points_brute(inf.f));
  }
}

TEST(CountPoints, ChartsAgreeAwayFromZero) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u}) {
    const auto F = fq_make(q);
    for (const auto& t : fq_enumerate(F)) {
      if (F.is_zero(t)) continue;
      const auto a = specialize_fiber(F, Chart::Model1, t);
      const auto b = specialize_fiber(F, Chart::Model2, F.inv(t));
      if (!count_points(a).smooth) continue;
      EXPECT_EQ(count_points(a).total, count_points(b).total) << q << " " << a.param;
    }
  }
}

TEST(CountPoints, SmoothFibersSatisfyHasseWeil) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u}) {
    const auto F = fq_make(q);
    for (const auto& t : fq_enumerate(F)) {
      const auto n = count_points(specialize_fiber(F, Chart::Model1, t));
      if (n.smooth) EXPECT_TRUE(within_weil_bound(n, 2)) << q;
    }
  }
}

TEST(Witness, LeastNonsingularAffinePoint) {
  const auto F = fq_make(3);
  const auto a = specialize_fiber(F, Chart::Model1, el(F, -1));
  auto w = has_nonsingular_affine_point(a);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->x, F.zero());
  EXPECT_EQ(w->y, F.zero());
  EXPECT_TRUE(verify_affine_witness(a, *w));

  const auto inf = fiber_at_infinity(F);
  w = has_nonsingular_affine_point(inf);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->x, F.zero());
  EXPECT_EQ(w->y, F.one());
  EXPECT_TRUE(verify_affine_witness(inf, *w));

  // y^2 = x^2: the node at the origin is skipped.
  const auto node = curve(F, {0, 0, 1});
  w = has_nonsingular_affine_point(node);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->x, F.one());
  EXPECT_EQ(w->y, F.one());
  EXPECT_FALSE(verify_affine_witness(node, AffinePoint{F.zero(), F.zero()}));

  EXPECT_FALSE(has_nonsingular_affine_point(curve(F, {2})));
}

TEST(Witness, LeastSquareRoot) {
  const auto F = fq_make(7);
  EXPECT_EQ(least_square_root(F, el(F, 2)), el(F, 3));
  EXPECT_FALSE(least_square_root(F, el(F, 3)));
  EXPECT_EQ(least_square_root(F, F.zero()), F.zero());
}

TEST(Witness, EveryReportedPointVerifies) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const auto F = fq_make(q);
    for (const auto& t : fq_enumerate(F)) {
      const auto c = specialize_fiber(F, Chart::Model1, t);
      const auto w = has_nonsingular_affine_point(c);
      if (w) EXPECT_TRUE(verify_affine_witness(c, *w));
    }
  }
}
