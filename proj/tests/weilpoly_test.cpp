#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "shacert/hyperelliptic.hpp"
#include "shacert/weilpoly.hpp"

using namespace shacert;

namespace {

using C = std::complex<long double>;

IntPoly Z(std::initializer_list<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(IntegerRing{}, std::move(v));
}

const WeilPoly kW{3, {-3, 7, -9, 9}};

/// Complex roots of a monic integer polynomial by Durand-Kerner.
std::vector<C> numeric_roots(const IntPoly& f) {
  const int n = f.degree();
  std::vector<C> r;
  C seed(0.4L, 0.9L), z = 1;
  for (int i = 0; i < n; ++i) r.push_back(z *= seed);
  auto eval = [&](const C& x) {
    C acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + static_cast<long double>(f.coeff(static_cast<std::size_t>(i)).get_d());
    return acc;
  };
  for (int it = 0; it < 2000; ++it)
    for (int i = 0; i < n; ++i) {
      C d = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) d *= r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(i)] -= eval(r[static_cast<std::size_t>(i)]) / d;
    }
  return r;
}

PointCount fiber_count(std::uint64_t q, long t) {
  const auto F = fq_make(q);
  return count_points(specialize_fiber(F, Chart::Model1, F.from_int(std::int64_t{t})));
}

}  // namespace

TEST(Charpoly, FromCountsOfFiberMinusOne) {
  const auto w = charpoly_from_counts(3, 1, 15);
  EXPECT_EQ(w, kW);
  EXPECT_EQ(w.text(), "3;-3,7,-9,9");
  EXPECT_EQ(w.poly(), Z({9, -9, 7, -3, 1}));
  EXPECT_EQ(parse_weil_poly("3;-3,7,-9,9"), kW);
  EXPECT_EQ(weil_from_poly(3, Z({9, -9, 7, -3, 1})), kW);
  EXPECT_THROW(parse_weil_poly("3;1,2,3"), Error);
  EXPECT_THROW(parse_weil_poly("3,1,2,3,4"), Error);
  EXPECT_THROW(weil_from_poly(3, Z({1, 1, 2})), Error);
}

TEST(Charpoly, ParityErrorIsReported) {
  try {
    (void)charpoly_from_counts(3, 1, 14);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentCounts);
  }
}

TEST(Charpoly, PowerSumsMatchNumericRoots) {
  const auto roots = numeric_roots(kW.poly());
  for (int n = 1; n <= 8; ++n) {
    C s = 0;
    for (const auto& r : roots) s += std::pow(r, n);
    EXPECT_NEAR(static_cast<double>(s.real()), power_sum(kW, n).get_d(), 1e-6) << n;
    EXPECT_NEAR(static_cast<double>(s.imag()), 0.0, 1e-6);
  }
  for (const auto& r : roots) EXPECT_NEAR(static_cast<double>(std::abs(r)), std::sqrt(3.0), 1e-9);
  EXPECT_THROW(power_sum(kW, 0), Error);
  EXPECT_THROW(power_sum(kW, 9), Error);
}

TEST(Charpoly, RecoveredCountsMatchEnumeration) {
  EXPECT_EQ(recover_counts(kW, 1), 1);
  EXPECT_EQ(recover_counts(kW, 2), 15);
  EXPECT_EQ(recover_counts(kW, 3), fiber_count(27, -1).total);
  EXPECT_EQ(recover_counts(kW, 3), 37);
}

TEST(Charpoly, RoundTripOverEverySmoothFiberAtThree) {
  for (long t = 0; t < 3; ++t) {
    const auto n1 = fiber_count(3, t), n2 = fiber_count(9, t), n3 = fiber_count(27, t);
    if (!n1.smooth) continue;
    const auto w = charpoly_from_counts(3, n1.total, n2.total);
    EXPECT_TRUE(verify_weil_conditions(w).ok) << w.text();
    EXPECT_EQ(recover_counts(w, 1), n1.total);
    EXPECT_EQ(recover_counts(w, 2), n2.total);
    EXPECT_EQ(recover_counts(w, 3), n3.total) << t;
  }
}

TEST(Charpoly, RoundTripAtFive) {
  for (long t = 0; t < 5; ++t) {
    const auto n1 = fiber_count(5, t), n2 = fiber_count(25, t);
    if (!n1.smooth) continue;
    const auto w = charpoly_from_counts(5, n1.total, n2.total);
    EXPECT_TRUE(verify_weil_conditions(w).ok) << w.text();
    EXPECT_EQ(recover_counts(w, 1), n1.total);
    EXPECT_EQ(recover_counts(w, 2), n2.total);
  }
}

TEST(WeilConditions, Examples) {
  EXPECT_TRUE(verify_weil_conditions(kW).ok);
  auto bad = kW;
  bad.c[2] = 9;
  auto r = verify_weil_conditions(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.reasons, (std::vector<std::string>{"c3 != q*c1"}));
  bad = kW;
  bad.c[3] = 8;
  EXPECT_EQ(verify_weil_conditions(bad).reasons, (std::vector<std::string>{"c4 != q^2"}));
  // x^2 + 2 as real Weil polynomial.
  r = verify_weil_conditions(WeilPoly{3, {0, 8, 0, 9}});
  EXPECT_EQ(r.reasons, (std::vector<std::string>{"real Weil polynomial has non-real roots"}));
  // (x - 3)(x - 4): 4 > 2 sqrt 3.
  r = verify_weil_conditions(WeilPoly{3, {-7, 18, -21, 9}});
  EXPECT_EQ(r.reasons, (std::vector<std::string>{"real Weil root outside [-2 sqrt q, 2 sqrt q]"}));
  // Boundary root 2 sqrt 4 = 4 is allowed.
  EXPECT_TRUE(verify_weil_conditions(WeilPoly{4, {-8, 24, -32, 16}}).ok);
}

TEST(WeilConditions, AgreeWithNumericRootModuli) {
  std::mt19937 rng(17);
  for (long q : {2L, 3L, 5L, 7L}) {
    std::uniform_int_distribution<long> a1(-12, 12), a2(-4 * q, 6 * q);
    for (int trial = 0; trial < 200; ++trial) {
      const long c1 = a1(rng), c2 = a2(rng);
      WeilPoly w{q, {c1, c2, q * c1, q * q}};
      bool all_on_circle = true;
      for (const auto& root : numeric_roots(w.poly()))
        all_on_circle = all_on_circle && std::abs(static_cast<double>(std::abs(root)) - std::sqrt(double(q))) < 1e-6;
      // Double roots converge slowly; skip them.
      if (discriminant(w.poly()) == 0) continue;
      EXPECT_EQ(verify_weil_conditions(w).ok, all_on_circle) << w.text();
    }
  }
}

TEST(WeilConditions, DualEqualsSelfExactlyForFunctionalEquation) {
  EXPECT_EQ(weil_dual(kW), kW.poly());
  auto bad = kW;
  bad.c[2] = 3;
  auto d = weil_dual(bad);
  ASSERT_TRUE(d);
  EXPECT_NE(*d, bad.poly());
  EXPECT_FALSE(weil_dual(WeilPoly{3, {1, 1, 1, 1}}));
}

TEST(RealWeil, Example) {
  EXPECT_EQ(real_weil_poly(kW), Z({1, -3, 1}));
}

TEST(Resolvent, Examples) {
  auto r = resolvent_cubic(kW);
  EXPECT_EQ(r.cubic, Z({90, -9, -7, 1}));
  EXPECT_EQ(r.rational_roots, (std::vector<BigRat>{6}));
  EXPECT_EQ(r.subfield_count, 1);
  ASSERT_TRUE(r.residual_discriminant);
  EXPECT_EQ(*r.residual_discriminant, 61);

  r = resolvent_cubic(Z({1, 0, 0, 0, 1}));
  EXPECT_EQ(r.cubic, Z({0, -4, 0, 1}));
  EXPECT_EQ(r.subfield_count, 3);

  r = resolvent_cubic(Z({-2, 0, 0, 0, 1}));
  EXPECT_EQ(r.subfield_count, 1);

  r = resolvent_cubic(Z({1, 1, 0, 0, 1}));
  EXPECT_TRUE(r.rational_roots.empty());
  EXPECT_EQ(r.subfield_count, 0);

  try {
    (void)resolvent_cubic(Z({4, 0, 5, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleInput);
  }
}

TEST(Resolvent, RootsArePairSumsOfProducts) {
  for (const auto& f : {kW.poly(), Z({1, 0, 0, 0, 1}), Z({1, 1, 0, 0, 1}), Z({2, 2, 0, 0, 1})}) {
    const auto a = numeric_roots(f);
    const std::vector<C> expected{a[0] * a[1] + a[2] * a[3], a[0] * a[2] + a[1] * a[3], a[0] * a[3] + a[1] * a[2]};
    const auto R = resolvent_cubic(f).cubic;
    for (const auto& y : expected) {
      C v = 0;
      for (int i = 3; i >= 0; --i) v = v * y + static_cast<long double>(R.coeff(static_cast<std::size_t>(i)).get_d());
      EXPECT_NEAR(static_cast<double>(std::abs(v)), 0.0, 1e-6) << format(f);
    }
  }
}

TEST(FactorQuartic, Shapes) {
  auto f = factor_quartic(Z({4, 0, 5, 0, 1}));
  EXPECT_FALSE(f.irreducible);
  ASSERT_TRUE(f.quadratics);
  EXPECT_EQ(f.quadratics->first * f.quadratics->second, Z({4, 0, 5, 0, 1}));
  f = factor_quartic(Z({-2, 1, 0, 0, 1}));
  EXPECT_FALSE(f.irreducible);
  EXPECT_EQ(f.root, 1);
  EXPECT_TRUE(factor_quartic(kW.poly()).irreducible);
}

TEST(NumberField, ArithmeticInQuarticField) {
  const auto K = NumberField::from_int_poly(kW.poly());
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> c(-5, 5);
  const auto a = K.generator();
  EXPECT_TRUE(K.is_zero(K.from_poly(to_rat(kW.poly()))));
  for (int trial = 0; trial < 30; ++trial) {
    NumberFieldElem e;
    for (int i = 0; i < 4; ++i) e.push_back(make_rat(c(rng), 1 + (trial % 3)));
    if (K.is_zero(e)) continue;
    EXPECT_EQ(K.mul(e, K.inv(e)), K.one());
    EXPECT_EQ(K.pow(e, -2), K.inv(K.mul(e, e)));
    EXPECT_EQ(K.mul(K.add(e, a), a), K.add(K.mul(e, a), K.mul(a, a)));
  }
  EXPECT_THROW(K.inv(K.zero()), Error);
  EXPECT_EQ(K.format(K.add(a, K.one())), "a + 1");
}

TEST(NumberField, MinimalPolynomials) {
  const auto K = NumberField::from_int_poly(kW.poly());
  const auto a = K.generator();
  const auto beta = K.add(a, K.scale(K.inv(a), BigRat(3)));
  EXPECT_EQ(minimal_polynomial(K, beta), to_rat(real_weil_poly(kW)));
  const auto gamma = K.scale(K.inv(K.mul(a, a)), BigRat(3));
  const RatPoly expected(RationalField{}, {BigRat(1), make_rat(5, 3), make_rat(13, 9), make_rat(5, 3), BigRat(1)});
  EXPECT_EQ(minimal_polynomial(K, gamma), expected);
  EXPECT_EQ(minimal_polynomial(K, K.from_int(4)), RatPoly(RationalField{}, {BigRat(-4), BigRat(1)}));
  EXPECT_EQ(minimal_polynomial(K, a), to_rat(kW.poly()));
}

TEST(NumberField, MinimalPolynomialDividesCharacteristic) {
  for (const auto& mod : {kW.poly(), Z({1, 0, 0, 0, 1}), Z({-2, 0, 0, 0, 1}), Z({1, 1, 1})}) {
    const auto K = NumberField::from_int_poly(mod);
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
      NumberFieldElem e;
      for (int i = 0; i < K.degree(); ++i) e.emplace_back(trial % 4 == 0 && i % 2 ? 0 : c(rng));
      const auto m = minimal_polynomial(K, e);
      const auto chi = characteristic_polynomial(K, e);
      EXPECT_EQ(chi.degree(), K.degree());
      EXPECT_TRUE(divides(m, chi));
      EXPECT_EQ(K.degree() % m.degree(), 0);
      EXPECT_EQ(power(m, static_cast<unsigned>(K.degree() / m.degree())), chi);
      // m(e) = 0 in K.
      NumberFieldElem acc = K.zero();
      for (int i = m.degree(); i >= 0; --i) acc = K.add(K.mul(acc, e), K.from_rat(m.coeff(static_cast<std::size_t>(i))));
      EXPECT_TRUE(K.is_zero(acc));
    }
  }
}

TEST(Cyclotomic, SmallOrders) {
  EXPECT_EQ(cyclotomic(5), Z({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic(12), Z({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic(1), Z({-1, 1}));
  EXPECT_EQ(small_cyclotomic_orders(), (std::vector<int>{1, 2, 3, 4, 5, 6, 8, 10, 12}));
  for (int n = 1; n <= 30; ++n) {
    const auto phi = cyclotomic(n);
    int totient = 0;
    for (int k = 1; k <= n; ++k) totient += std::gcd(k, n) == 1;
    EXPECT_EQ(phi.degree(), totient);
    auto xn1 = [](int m) { return IntPoly::monomial(IntegerRing{}, BigInt(1), static_cast<std::size_t>(m)) - Z({1}); };
    EXPECT_TRUE(divides(to_rat(phi), to_rat(xn1(n))));
    for (int m = 1; m < n; ++m) EXPECT_FALSE(divides(to_rat(phi), to_rat(xn1(m)))) << n << " " << m;
  }
}

TEST(Cyclotomic, RootOfUnityDetection) {
  const auto K8 = NumberField::from_int_poly(Z({1, 0, 0, 0, 1}));
  const auto a = K8.generator();
  EXPECT_EQ(root_of_unity_order(K8, a), 8);
  EXPECT_EQ(root_of_unity_order(K8, K8.mul(a, a)), 4);
  EXPECT_EQ(root_of_unity_order(K8, K8.neg(K8.one())), 2);
  EXPECT_FALSE(is_root_of_unity(K8, K8.scale(a, BigRat(2))));
  EXPECT_FALSE(is_root_of_unity(K8, K8.add(a, K8.one())));
  // Each detected order is confirmed by e^n = 1.
  for (const auto& e : {a, K8.mul(a, a), K8.neg(a), K8.from_int(-1)}) {
    const auto n = root_of_unity_order(K8, e);
    ASSERT_TRUE(n);
    EXPECT_EQ(K8.pow(e, *n), K8.one());
  }
}

TEST(Simplicity, CertificateForFiberMinusOne) {
  const auto s = absolutely_simple(kW);
  EXPECT_TRUE(s.irreducible);
  EXPECT_TRUE(s.simple);
  EXPECT_FALSE(s.splitting_evidence);
  ASSERT_TRUE(s.resolvent);
  EXPECT_EQ(s.resolvent->subfield_count, 1);
  ASSERT_TRUE(s.beta_minpoly);
  EXPECT_TRUE(s.beta_matches_real_weil);
  ASSERT_TRUE(s.gamma_minpoly);
  EXPECT_FALSE(s.gamma_root_order);
  // q / a^2 is not a root of unity: its minimal polynomial is not monic integral.
  EXPECT_NE(s.gamma_minpoly->coeff(1).get_den(), 1);
}

TEST(Simplicity, InvalidWeilPolynomialIsRejected) {
  try {
    (void)absolutely_simple(WeilPoly{3, {0, 8, 0, 9}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(Simplicity, ProductsOfWeilQuadraticsAreNotSimple) {
  std::mt19937 rng(31);
  for (long q : {2L, 3L, 5L}) {
    const long bound = static_cast<long>(std::floor(2 * std::sqrt(double(q))));
    std::uniform_int_distribution<long> a(-bound, bound);
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = Z({q, a(rng), 1}) * Z({q, a(rng), 1});
      const auto w = weil_from_poly(q, f);
      ASSERT_TRUE(verify_weil_conditions(w).ok) << w.text();
      const auto s = absolutely_simple(w);
      EXPECT_FALSE(s.simple) << w.text();
      EXPECT_FALSE(s.irreducible);
      EXPECT_TRUE(s.splitting_evidence);
    }
  }
}

TEST(Simplicity, SupersingularExampleIsNotCertified) {
  // x^4 + 9: q / a^2 has order 4.
  const WeilPoly w{3, {0, 0, 0, 9}};
  ASSERT_TRUE(verify_weil_conditions(w).ok);
  const auto s = absolutely_simple(w);
  EXPECT_FALSE(s.simple);
}

TEST(Hasse, Intervals) {
  EXPECT_EQ(hasse_interval(3, 2), (std::pair<BigInt, BigInt>{0, 10}));
  EXPECT_EQ(hasse_interval(17, 2), (std::pair<BigInt, BigInt>{2, 34}));
  EXPECT_EQ(hasse_interval(25, 1), (std::pair<BigInt, BigInt>{16, 36}));
  for (long q = 2; q < 300; ++q) {
    const auto [lo, hi] = hasse_interval(q, 1);
    const double r = 2 * std::sqrt(double(q));
    EXPECT_EQ(lo, std::max<long>(0, static_cast<long>(std::ceil(q + 1 - r - 1e-12))));
    EXPECT_EQ(hi, static_cast<long>(std::floor(q + 1 + r + 1e-12)));
    EXPECT_TRUE(smooth_genus1_has_point(q));
    EXPECT_GE(lo, 1);
  }
  EXPECT_FALSE(smooth_genus1_has_point(1));
}
