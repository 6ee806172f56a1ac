#include <gtest/gtest.h>

#include "shacert/bigint.hpp"
#include "shacert/error.hpp"

using namespace shacert;

TEST(BigRat, LowestTermsPositiveDenominator) {
  auto r = make_rat(6, -8);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 4);
  EXPECT_EQ(parse_rat("10/-4"), make_rat(-5, 2));
  EXPECT_EQ(to_string(make_rat(43, 6)), "43/6");
}

TEST(BigRat, ExactAmGmConstants) {
  EXPECT_EQ(BigRat(1) - make_rat(5, 6) - make_rat(1, 6), 0);
  EXPECT_EQ(BigRat(8) - make_rat(5, 6), make_rat(43, 6));
  EXPECT_EQ(BigRat(7) - make_rat(1, 6), make_rat(41, 6));
}

TEST(BigInt, ParseRejectsGarbage) {
  EXPECT_THROW(parse_int("12x"), Error);
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_EQ(parse_int("-90"), -90);
}

TEST(BigInt, SquareRootsAndValuations) {
  EXPECT_EQ(isqrt(BigInt(48)), 6);
  EXPECT_TRUE(is_perfect_square(BigInt(61 * 61)));
  EXPECT_FALSE(is_perfect_square(BigInt(61)));
  EXPECT_EQ(valuation(BigInt(1536), 2), 9);
  EXPECT_EQ(valuation(BigInt(0), 2, 40), 40);
}

TEST(BigInt, PrimePowers) {
  std::vector<std::uint64_t> below17;
  for (std::uint64_t q = 2; q < 17; ++q)
    if (is_prime_power(q)) below17.push_back(q);
  EXPECT_EQ(below17, (std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16}));
  int k = 0;
  EXPECT_EQ(prime_power_base(27, k), 3u);
  EXPECT_EQ(k, 3);
  EXPECT_EQ(prime_power_base(12, k), 0u);
}

TEST(BigInt, DivisorsAgreeWithTrialLoop) {
  for (long n = 1; n <= 200; ++n) {
    std::vector<BigInt> expect;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) expect.emplace_back(d);
    EXPECT_EQ(positive_divisors(BigInt(-n)), expect) << n;
  }
}

TEST(BigInt, PrimeSieve) {
  auto ps = primes_below(100);
  EXPECT_EQ(ps.size(), 25u);
  EXPECT_EQ(ps.back(), 97u);
  EXPECT_EQ(prime_factors(3 * 5 * 9 * 10 * 12), (std::vector<std::uint64_t>{2, 3, 5}));
}
