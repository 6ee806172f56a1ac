#pragma once

// Exact scalars. Every number in the toolkit that is not a small residue
// goes through these types.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shacert {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Rational n/d in lowest terms with positive denominator.
BigRat make_rat(const BigInt& n, const BigInt& d);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

/// Accepts "n" or "n/d"; throws Error(Parse) otherwise.
BigRat parse_rat(std::string_view text);
BigInt parse_int(std::string_view text);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

/// p-adic valuation of a nonzero integer. Returns `cap` for zero.
int valuation(const BigInt& n, std::uint64_t p, int cap = 1 << 20);

/// Positive divisors of |n| (n != 0), ascending, by trial division.
std::vector<BigInt> positive_divisors(const BigInt& n);

bool is_prime(std::uint64_t n);

/// Returns p and sets k when n = p^k with p prime, k >= 1; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n, int& k);

inline bool is_prime_power(std::uint64_t n) {
  int k = 0;
  return prime_power_base(n, k) != 0;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound);

/// Distinct prime divisors of n > 0, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::int64_t to_int64(const BigInt& v);

}  // namespace shacert
