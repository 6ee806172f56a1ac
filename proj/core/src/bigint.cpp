#include "shacert/bigint.hpp"

#include <algorithm>
#include <limits>

#include "shacert/error.hpp"

namespace shacert {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::UnsupportedCharacteristic: return "unsupported-characteristic";
    case ErrorKind::InconsistentCounts: return "inconsistent-counts";
    case ErrorKind::InvariantViolation: return "invariant-violation";
    case ErrorKind::WrongBranch: return "wrong-branch";
    case ErrorKind::ReducibleInput: return "reducible-input";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

BigRat make_rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw Error(ErrorKind::Domain, "zero denominator");
  BigRat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) { return v.get_str(); }

BigInt parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::Parse, "malformed integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_int(text));
  BigInt n = parse_int(text.substr(0, slash));
  BigInt d = parse_int(text.substr(slash + 1));
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator");
  return make_rat(n, d);
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::Domain, "isqrt of negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int valuation(const BigInt& n, std::uint64_t p, int cap) {
  if (n == 0) return cap;
  BigInt m = abs(n);
  int v = 0;
  while (v < cap && mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  if (n == 0) throw Error(ErrorKind::Domain, "divisors of zero");
  BigInt m = abs(n);
  std::vector<std::pair<BigInt, int>> factors;
  constexpr unsigned long kTrialLimit = 10'000'000;
  for (unsigned long d = 2; d <= kTrialLimit && BigInt(d) * d <= m; ++d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        ++e;
      }
      factors.emplace_back(BigInt(d), e);
    }
  }
  if (m > 1) {
    if (BigInt(kTrialLimit) * kTrialLimit < m)
      throw Error(ErrorKind::Domain,
                  "integer too large for trial-division divisor enumeration");
    factors.emplace_back(m, 1);
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [prime, e] : factors) {
    std::size_t base = divs.size();
    BigInt pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= prime;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t prime_power_base(std::uint64_t n, int& k) {
  k = 0;
  if (n < 2) return 0;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) {
    k = 1;
    return n;
  }
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) {
    k = 0;
    return 0;
  }
  return p;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::Domain, "integer out of 64-bit range");
  return v.get_si();
}

}  // namespace shacert
