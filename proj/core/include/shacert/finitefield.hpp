#pragma once

// Finite fields F_{p^k} = F_p[u]/(m(u)) with m the lexicographically least
// monic irreducible of degree k. Elements are residue vectors of length k.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "shacert/polyalg.hpp"

namespace shacert {

struct FqElem {
  /// Residue coefficients, constant term first, always exactly k entries.
  std::vector<std::uint64_t> c;

  friend bool operator==(const FqElem&, const FqElem&) = default;
};

/// Field context. Cheap to copy; copies share the same immutable data.
class FqCtx {
 public:
  using Elem = FqElem;
  static constexpr bool is_field = true;

  /// `modulus` must be monic of degree k >= 1 over F_p and, for k > 1,
  /// irreducible (verified here).
  FqCtx(std::uint64_t p, const Poly<PrimeField>& modulus);
  FqCtx() : FqCtx(2, Poly<PrimeField>::x(PrimeField(2))) {}

  std::uint64_t p() const { return data_->p; }
  int k() const { return data_->k; }
  std::uint64_t q() const { return data_->q; }
  std::uint64_t order() const { return data_->q; }
  const Poly<PrimeField>& modulus() const { return data_->modulus; }
  const PrimeField& prime_field() const { return data_->fp; }

  Elem zero() const { return Elem{std::vector<std::uint64_t>(static_cast<std::size_t>(k()), 0)}; }
  Elem one() const;
  Elem from_int(const BigInt& v) const;
  Elem from_int(std::int64_t v) const;
  /// Reduces an arbitrary residue polynomial modulo the field modulus.
  Elem from_residue(const Poly<PrimeField>& r) const;
  Poly<PrimeField> residue(const Elem& a) const;
  /// The generator u (class of the indeterminate).
  Elem generator() const;

  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem pow(const Elem& a, const BigInt& e) const;
  Elem inv(const Elem& a) const;
  Elem divexact(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  /// Inverse of the Frobenius a -> a^p, i.e. a^{q/p}.
  Elem pth_root(const Elem& a) const;
  /// a -> a^p.
  Elem frobenius(const Elem& a) const;
  BigInt characteristic() const { return BigInt(static_cast<unsigned long>(p())); }

  /// Position of `a` in fq_enumerate order: sum of c_i p^i.
  std::uint64_t index(const Elem& a) const;
  Elem element(std::uint64_t index) const;

  /// "1+2u" style.
  std::string format(const Elem& a) const;
  std::string name() const;
  bool operator==(const FqCtx& o) const;

 private:
  struct Data {
    std::uint64_t p;
    int k;
    std::uint64_t q;
    PrimeField fp;
    Poly<PrimeField> modulus;
  };
  std::shared_ptr<const Data> data_;
};

/// Context for F_{p^k} with the lexicographically least monic irreducible
/// modulus (monic polynomials ordered by sum c_i p^i, constant term least
/// significant). p is checked for primality.
FqCtx fq_make(std::uint64_t p, int k);

/// Context for F_q with q a prime power.
FqCtx fq_make(std::uint64_t q);

/// -1, 0 or +1 via a^{(q-1)/2}. Odd q only.
int quadratic_character(const FqCtx& F, const FqElem& a);

/// All q elements, element i having residue digits of i in base p.
std::vector<FqElem> fq_enumerate(const FqCtx& F);

/// Residue coefficients as a list, e.g. "1,2" for 1 + 2u.
std::string residue_text(const FqElem& a);
/// Parses "1,2" (any integers, reduced mod p; fewer than k entries padded).
FqElem parse_fq(const FqCtx& F, std::string_view text);

}  // namespace shacert
