#pragma once

// Coefficient rings. A ring is a small copyable value that knows how to do
// arithmetic on its element type; polynomials carry their ring so that
// mixing, say, F_3 and F_5 coefficients is caught at runtime.

#include <cstdint>
#include <string>

#include "shacert/bigint.hpp"
#include "shacert/error.hpp"

namespace shacert {

struct IntegerRing {
  using Elem = BigInt;
  static constexpr bool is_field = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& v) const { return v; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem divexact(const Elem& a, const Elem& b) const;
  BigInt characteristic() const { return 0; }
  std::string format(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "ZZ"; }
  bool operator==(const IntegerRing&) const { return true; }
};

struct RationalField {
  using Elem = BigRat;
  static constexpr bool is_field = true;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& v) const { return BigRat(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error(ErrorKind::Domain, "inverse of zero");
    return 1 / a;
  }
  Elem divexact(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  BigInt characteristic() const { return 0; }
  std::string format(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
  bool operator==(const RationalField&) const { return true; }
};

/// Z/pZ with residues held in a machine word. p must be prime and below 2^32.
class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t order() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(const BigInt& v) const;
  Elem from_int(std::int64_t v) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem divexact(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Inverse Frobenius; identity on a prime field.
  Elem pth_root(Elem a) const { return a; }
  BigInt characteristic() const { return BigInt(static_cast<unsigned long>(p_)); }
  std::string format(Elem a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

template <class Ring>
void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b))
    throw Error(ErrorKind::RingMismatch,
                "operands over different rings: " + a.name() + " vs " + b.name());
}

}  // namespace shacert
