#pragma once

// Dense univariate polynomials over a runtime ring value.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "shacert/rings.hpp"

namespace shacert {

template <class Ring>
class Poly {
 public:
  using Elem = typename Ring::Elem;

  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  /// Coefficients constant term first; trailing zeros are stripped.
  Poly(Ring ring, std::vector<Elem> coeffs)
      : ring_(std::move(ring)), c_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(const Ring& ring, Elem c) {
    return Poly(ring, std::vector<Elem>{std::move(c)});
  }
  static Poly monomial(const Ring& ring, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, ring.zero());
    v[k] = std::move(c);
    return Poly(ring, std::move(v));
  }
  static Poly x(const Ring& ring) { return monomial(ring, ring.one(), 1); }

  /// Build from integer coefficients reduced into `ring`.
  static Poly from_ints(const Ring& ring, const std::vector<BigInt>& coeffs) {
    std::vector<Elem> v;
    v.reserve(coeffs.size());
    for (const auto& a : coeffs) v.push_back(ring.from_int(a));
    return Poly(ring, std::move(v));
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  const Elem& leading() const {
    if (c_.empty()) throw Error(ErrorKind::Domain, "leading coefficient of zero polynomial");
    return c_.back();
  }

  Elem operator()(const Elem& x) const {
    Elem acc = ring_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
  }

  Poly operator-() const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(ring_.neg(a));
    return Poly(ring_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    const auto& R = a.ring_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), R.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = R.add(a.coeff(i), b.coeff(i));
    return Poly(R, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    const auto& R = a.ring_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), R.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = R.sub(a.coeff(i), b.coeff(i));
    return Poly(R, std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    const auto& R = a.ring_;
    if (a.is_zero() || b.is_zero()) return Poly(R);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, R.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (R.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = R.add(v[i + j], R.mul(a.c_[i], b.c_[j]));
    }
    return Poly(R, std::move(v));
  }
  Poly scaled(const Elem& s) const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(ring_.mul(a, s));
    return Poly(ring_, std::move(v));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!(a.ring_ == b.ring_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.ring_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void normalize() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

  Ring ring_{};
  std::vector<Elem> c_;
};

template <class Ring>
Poly<Ring> derivative(const Poly<Ring>& f) {
  const auto& R = f.ring();
  std::vector<typename Ring::Elem> v;
  for (int i = 1; i <= f.degree(); ++i)
    v.push_back(R.mul(R.from_int(BigInt(i)), f.coeffs()[static_cast<std::size_t>(i)]));
  return Poly<Ring>(R, std::move(v));
}

template <class Ring>
Poly<Ring> power(Poly<Ring> base, unsigned exp) {
  Poly<Ring> r = Poly<Ring>::constant(base.ring(), base.ring().one());
  while (exp) {
    if (exp & 1U) r *= base;
    exp >>= 1U;
    if (exp) base *= base;
  }
  return r;
}

/// Quotient and remainder; the divisor's leading coefficient must be a unit
/// (any nonzero element when the ring is a field).
template <class Ring>
std::pair<Poly<Ring>, Poly<Ring>> divmod(const Poly<Ring>& a, const Poly<Ring>& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw Error(ErrorKind::Domain, "polynomial division by zero");
  const auto& R = a.ring();
  using Elem = typename Ring::Elem;
  std::vector<Elem> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly<Ring>(R), a};
  std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db + 1), R.zero());
  const Elem& lc = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Elem& top = rem[static_cast<std::size_t>(i)];
    if (R.is_zero(top)) continue;
    Elem q = R.divexact(top, lc);
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto k = static_cast<std::size_t>(i - db + j);
      rem[k] = R.sub(rem[k], R.mul(q, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly<Ring>(R, std::move(quo)), Poly<Ring>(R, std::move(rem))};
}

/// Exact quotient a / b; throws Error(Domain) if b does not divide a.
template <class Ring>
Poly<Ring> divide_exact(const Poly<Ring>& a, const Poly<Ring>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::Domain, "inexact polynomial division");
  return q;
}

template <class Ring>
bool divides(const Poly<Ring>& d, const Poly<Ring>& a) {
  return divmod(a, d).second.is_zero();
}

template <class Ring>
Poly<Ring> monic(const Poly<Ring>& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.ring().inv(f.leading()));
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class Ring>
Poly<Ring> gcd(Poly<Ring> a, Poly<Ring> b) {
  static_assert(Ring::is_field, "gcd requires a coefficient field");
  require_same_ring(a.ring(), b.ring());
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class Ring>
Poly<Ring> mulmod(const Poly<Ring>& a, const Poly<Ring>& b, const Poly<Ring>& m) {
  return divmod(a * b, m).second;
}

/// base^exp mod m by repeated squaring.
template <class Ring>
Poly<Ring> powmod(const Poly<Ring>& base, const BigInt& exp, const Poly<Ring>& m) {
  if (exp < 0) throw Error(ErrorKind::Domain, "negative exponent");
  Poly<Ring> r = divmod(Poly<Ring>::constant(base.ring(), base.ring().one()), m).second;
  Poly<Ring> b = divmod(base, m).second;
  for (std::size_t i = mpz_sizeinbase(exp.get_mpz_t(), 2); i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(exp.get_mpz_t(), i)) r = mulmod(r, b, m);
  }
  return r;
}

/// Applies `fn` to each coefficient to land in `target`.
template <class Target, class Source, class Fn>
Poly<Target> map_coeffs(const Poly<Source>& f, const Target& target, Fn fn) {
  std::vector<typename Target::Elem> v;
  v.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) v.push_back(fn(a));
  return Poly<Target>(target, std::move(v));
}

/// Human-readable form, highest degree first, variable `var`.
template <class Ring>
std::string format(const Poly<Ring>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& R = f.ring();
  for (int i = f.degree(); i >= 0; --i) {
    const auto& a = f.coeffs()[static_cast<std::size_t>(i)];
    if (R.is_zero(a)) continue;
    std::string s = R.format(a);
    bool negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    if (s.find_first_of("+-*") != std::string::npos) s = "(" + s + ")";
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    bool unit = (s == "1");
    if (i == 0) {
      out += s;
    } else {
      if (!unit) out += s + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

/// Polynomials over `Base` viewed as a ring, e.g. Z[t] = PolyRing<IntegerRing>.
template <class Base>
struct PolyRing {
  using Elem = Poly<Base>;
  static constexpr bool is_field = false;

  Base base{};

  Elem zero() const { return Elem(base); }
  Elem one() const { return Elem::constant(base, base.one()); }
  Elem from_int(const BigInt& v) const { return Elem::constant(base, base.from_int(v)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem divexact(const Elem& a, const Elem& b) const { return divide_exact(a, b); }
  BigInt characteristic() const { return base.characteristic(); }
  std::string format(const Elem& a) const { return shacert::format(a, "t"); }
  std::string name() const { return base.name() + "[t]"; }
  bool operator==(const PolyRing& o) const { return base == o.base; }
};

using IntPoly = Poly<IntegerRing>;
using RatPoly = Poly<RationalField>;
using IntPolyT = PolyRing<IntegerRing>;
/// Polynomials in x whose coefficients are polynomials in t.
using BivarPoly = Poly<IntPolyT>;

}  // namespace shacert
