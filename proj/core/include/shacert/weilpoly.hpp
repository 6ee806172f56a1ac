#pragma once

// Frobenius characteristic polynomials of genus-2 Jacobians, the quartic
// number field they define, and a simplicity criterion built from the
// resolvent cubic and a root-of-unity test.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shacert/polyalg.hpp"

namespace shacert {

/// x^4 + c1 x^3 + c2 x^2 + c3 x + c4 attached to F_q.
struct WeilPoly {
  BigInt q;
  std::array<BigInt, 4> c;

  IntPoly poly() const;
  /// "q;c1,c2,c3,c4"
  std::string text() const;
  friend bool operator==(const WeilPoly&, const WeilPoly&) = default;
};

WeilPoly parse_weil_poly(std::string_view text);
WeilPoly weil_from_poly(const BigInt& q, const IntPoly& quartic);

/// s1 = q+1-N1, s2 = q^2+1-N2, c1 = -s1, c2 = (s1^2-s2)/2, c3 = q c1, c4 = q^2.
/// Throws Error(InconsistentCounts) when s1^2 - s2 is odd.
WeilPoly charpoly_from_counts(const BigInt& q, const BigInt& n1, const BigInt& n2);

/// s_n = sum alpha_i^n by Newton's identities, 1 <= n <= 8.
BigInt power_sum(const WeilPoly& w, int n);
/// N_n = q^n + 1 - s_n.
BigInt recover_counts(const WeilPoly& w, int n);

struct WeilCheck {
  bool ok = false;
  std::vector<std::string> reasons;
};

/// Functional equation plus both roots of the real Weil polynomial lying in
/// [-2 sqrt q, 2 sqrt q], decided exactly.
WeilCheck verify_weil_conditions(const WeilPoly& w);

/// x^2 + c1 x + (c2 - 2q).
IntPoly real_weil_poly(const WeilPoly& w);

/// x^4 W(q/x) / q^2, or nullopt if that is not integral.
std::optional<IntPoly> weil_dual(const WeilPoly& w);

struct ResolventCubic {
  IntPoly cubic;
  std::vector<BigRat> rational_roots;  ///< distinct, ascending
  int subfield_count = 0;              ///< quadratic subfields of Q[x]/(f)
  /// When exactly one rational root r: discriminant of R(y)/(y - r).
  std::optional<BigRat> residual_discriminant;
};

/// R(y) = y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) for a monic quartic
/// x^4 + a x^3 + b x^2 + c x + d. Throws Error(ReducibleInput) unless the
/// quartic is irreducible over Q.
ResolventCubic resolvent_cubic(const IntPoly& quartic);
inline ResolventCubic resolvent_cubic(const WeilPoly& w) { return resolvent_cubic(w.poly()); }

/// Exact factorisation of a monic integer quartic over Q.
struct QuarticFactorisation {
  bool irreducible = false;
  std::optional<BigRat> root;
  std::optional<std::pair<IntPoly, IntPoly>> quadratics;
};

QuarticFactorisation factor_quartic(const IntPoly& quartic);

using NumberFieldElem = std::vector<BigRat>;

/// Q[x]/(P), P monic irreducible of degree 1..4; elements are coordinate
/// vectors in the power basis 1, a, ..., a^(n-1).
class NumberField {
 public:
  using Elem = NumberFieldElem;

  explicit NumberField(RatPoly modulus);
  static NumberField from_int_poly(const IntPoly& modulus);

  int degree() const { return modulus_.degree(); }
  const RatPoly& modulus() const { return modulus_; }

  Elem zero() const { return Elem(static_cast<std::size_t>(degree()), BigRat(0)); }
  Elem one() const { return from_rat(BigRat(1)); }
  Elem from_rat(const BigRat& r) const;
  Elem from_int(const BigInt& v) const { return from_rat(BigRat(v)); }
  /// The class of x.
  Elem generator() const;
  Elem from_poly(const RatPoly& p) const;
  RatPoly to_poly(const Elem& e) const;

  bool is_zero(const Elem& e) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, const BigRat& r) const;
  /// Throws Error(Domain) on zero.
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, long e) const;

  /// Column j holds e * a^j.
  std::vector<std::vector<BigRat>> multiplication_matrix(const Elem& e) const;
  std::string format(const Elem& e) const;

 private:
  RatPoly modulus_;
};

/// Characteristic polynomial of multiplication by e, det(x I - M_e).
RatPoly characteristic_polynomial(const NumberField& K, const NumberFieldElem& e);
/// Least-degree monic annihilator of e (first linear dependency among the powers).
RatPoly minimal_polynomial(const NumberField& K, const NumberFieldElem& e);

/// Phi_n over Z.
IntPoly cyclotomic(int n);
/// n with phi(n) <= 4.
const std::vector<int>& small_cyclotomic_orders();

/// The matched n if minimal_polynomial(e) is Phi_n for some n with phi(n) <= 4.
std::optional<int> root_of_unity_order(const NumberField& K, const NumberFieldElem& e);
inline bool is_root_of_unity(const NumberField& K, const NumberFieldElem& e) {
  return root_of_unity_order(K, e).has_value();
}

struct SimplicityCertificate {
  WeilPoly weil;
  bool irreducible = false;
  QuarticFactorisation factorisation;
  std::optional<ResolventCubic> resolvent;
  IntPoly real_weil;
  std::optional<RatPoly> beta_minpoly;  ///< minimal polynomial of a + q/a
  bool beta_matches_real_weil = false;
  std::optional<RatPoly> gamma_minpoly; ///< minimal polynomial of q/a^2
  std::optional<int> gamma_root_order;
  bool simple = false;
  /// W visibly factors (as opposed to the criterion being inconclusive).
  bool splitting_evidence = false;
  std::string reason;
};

/// (i) W irreducible, (ii) exactly one quadratic subfield, (iii) q a^-2 not a
/// root of unity. Throws Error(Precondition) if verify_weil_conditions fails.
SimplicityCertificate absolutely_simple(const WeilPoly& w);

/// [ceil(q+1-2g sqrt q), floor(q+1+2g sqrt q)], lower end clamped at 0.
std::pair<BigInt, BigInt> hasse_interval(const BigInt& q, int genus);
/// (sqrt q - 1)^2 > 0.
bool smooth_genus1_has_point(const BigInt& q);

}  // namespace shacert
