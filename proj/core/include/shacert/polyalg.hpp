#pragma once

// Resultants, discriminants, squarefree structure and irreducibility tests.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shacert/poly.hpp"

namespace shacert {

// ---------------------------------------------------------------------------
// Determinants and resultants

/// Fraction-free (Bareiss) determinant over an integral domain. Every
/// intermediate division is exact.
template <class Ring>
typename Ring::Elem bareiss_determinant(const Ring& R,
                                        std::vector<std::vector<typename Ring::Elem>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R.one();
  bool negate = false;
  typename Ring::Elem prev = R.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (R.is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && R.is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return R.zero();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = R.sub(R.mul(m[i][j], m[k][k]), R.mul(m[i][k], m[k][j]));
        m[i][j] = R.divexact(num, prev);
      }
    }
    prev = m[k][k];
  }
  auto det = m[n - 1][n - 1];
  return negate ? R.neg(det) : det;
}

/// Sylvester matrix of f and g taken with formal degrees m >= deg f and
/// n >= deg g. Rows: n shifted copies of f, then m shifted copies of g.
template <class Ring>
std::vector<std::vector<typename Ring::Elem>> sylvester_matrix(const Poly<Ring>& f, int m,
                                                               const Poly<Ring>& g, int n) {
  const auto& R = f.ring();
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<typename Ring::Elem>> s(size,
                                                  std::vector<typename Ring::Elem>(size, R.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] =
          f.coeff(static_cast<std::size_t>(i));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] =
          g.coeff(static_cast<std::size_t>(i));
  return s;
}

/// Resultant using formal degrees (leading coefficients may vanish).
template <class Ring>
typename Ring::Elem resultant_formal(const Poly<Ring>& f, int m, const Poly<Ring>& g, int n) {
  require_same_ring(f.ring(), g.ring());
  if (f.degree() > m || g.degree() > n || m < 0 || n < 0)
    throw Error(ErrorKind::Domain, "formal degree below actual degree");
  return bareiss_determinant(f.ring(), sylvester_matrix(f, m, g, n));
}

/// Res(f, g) as the determinant of the Sylvester matrix. Zero when either
/// input is zero; both zero is a domain error.
template <class Ring>
typename Ring::Elem resultant(const Poly<Ring>& f, const Poly<Ring>& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::Domain, "resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return f.ring().zero();
  return resultant_formal(f, f.degree(), g, g.degree());
}

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), with f' taken at formal
/// degree d - 1 so the value is the usual one in every characteristic.
template <class Ring>
typename Ring::Elem discriminant(const Poly<Ring>& f) {
  const int d = f.degree();
  if (d < 2) throw Error(ErrorKind::Domain, "discriminant needs degree >= 2");
  const auto& R = f.ring();
  auto res = resultant_formal(f, d, derivative(f), d - 1);
  auto disc = R.divexact(res, f.leading());
  return ((d * (d - 1) / 2) % 2 != 0) ? R.neg(disc) : disc;
}

/// Discriminant with respect to x of f in Z[t][x] by evaluation at integer
/// nodes 0..B (B a degree bound read off the Sylvester matrix) and exact
/// rational interpolation.
IntPoly discriminant_interpolated(const BivarPoly& f);
/// Same quantity by Bareiss elimination directly over Z[t].
IntPoly discriminant_elimination(const BivarPoly& f);
/// Interpolated value, cross-checked against elimination; a mismatch is an
/// Error(Internal).
IntPoly discriminant(const BivarPoly& f);
/// Degree bound in t for Res_x(f, f').
int discriminant_degree_bound(const BivarPoly& f);

// ---------------------------------------------------------------------------
// Integer / rational helpers

BigInt content(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);
RatPoly to_rat(const IntPoly& f);
/// Throws Error(Domain) when some coefficient is not an integer.
IntPoly to_int(const RatPoly& f);
/// Primitive integer polynomial with the same roots (positive content removed,
/// sign kept).
IntPoly clear_denominators(const RatPoly& f);
Poly<PrimeField> reduce(const IntPoly& f, const PrimeField& F);
/// Evaluate each coefficient of a bivariate polynomial at t = value.
IntPoly evaluate_t(const BivarPoly& f, const BigInt& value);

/// Lagrange/Newton interpolation through (nodes[i], values[i]); nodes distinct.
RatPoly interpolate(const std::vector<BigRat>& nodes, const std::vector<BigRat>& values);

/// Text form: ascending coefficients, comma separated ("7,0,0,0,0,1,1").
IntPoly parse_int_poly(std::string_view text);
RatPoly parse_rat_poly(std::string_view text);
std::string coeff_list(const IntPoly& f);
std::string coeff_list(const RatPoly& f);

// ---------------------------------------------------------------------------
// Squarefree structure

struct SquarefreeResult {
  bool squarefree = false;
  /// Set when f' = 0 in characteristic p (f is a p-th power).
  bool pth_power_pattern = false;
  explicit operator bool() const { return squarefree; }
};

template <class Field>
SquarefreeResult is_squarefree(const Poly<Field>& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "squarefree test of zero polynomial");
  if (f.degree() == 0) return {true, false};
  auto d = derivative(f);
  if (d.is_zero()) return {false, true};
  return {gcd(f, d).degree() == 0, false};
}

/// g(x)^(1/p) for g whose exponents are all multiples of p = char.
template <class Field>
Poly<Field> pth_root(const Poly<Field>& g) {
  const auto& R = g.ring();
  const auto p = static_cast<std::size_t>(R.characteristic().get_ui());
  std::vector<typename Field::Elem> v;
  for (std::size_t i = 0; i < g.coeffs().size(); i += p) v.push_back(R.pth_root(g.coeffs()[i]));
  return Poly<Field>(R, std::move(v));
}

/// Squarefree decomposition of a nonzero polynomial over a perfect field:
/// monic pairwise coprime squarefree factors with their multiplicities, so that
/// f = lc(f) * prod a_i^{m_i}. Handles p-th powers in characteristic p.
template <class Field>
std::vector<std::pair<Poly<Field>, int>> squarefree_decomposition(const Poly<Field>& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "squarefree decomposition of zero");
  std::vector<std::pair<Poly<Field>, int>> out;
  Poly<Field> g = monic(f);
  if (g.degree() == 0) return out;
  const auto& R = g.ring();
  const int p = static_cast<int>(R.characteristic().get_ui());
  auto d = derivative(g);
  if (d.is_zero()) {
    for (auto& [fac, m] : squarefree_decomposition(pth_root(g))) out.emplace_back(fac, m * p);
    return out;
  }
  auto c = gcd(g, d);
  auto w = divide_exact(g, c);
  for (int i = 1; w.degree() > 0; ++i) {
    auto y = gcd(w, c);
    auto fac = divide_exact(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = divide_exact(c, y);
  }
  if (c.degree() > 0) {
    for (auto& [fac, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(fac, m * p);
  }
  return out;
}

template <class Field>
struct SquarePart {
  Poly<Field> j;              ///< monic
  Poly<Field> h;              ///< monic, squarefree
  typename Field::Elem c;     ///< f = c * j^2 * h
};

namespace detail {
template <class Field>
void require_odd_characteristic(const Field& F) {
  if (F.characteristic() == 2)
    throw Error(ErrorKind::UnsupportedCharacteristic, "operation needs odd characteristic");
}
}  // namespace detail

/// f = c j^2 h with h squarefree, from the squarefree decomposition.
template <class Field>
SquarePart<Field> square_part(const Poly<Field>& f) {
  detail::require_odd_characteristic(f.ring());
  if (f.is_zero()) throw Error(ErrorKind::Domain, "square part of zero polynomial");
  const auto& R = f.ring();
  auto one = Poly<Field>::constant(R, R.one());
  SquarePart<Field> sp{one, one, f.leading()};
  for (const auto& [fac, m] : squarefree_decomposition(f)) {
    if (m % 2 != 0) sp.h *= fac;
    sp.j *= power(fac, static_cast<unsigned>(m / 2));
  }
  return sp;
}

/// True iff f is c * g^2 over the algebraic closure, i.e. every irreducible
/// factor has even multiplicity. Scalars are squares over the closure.
template <class Field>
bool is_square_over_closure(const Poly<Field>& f) {
  return square_part(f).h.degree() == 0;
}

// ---------------------------------------------------------------------------
// Irreducibility

/// Rabin's test over a finite field of order q = F.order(): f of degree n is
/// irreducible iff f | x^{q^n} - x and gcd(f, x^{q^{n/l}} - x) = 1 for every
/// prime l | n.
template <class Field>
bool irreducible_over_finite_field(const Poly<Field>& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "irreducibility of zero polynomial");
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const auto& R = f.ring();
  const auto g = monic(f);
  const auto x = Poly<Field>::x(R);
  const BigInt q(static_cast<unsigned long>(R.order()));
  // frob[i] = x^{q^i} mod g
  std::vector<Poly<Field>> frob{divmod(x, g).second};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[static_cast<std::size_t>(n)] - frob[0]).is_zero()) return false;
  for (auto l : prime_factors(static_cast<std::uint64_t>(n))) {
    const auto& h = frob[static_cast<std::size_t>(n / static_cast<int>(l))];
    if (gcd(g, h - x).degree() > 0) return false;
  }
  return true;
}

inline bool irreducible_mod_p(const Poly<PrimeField>& f) { return irreducible_over_finite_field(f); }

/// Outcome of the prime-witness irreducibility search over Q.
struct IrreducibilityCertificate {
  enum class Status { Witness, Reducible, Inconclusive };
  Status status = Status::Inconclusive;
  std::uint64_t prime = 0;             ///< Witness: f mod prime is irreducible
  std::optional<BigRat> root;          ///< Reducible via a rational root
  std::optional<IntPoly> factor;       ///< Reducible: a proper factor
  std::uint64_t bound = 0;
};

/// Looks for rational roots and (degree 4) integer quadratic factors, then the
/// least prime p < bound, p not dividing lc(f), with f mod p irreducible.
/// Inconclusive never means reducible.
IrreducibilityCertificate irreducible_over_Q_certificate(const IntPoly& f,
                                                         std::uint64_t bound = 1000);

/// All rational roots with multiplicity, ascending.
std::vector<BigRat> rational_roots(const RatPoly& f);
/// First rational root found in candidate order (+n/d before -n/d, d then n
/// ascending), if any.
std::optional<BigRat> find_rational_root(const RatPoly& f);

/// A monic-in-disguise integer quadratic factor of a primitive quartic, found
/// by exhaustive search over divisor splittings. Complete for degree 4 in the
/// absence of rational roots.
std::optional<IntPoly> find_quadratic_factor(const IntPoly& quartic);

/// Degree <= 4 irreducibility over Q decided exactly.
bool irreducible_over_Q_small(const IntPoly& f);

}  // namespace shacert
