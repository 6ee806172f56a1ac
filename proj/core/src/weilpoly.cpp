#include "shacert/weilpoly.hpp"

#include <algorithm>
#include <sstream>

namespace shacert {

IntPoly WeilPoly::poly() const {
  return IntPoly(IntegerRing{}, {c[3], c[2], c[1], c[0], BigInt(1)});
}

std::string WeilPoly::text() const {
  std::ostringstream os;
  os << q.get_str() << ';' << c[0].get_str() << ',' << c[1].get_str() << ',' << c[2].get_str() << ','
     << c[3].get_str();
  return os.str();
}

WeilPoly parse_weil_poly(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorKind::Parse, "expected q;c1,c2,c3,c4");
  WeilPoly w;
  w.q = parse_int(text.substr(0, semi));
  auto rest = text.substr(semi + 1);
  for (std::size_t i = 0; i < 4; ++i) {
    auto comma = rest.find(',');
    if ((i < 3) != (comma != std::string_view::npos)) throw Error(ErrorKind::Parse, "expected four coefficients");
    w.c[i] = parse_int(rest.substr(0, comma));
    rest = i < 3 ? rest.substr(comma + 1) : std::string_view{};
  }
  return w;
}

WeilPoly weil_from_poly(const BigInt& q, const IntPoly& quartic) {
  if (quartic.degree() != 4 || quartic.leading() != 1)
    throw Error(ErrorKind::Domain, "Weil polynomial must be a monic quartic");
  return WeilPoly{q, {quartic.coeff(3), quartic.coeff(2), quartic.coeff(1), quartic.coeff(0)}};
}

WeilPoly charpoly_from_counts(const BigInt& q, const BigInt& n1, const BigInt& n2) {
  if (n1 < 0 || n2 < 0) throw Error(ErrorKind::Domain, "point counts must be nonnegative");
  BigInt s1 = q + 1 - n1;
  BigInt s2 = q * q + 1 - n2;
  BigInt twice = s1 * s1 - s2;
  if (twice % 2 != 0)
    throw Error(ErrorKind::InconsistentCounts,
                "s1^2 - s2 = " + twice.get_str() + " is odd for N1=" + n1.get_str() + ", N2=" + n2.get_str());
  BigInt c1 = -s1;
  return WeilPoly{q, {c1, BigInt(twice / 2), BigInt(q * c1), BigInt(q * q)}};
}

BigInt power_sum(const WeilPoly& w, int n) {
  if (n < 1 || n > 8) throw Error(ErrorKind::Precondition, "power sums supported for 1 <= n <= 8");
  // s_k + c1 s_{k-1} + ... + c_{k-1} s_1 + k c_k = 0, with c_k = 0 for k > 4.
  std::vector<BigInt> s(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    BigInt acc = k <= 4 ? BigInt(k * w.c[static_cast<std::size_t>(k - 1)]) : BigInt(0);
    for (int i = 1; i < k && i <= 4; ++i) acc += w.c[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = -acc;
  }
  return s[static_cast<std::size_t>(n)];
}

BigInt recover_counts(const WeilPoly& w, int n) {
  BigInt qn;
  mpz_pow_ui(qn.get_mpz_t(), w.q.get_mpz_t(), static_cast<unsigned long>(n));
  return qn + 1 - power_sum(w, n);
}

namespace {

/// Sign of a + b sqrt(q), q > 0.
int sign_with_sqrt(const BigInt& a, const BigInt& b, const BigInt& q) {
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  int cmp = ::cmp(BigInt(a * a), BigInt(b * b * q));
  if (cmp == 0) return 0;
  return cmp > 0 ? sa : sb;
}

}  // namespace

WeilCheck verify_weil_conditions(const WeilPoly& w) {
  WeilCheck out;
  const auto& [c1, c2, c3, c4] = w.c;
  if (w.q < 2) out.reasons.push_back("q must be at least 2");
  if (c3 != w.q * c1) out.reasons.push_back("c3 != q*c1");
  if (c4 != w.q * w.q) out.reasons.push_back("c4 != q^2");
  if (out.reasons.empty()) {
    // r(x) = x^2 + c1 x + (c2 - 2q): roots in [-2 sqrt q, 2 sqrt q].
    BigInt b0 = c2 - 2 * w.q;
    BigInt disc = c1 * c1 - 4 * b0;
    if (disc < 0) {
      out.reasons.push_back("real Weil polynomial has non-real roots");
    } else {
      // r(+-2 sqrt q) = (2q + c2) +- 2 c1 sqrt q >= 0 and |vertex| <= 2 sqrt q.
      BigInt a = 2 * w.q + c2;
      bool ends = sign_with_sqrt(a, BigInt(2 * c1), w.q) >= 0 && sign_with_sqrt(a, BigInt(-2 * c1), w.q) >= 0;
      bool vertex = c1 * c1 <= 16 * w.q;
      if (!ends || !vertex) out.reasons.push_back("real Weil root outside [-2 sqrt q, 2 sqrt q]");
    }
  }
  out.ok = out.reasons.empty();
  return out;
}

IntPoly real_weil_poly(const WeilPoly& w) {
  return IntPoly(IntegerRing{}, {w.c[1] - 2 * w.q, w.c[0], BigInt(1)});
}

std::optional<IntPoly> weil_dual(const WeilPoly& w) {
  // x^4 W(q/x) = q^4 + c1 q^3 x + c2 q^2 x^2 + c3 q x^3 + c4 x^4
  const BigInt q2 = w.q * w.q;
  std::vector<BigInt> num{q2 * q2, w.c[0] * q2 * w.q, w.c[1] * q2, w.c[2] * w.q, w.c[3]};
  std::vector<BigInt> out;
  for (const auto& a : num) {
    if (a % q2 != 0) return std::nullopt;
    out.push_back(a / q2);
  }
  return IntPoly(IntegerRing{}, std::move(out));
}

QuarticFactorisation factor_quartic(const IntPoly& quartic) {
  if (quartic.degree() != 4 || quartic.leading() != 1)
    throw Error(ErrorKind::Domain, "expected a monic integer quartic");
  QuarticFactorisation out;
  out.root = find_rational_root(to_rat(quartic));
  if (auto g = find_quadratic_factor(quartic)) {
    IntPoly a = g->leading() < 0 ? -*g : *g;
    IntPoly b = divide_exact(quartic, a);
    if (b.leading() != 1 || a.leading() != 1) throw Error(ErrorKind::Internal, "non-monic factor of monic quartic");
    out.quadratics = std::pair{a, b};
  }
  out.irreducible = !out.root && !out.quadratics;
  return out;
}

ResolventCubic resolvent_cubic(const IntPoly& quartic) {
  auto fac = factor_quartic(quartic);
  if (!fac.irreducible) throw Error(ErrorKind::ReducibleInput, "resolvent cubic needs an irreducible quartic");
  const BigInt a = quartic.coeff(3), b = quartic.coeff(2), c = quartic.coeff(1), d = quartic.coeff(0);
  ResolventCubic out;
  out.cubic = IntPoly(IntegerRing{}, {-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, BigInt(1)});
  auto roots = rational_roots(to_rat(out.cubic));
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  out.rational_roots = roots;
  switch (roots.size()) {
    case 0: out.subfield_count = 0; break;
    case 1: out.subfield_count = 1; break;
    case 3: out.subfield_count = 3; break;
    default: throw Error(ErrorKind::Internal, "repeated resolvent root for a separable quartic");
  }
  if (roots.size() == 1) {
    RationalField Q;
    auto lin = RatPoly(Q, {BigRat(-roots[0]), BigRat(1)});
    auto rest = divide_exact(to_rat(out.cubic), lin);
    out.residual_discriminant = rest.coeff(1) * rest.coeff(1) - 4 * rest.coeff(0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Number fields

namespace {

using Matrix = std::vector<std::vector<BigRat>>;

/// Solves sum_j x_j cols[j] = rhs when the columns are independent; nullopt
/// if rhs is outside their span.
std::optional<std::vector<BigRat>> solve_columns(const std::vector<std::vector<BigRat>>& cols,
                                                 const std::vector<BigRat>& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t k = cols.size();
  Matrix m(rows, std::vector<BigRat>(k + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
    m[i][k] = rhs[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < k && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && m[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    BigRat inv = 1 / m[r][j];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][j] == 0) continue;
      BigRat f = m[i][j];
      for (std::size_t jj = j; jj <= k; ++jj) m[i][jj] -= f * m[r][jj];
    }
    pivots.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][k] != 0) return std::nullopt;
  if (pivots.size() != k) throw Error(ErrorKind::Internal, "dependent columns in linear solve");
  std::vector<BigRat> x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = m[i][k];
  return x;
}

}  // namespace

NumberField::NumberField(RatPoly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1 || modulus_.degree() > 4 || modulus_.leading() != 1)
    throw Error(ErrorKind::Domain, "number field modulus must be monic of degree 1..4");
  if (!irreducible_over_Q_small(clear_denominators(modulus_)))
    throw Error(ErrorKind::ReducibleInput, "number field modulus is reducible");
}

NumberField NumberField::from_int_poly(const IntPoly& modulus) { return NumberField(to_rat(modulus)); }

NumberFieldElem NumberField::from_rat(const BigRat& r) const {
  Elem e = zero();
  e[0] = r;
  return e;
}

NumberFieldElem NumberField::generator() const { return from_poly(RatPoly::x(RationalField{})); }

NumberFieldElem NumberField::from_poly(const RatPoly& p) const {
  auto r = divmod(p, modulus_).second;
  Elem e = zero();
  for (int i = 0; i <= r.degree(); ++i) e[static_cast<std::size_t>(i)] = r.coeffs()[static_cast<std::size_t>(i)];
  return e;
}

RatPoly NumberField::to_poly(const Elem& e) const { return RatPoly(RationalField{}, e); }

bool NumberField::is_zero(const Elem& e) const {
  return std::all_of(e.begin(), e.end(), [](const BigRat& v) { return v == 0; });
}

NumberFieldElem NumberField::add(const Elem& a, const Elem& b) const {
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

NumberFieldElem NumberField::sub(const Elem& a, const Elem& b) const {
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

NumberFieldElem NumberField::neg(const Elem& a) const { return scale(a, BigRat(-1)); }

NumberFieldElem NumberField::scale(const Elem& a, const BigRat& r) const {
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * r;
  return out;
}

NumberFieldElem NumberField::mul(const Elem& a, const Elem& b) const {
  return from_poly(to_poly(a) * to_poly(b));
}

std::vector<std::vector<BigRat>> NumberField::multiplication_matrix(const Elem& e) const {
  const auto n = static_cast<std::size_t>(degree());
  Matrix m(n, std::vector<BigRat>(n));
  Elem basis = one();
  const Elem a = generator();
  for (std::size_t j = 0; j < n; ++j) {
    Elem col = mul(e, basis);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    basis = mul(basis, a);
  }
  return m;
}

NumberFieldElem NumberField::inv(const Elem& a) const {
  if (is_zero(a)) throw Error(ErrorKind::Domain, "inverse of zero in number field");
  const auto m = multiplication_matrix(a);
  std::vector<std::vector<BigRat>> cols;
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<BigRat> col;
    for (const auto& row : m) col.push_back(row[j]);
    cols.push_back(std::move(col));
  }
  auto x = solve_columns(cols, one());
  if (!x) throw Error(ErrorKind::Internal, "singular multiplication matrix");
  return *x;
}

NumberFieldElem NumberField::pow(const Elem& a, long e) const {
  Elem base = e < 0 ? inv(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Elem acc = one();
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::string NumberField::format(const Elem& e) const { return shacert::format(to_poly(e), "a"); }

RatPoly characteristic_polynomial(const NumberField& K, const NumberFieldElem& e) {
  RationalField Q;
  PolyRing<RationalField> R{Q};
  const auto m = K.multiplication_matrix(e);
  const std::size_t n = m.size();
  std::vector<std::vector<RatPoly>> a(n, std::vector<RatPoly>(n, RatPoly(Q)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = RatPoly(Q, {BigRat(-m[i][j]), BigRat(i == j ? 1 : 0)});
  return bareiss_determinant(R, a);
}

RatPoly minimal_polynomial(const NumberField& K, const NumberFieldElem& e) {
  std::vector<std::vector<BigRat>> powers{K.one()};
  for (int k = 1; k <= K.degree(); ++k) {
    auto next = K.mul(powers.back(), e);
    if (auto x = solve_columns(powers, next)) {
      std::vector<BigRat> c;
      for (const auto& v : *x) c.push_back(-v);
      c.emplace_back(1);
      return RatPoly(RationalField{}, std::move(c));
    }
    powers.push_back(std::move(next));
  }
  throw Error(ErrorKind::Internal, "no dependency among powers up to the field degree");
}

IntPoly cyclotomic(int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "cyclotomic index must be positive");
  IntegerRing Z;
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  c[0] = -1;
  c.back() = 1;
  IntPoly f(Z, std::move(c));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) f = divide_exact(f, cyclotomic(d));
  return f;
}

const std::vector<int>& small_cyclotomic_orders() {
  static const std::vector<int> orders{1, 2, 3, 4, 5, 6, 8, 10, 12};
  return orders;
}

std::optional<int> root_of_unity_order(const NumberField& K, const NumberFieldElem& e) {
  const RatPoly mp = minimal_polynomial(K, e);
  for (int n : small_cyclotomic_orders())
    if (to_rat(cyclotomic(n)) == mp) return n;
  return std::nullopt;
}

SimplicityCertificate absolutely_simple(const WeilPoly& w) {
  auto check = verify_weil_conditions(w);
  if (!check.ok) throw Error(ErrorKind::Precondition, "not a Weil polynomial: " + check.reasons.front());
  SimplicityCertificate cert;
  cert.weil = w;
  cert.real_weil = real_weil_poly(w);
  const IntPoly W = w.poly();
  cert.factorisation = factor_quartic(W);
  cert.irreducible = cert.factorisation.irreducible;
  if (!cert.irreducible) {
    cert.splitting_evidence = true;
    cert.reason = "reducible";
    return cert;
  }
  cert.resolvent = resolvent_cubic(W);
  if (cert.resolvent->subfield_count != 1) {
    cert.reason = "quadratic subfield count " + std::to_string(cert.resolvent->subfield_count);
    return cert;
  }
  NumberField L = NumberField::from_int_poly(W);
  const auto alpha = L.generator();
  const auto q_over_alpha = L.scale(L.inv(alpha), BigRat(w.q));
  cert.beta_minpoly = minimal_polynomial(L, L.add(alpha, q_over_alpha));
  cert.beta_matches_real_weil = *cert.beta_minpoly == to_rat(cert.real_weil);
  if (!cert.beta_matches_real_weil) {
    cert.reason = "a + q/a does not generate the real Weil field";
    return cert;
  }
  const auto gamma = L.mul(q_over_alpha, L.inv(alpha));
  cert.gamma_minpoly = minimal_polynomial(L, gamma);
  cert.gamma_root_order = root_of_unity_order(L, gamma);
  if (cert.gamma_root_order) {
    cert.reason = "q/a^2 is a root of unity of order " + std::to_string(*cert.gamma_root_order);
    return cert;
  }
  cert.simple = true;
  cert.reason = "certified";
  return cert;
}

std::pair<BigInt, BigInt> hasse_interval(const BigInt& q, int genus) {
  if (genus < 0 || genus > 2) throw Error(ErrorKind::Precondition, "genus must be 0, 1 or 2");
  if (q < 1) throw Error(ErrorKind::Domain, "q must be positive");
  // floor(2g sqrt q) = isqrt(4 g^2 q)
  BigInt spread = isqrt(BigInt(4 * genus * genus) * q);
  BigInt lo = q + 1 - spread;
  if (lo < 0) lo = 0;
  return {lo, q + 1 + spread};
}

bool smooth_genus1_has_point(const BigInt& q) {
  // (sqrt q - 1)^2 > 0  <=>  q + 1 > 2 sqrt q  <=>  (q - 1)^2 > 0
  return q >= 2;
}

}  // namespace shacert
