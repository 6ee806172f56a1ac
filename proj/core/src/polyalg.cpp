#include "shacert/polyalg.hpp"

#include <algorithm>
#include <sstream>

namespace shacert {

BigInt IntegerRing::divexact(const BigInt& a, const BigInt& b) const {
  if (b == 0) throw Error(ErrorKind::Domain, "division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw Error(ErrorKind::Domain, "inexact integer division");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 32) || !is_prime(p))
    throw Error(ErrorKind::Domain, "prime field modulus must be a prime below 2^32");
}

PrimeField::Elem PrimeField::from_int(const BigInt& v) const {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  auto m = static_cast<std::int64_t>(p_);
  auto r = v % m;
  return static_cast<Elem>(r < 0 ? r + m : r);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  a %= p_;
  while (e) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw Error(ErrorKind::Domain, "inverse of zero");
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------

namespace {

int max_t_degree(const BivarPoly& f) {
  int m = -1;
  for (const auto& c : f.coeffs()) m = std::max(m, c.degree());
  return m;
}

BivarPoly derivative_x(const BivarPoly& f) { return derivative(f); }

}  // namespace

IntPoly evaluate_t(const BivarPoly& f, const BigInt& value) {
  IntegerRing Z;
  return map_coeffs(f, Z, [&](const IntPoly& c) { return c(value); });
}

int discriminant_degree_bound(const BivarPoly& f) {
  const int d = f.degree();
  auto fp = derivative_x(f);
  return (d - 1) * std::max(0, max_t_degree(f)) + d * std::max(0, max_t_degree(fp));
}

IntPoly discriminant_interpolated(const BivarPoly& f) {
  const int d = f.degree();
  if (d < 2) throw Error(ErrorKind::Domain, "discriminant needs degree >= 2");
  const int bound = discriminant_degree_bound(f);
  auto fp = derivative_x(f);
  std::vector<BigRat> nodes;
  std::vector<BigRat> values;
  for (int node = 0; node <= bound; ++node) {
    BigInt t(node);
    auto f_at = evaluate_t(f, t);
    auto fp_at = evaluate_t(fp, t);
    nodes.emplace_back(t);
    values.emplace_back(resultant_formal(f_at, d, fp_at, d - 1));
  }
  IntPoly res = to_int(interpolate(nodes, values));
  IntPoly disc = divide_exact(res, f.leading());
  return ((d * (d - 1) / 2) % 2 != 0) ? -disc : disc;
}

IntPoly discriminant_elimination(const BivarPoly& f) {
  return shacert::discriminant<IntPolyT>(f);
}

IntPoly discriminant(const BivarPoly& f) {
  auto via_nodes = discriminant_interpolated(f);
  auto via_elimination = discriminant_elimination(f);
  if (via_nodes != via_elimination)
    throw Error(ErrorKind::Internal, "discriminant cross-check failed");
  return via_nodes;
}

// ---------------------------------------------------------------------------

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& a : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  return map_coeffs(f, IntegerRing{}, [&](const BigInt& a) { return IntegerRing{}.divexact(a, c); });
}

RatPoly to_rat(const IntPoly& f) {
  return map_coeffs(f, RationalField{}, [](const BigInt& a) { return BigRat(a); });
}

IntPoly to_int(const RatPoly& f) {
  return map_coeffs(f, IntegerRing{}, [](const BigRat& a) {
    if (a.get_den() != 1) throw Error(ErrorKind::Domain, "non-integral coefficient " + a.get_str());
    return BigInt(a.get_num());
  });
}

IntPoly clear_denominators(const RatPoly& f) {
  BigInt l = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  auto scaled = map_coeffs(f, IntegerRing{}, [&](const BigRat& a) {
    return BigInt(a.get_num() * (l / a.get_den()));
  });
  return primitive_part(scaled);
}

Poly<PrimeField> reduce(const IntPoly& f, const PrimeField& F) {
  return map_coeffs(f, F, [&](const BigInt& a) { return F.from_int(a); });
}

RatPoly interpolate(const std::vector<BigRat>& nodes, const std::vector<BigRat>& values) {
  if (nodes.size() != values.size()) throw Error(ErrorKind::Domain, "node/value count mismatch");
  const std::size_t n = nodes.size();
  RationalField Q;
  // Newton divided differences, then expansion in the monomial basis.
  std::vector<BigRat> dd = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      BigRat gap = nodes[i] - nodes[i - level];
      if (gap == 0) throw Error(ErrorKind::Domain, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  RatPoly result(Q);
  for (std::size_t i = n; i-- > 0;) {
    result = result * RatPoly(Q, {-nodes[i], BigRat(1)}) + RatPoly::constant(Q, dd[i]);
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

IntPoly parse_int_poly(std::string_view text) {
  std::vector<BigInt> c;
  for (const auto& item : split_commas(text)) c.push_back(parse_int(item));
  return IntPoly(IntegerRing{}, std::move(c));
}

RatPoly parse_rat_poly(std::string_view text) {
  std::vector<BigRat> c;
  for (const auto& item : split_commas(text)) c.push_back(parse_rat(item));
  return RatPoly(RationalField{}, std::move(c));
}

template <class P>
static std::string join_coeffs(const P& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ',';
    os << f.coeffs()[i].get_str();
  }
  return os.str();
}

std::string coeff_list(const IntPoly& f) { return join_coeffs(f); }
std::string coeff_list(const RatPoly& f) { return join_coeffs(f); }

// ---------------------------------------------------------------------------

namespace {

/// Candidate rational roots of a primitive integer polynomial with f(0) != 0.
template <class Visit>
bool for_each_root_candidate(const IntPoly& f, Visit visit) {
  auto nums = positive_divisors(f.coeffs().front());
  auto dens = positive_divisors(f.leading());
  for (const auto& d : dens) {
    for (const auto& n : nums) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      if (g != 1) continue;
      if (visit(make_rat(n, d))) return true;
      if (visit(make_rat(-n, d))) return true;
    }
  }
  return false;
}

/// Strip the factor x^k; returns k.
int strip_x_power(IntPoly& f) {
  std::size_t k = 0;
  while (k < f.coeffs().size() && f.coeffs()[k] == 0) ++k;
  if (k > 0) f = IntPoly(f.ring(), std::vector<BigInt>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end()));
  return static_cast<int>(k);
}

}  // namespace

std::optional<BigRat> find_rational_root(const RatPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "rational roots of zero polynomial");
  IntPoly g = clear_denominators(f);
  if (strip_x_power(g) > 0) return BigRat(0);
  if (g.degree() <= 0) return std::nullopt;
  std::optional<BigRat> found;
  for_each_root_candidate(g, [&](const BigRat& r) {
    if (f(r) == 0) {
      found = r;
      return true;
    }
    return false;
  });
  return found;
}

std::vector<BigRat> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "rational roots of zero polynomial");
  IntPoly g = clear_denominators(f);
  std::vector<BigRat> roots(static_cast<std::size_t>(strip_x_power(g)), BigRat(0));
  if (g.degree() > 0) {
    RatPoly rest = to_rat(g);
    std::vector<BigRat> simple;
    for_each_root_candidate(g, [&](const BigRat& r) {
      if (g.degree() > 0 && rest(r) == 0) simple.push_back(r);
      return false;
    });
    RationalField Q;
    for (const auto& r : simple) {
      RatPoly lin(Q, {-r, BigRat(1)});
      while (rest.degree() > 0) {
        auto [q, rem] = divmod(rest, lin);
        if (!rem.is_zero()) break;
        roots.push_back(r);
        rest = q;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

/// Integer quadratic factor x^2 + p x + q of a monic integer quartic.
std::optional<IntPoly> monic_quartic_quadratic_factor(const IntPoly& g) {
  const BigInt& a = g.coeffs()[3];
  const BigInt& b = g.coeffs()[2];
  const BigInt& c = g.coeffs()[1];
  const BigInt& d = g.coeffs()[0];
  IntegerRing Z;
  if (d == 0) return std::nullopt;
  for (const auto& pos : positive_divisors(d)) {
    for (int sign : {1, -1}) {
      BigInt q = pos * sign;
      BigInt s = d / q;
      // (x^2 + p x + q)(x^2 + r x + s): p + r = a, pr + q + s = b, ps + qr = c.
      if (s != q) {
        BigInt num = c - a * q;
        BigInt den = s - q;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
        BigInt p = num / den;
        BigInt r = a - p;
        if (p * r + q + s == b) return IntPoly(Z, {q, p, BigInt(1)});
      } else {
        if (c != a * q) continue;
        // p, r are the roots of z^2 - a z + (b - 2q).
        BigInt disc = a * a - 4 * (b - 2 * q);
        if (!is_perfect_square(disc)) continue;
        BigInt root = isqrt(disc);
        if ((a + root) % 2 != 0) continue;
        BigInt p = (a + root) / 2;
        return IntPoly(Z, {q, p, BigInt(1)});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IntPoly> find_quadratic_factor(const IntPoly& quartic) {
  if (quartic.degree() != 4) throw Error(ErrorKind::Domain, "quadratic factor search needs degree 4");
  IntPoly f = primitive_part(quartic);
  IntegerRing Z;
  if (f.coeffs()[0] == 0) return std::nullopt;
  // g(y) = lc^3 f(y / lc) is monic with integer coefficients.
  const BigInt lc = f.leading();
  std::vector<BigInt> gc(5);
  BigInt scale = 1;
  for (int i = 4; i >= 0; --i) {
    gc[static_cast<std::size_t>(i)] = f.coeffs()[static_cast<std::size_t>(i)] * scale;
    scale *= lc;
  }
  // gc[i] = f_i * lc^{4-i}; divide everything by lc to get lc^{3-i} f_i.
  for (auto& v : gc) v /= lc;
  IntPoly g(Z, gc);
  auto fac = monic_quartic_quadratic_factor(g);
  if (!fac) return std::nullopt;
  // y^2 + p y + q with y = lc x.
  const auto& fc = fac->coeffs();
  IntPoly back(Z, {fc[0], fc[1] * lc, lc * lc});
  back = primitive_part(back);
  if (back.leading() < 0) back = -back;
  return back;
}

bool irreducible_over_Q_small(const IntPoly& f) {
  if (f.degree() < 1 || f.degree() > 4) throw Error(ErrorKind::Domain, "degree must be 1..4");
  if (f.degree() == 1) return true;
  if (find_rational_root(to_rat(f))) return false;
  if (f.degree() == 4 && find_quadratic_factor(f)) return false;
  return true;
}

IrreducibilityCertificate irreducible_over_Q_certificate(const IntPoly& f, std::uint64_t bound) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "irreducibility of zero polynomial");
  if (f.degree() < 1) throw Error(ErrorKind::Domain, "irreducibility needs degree >= 1");
  IntPoly g = primitive_part(f);
  IrreducibilityCertificate cert;
  cert.bound = bound;
  IntegerRing Z;
  if (g.degree() > 1) {
    if (auto r = find_rational_root(to_rat(g))) {
      cert.status = IrreducibilityCertificate::Status::Reducible;
      cert.root = *r;
      cert.factor = IntPoly(Z, {-BigInt(r->get_num()), BigInt(r->get_den())});
      return cert;
    }
    if (g.degree() == 4) {
      if (auto q = find_quadratic_factor(g)) {
        cert.status = IrreducibilityCertificate::Status::Reducible;
        cert.factor = *q;
        return cert;
      }
    }
  }
  for (auto p : primes_below(bound)) {
    if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) continue;
    PrimeField F(p);
    if (irreducible_mod_p(reduce(g, F))) {
      cert.status = IrreducibilityCertificate::Status::Witness;
      cert.prime = p;
      return cert;
    }
  }
  return cert;
}

}  // namespace shacert
