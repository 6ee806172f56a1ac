#include "shacert/finitefield.hpp"

#include <sstream>

namespace shacert {

FqCtx::FqCtx(std::uint64_t p, const Poly<PrimeField>& modulus) {
  PrimeField fp(p);
  if (!(modulus.ring() == fp)) throw Error(ErrorKind::RingMismatch, "modulus over wrong prime field");
  const int k = modulus.degree();
  if (k < 1) throw Error(ErrorKind::Domain, "modulus must have degree >= 1");
  if (modulus.leading() != 1) throw Error(ErrorKind::Domain, "modulus must be monic");
  if (k > 1 && !irreducible_mod_p(modulus))
    throw Error(ErrorKind::Domain, "modulus is not irreducible");
  std::uint64_t q = ipow(p, static_cast<unsigned>(k));
  data_ = std::make_shared<const Data>(Data{p, k, q, fp, modulus});
}

bool FqCtx::operator==(const FqCtx& o) const {
  return data_ == o.data_ || (p() == o.p() && modulus() == o.modulus());
}

FqElem FqCtx::one() const {
  Elem e = zero();
  e.c[0] = 1;
  return e;
}

FqElem FqCtx::generator() const {
  if (k() == 1) return zero();
  return from_residue(Poly<PrimeField>::x(prime_field()));
}

FqElem FqCtx::from_int(const BigInt& v) const {
  Elem e = zero();
  e.c[0] = prime_field().from_int(v);
  return e;
}

FqElem FqCtx::from_int(std::int64_t v) const {
  Elem e = zero();
  e.c[0] = prime_field().from_int(v);
  return e;
}

FqElem FqCtx::from_residue(const Poly<PrimeField>& r) const {
  require_same_ring(r.ring(), prime_field());
  Elem e = zero();
  if (k() == 1) {
    // The placeholder modulus x is not used for reduction; residues are constants.
    if (r.degree() > 0) throw Error(ErrorKind::Domain, "prime-field element given with degree > 0");
    e.c[0] = r.coeff(0);
    return e;
  }
  auto red = divmod(r, modulus()).second;
  for (std::size_t i = 0; i < red.coeffs().size(); ++i) e.c[i] = red.coeffs()[i];
  return e;
}

Poly<PrimeField> FqCtx::residue(const Elem& a) const {
  return Poly<PrimeField>(prime_field(), a.c);
}

bool FqCtx::is_zero(const Elem& a) const {
  for (auto v : a.c)
    if (v) return false;
  return true;
}

FqElem FqCtx::add(const Elem& a, const Elem& b) const {
  const auto& F = prime_field();
  Elem r = zero();
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.c[i], b.c[i]);
  return r;
}

FqElem FqCtx::sub(const Elem& a, const Elem& b) const {
  const auto& F = prime_field();
  Elem r = zero();
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.c[i], b.c[i]);
  return r;
}

FqElem FqCtx::neg(const Elem& a) const {
  const auto& F = prime_field();
  Elem r = zero();
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.neg(a.c[i]);
  return r;
}

FqElem FqCtx::mul(const Elem& a, const Elem& b) const {
  const auto& F = prime_field();
  const auto n = static_cast<std::size_t>(k());
  if (n == 1) return Elem{{F.mul(a.c[0], b.c[0])}};
  std::vector<std::uint64_t> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = F.add(prod[i + j], F.mul(a.c[i], b.c[j]));
  }
  // Reduce with the monic modulus: u^n = -sum m_i u^i.
  const auto& m = modulus().coeffs();
  for (std::size_t d = prod.size(); d-- > n;) {
    auto top = prod[d];
    if (!top) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < n; ++i) prod[d - n + i] = F.sub(prod[d - n + i], F.mul(top, m[i]));
  }
  prod.resize(n);
  return Elem{std::move(prod)};
}

FqElem FqCtx::pow(const Elem& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = one();
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FqElem FqCtx::inv(const Elem& a) const {
  if (is_zero(a)) throw Error(ErrorKind::Domain, "inverse of zero");
  return pow(a, BigInt(static_cast<unsigned long>(q() - 2)));
}

FqElem FqCtx::pth_root(const Elem& a) const {
  return pow(a, BigInt(static_cast<unsigned long>(q() / p())));
}

FqElem FqCtx::frobenius(const Elem& a) const {
  return pow(a, BigInt(static_cast<unsigned long>(p())));
}

std::uint64_t FqCtx::index(const Elem& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) idx = idx * p() + a.c[i];
  return idx;
}

FqElem FqCtx::element(std::uint64_t idx) const {
  if (idx >= q()) throw Error(ErrorKind::Domain, "element index out of range");
  Elem e = zero();
  for (auto& v : e.c) {
    v = idx % p();
    idx /= p();
  }
  return e;
}

std::string FqCtx::format(const Elem& a) const {
  if (k() == 1) return std::to_string(a.c[0]);
  std::string out;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(a.c[i]);
    } else {
      if (a.c[i] != 1) out += std::to_string(a.c[i]);
      out += "u";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string FqCtx::name() const {
  if (k() == 1) return "GF(" + std::to_string(p()) + ")";
  return "GF(" + std::to_string(p()) + "^" + std::to_string(k()) + ")[u]/(" +
         shacert::format(modulus(), "u") + ")";
}

FqCtx fq_make(std::uint64_t p, int k) {
  if (!is_prime(p)) throw Error(ErrorKind::Domain, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::Domain, "extension degree must be >= 1");
  PrimeField fp(p);
  if (k == 1) return FqCtx(p, Poly<PrimeField>::x(fp));
  const std::uint64_t count = ipow(p, static_cast<unsigned>(k));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t rest = idx;
    for (int i = 0; i < k; ++i) {
      c[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    c.back() = 1;
    Poly<PrimeField> m(fp, std::move(c));
    if (irreducible_mod_p(m)) return FqCtx(p, m);
  }
  throw Error(ErrorKind::Internal, "no irreducible modulus found");
}

FqCtx fq_make(std::uint64_t q) {
  int k = 0;
  auto p = prime_power_base(q, k);
  if (p == 0) throw Error(ErrorKind::Domain, std::to_string(q) + " is not a prime power");
  return fq_make(p, k);
}

int quadratic_character(const FqCtx& F, const FqElem& a) {
  if (F.p() == 2) throw Error(ErrorKind::UnsupportedCharacteristic, "quadratic character needs odd q");
  if (F.is_zero(a)) return 0;
  auto r = F.pow(a, BigInt(static_cast<unsigned long>((F.q() - 1) / 2)));
  if (r == F.one()) return 1;
  if (r == F.neg(F.one())) return -1;
  throw Error(ErrorKind::Internal, "Euler criterion gave neither 1 nor -1");
}

std::vector<FqElem> fq_enumerate(const FqCtx& F) {
  std::vector<FqElem> out;
  out.reserve(F.q());
  for (std::uint64_t i = 0; i < F.q(); ++i) out.push_back(F.element(i));
  return out;
}

std::string residue_text(const FqElem& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) os << ',';
    os << a.c[i];
  }
  return os.str();
}

FqElem parse_fq(const FqCtx& F, std::string_view text) {
  IntPoly r = parse_int_poly(text);
  return F.from_residue(reduce(r, F.prime_field()));
}

}  // namespace shacert
