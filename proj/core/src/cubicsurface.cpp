#include "shacert/cubicsurface.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "shacert/error.hpp"
#include "shacert/parallel.hpp"

namespace shacert {

namespace {

std::int64_t small_coefficient(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::Domain, "coefficient too large: " + v.get_str());
  return v.get_si();
}

BigInt symmetric(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw Error(ErrorKind::Internal, "non-invertible residue");
  return r;
}

}  // namespace

DiagonalCubic::DiagonalCubic(Quad coefficients) : coef(std::move(coefficients)) {
  for (const auto& c : coef)
    if (c == 0) throw Error(ErrorKind::Domain, "diagonal cubic coefficients must be nonzero");
}

DiagonalCubic DiagonalCubic::cassels_guy() { return DiagonalCubic(Quad{5, 9, 10, 12}); }

BigInt DiagonalCubic::eval(const Quad& pt) const {
  BigInt acc = 0;
  for (std::size_t i = 0; i < 4; ++i) acc += coef[i] * pt[i] * pt[i] * pt[i];
  return acc;
}

BigInt DiagonalCubic::partial(const Quad& pt, int i) const {
  const auto k = static_cast<std::size_t>(i);
  return 3 * coef[k] * pt[k] * pt[k];
}

std::vector<std::uint64_t> DiagonalCubic::bad_primes() const {
  std::set<std::uint64_t> ps{3};
  for (const auto& c : coef) {
    BigInt a = abs(c);
    if (!a.fits_ulong_p()) throw Error(ErrorKind::Domain, "coefficient too large to factor: " + c.get_str());
    for (auto p : prime_factors(a.get_ui())) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

bool DiagonalCubic::is_bad(std::uint64_t p) const {
  if (p == 3) return true;
  const BigInt bp(static_cast<unsigned long>(p));
  return std::any_of(coef.begin(), coef.end(), [&](const BigInt& c) { return c % bp == 0; });
}

std::string DiagonalCubic::text() const {
  std::ostringstream os;
  os << coef[0].get_str() << ',' << coef[1].get_str() << ',' << coef[2].get_str() << ',' << coef[3].get_str();
  return os.str();
}

const char* to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::RealOddDegree: return "odd-degree";
    case WitnessKind::SmoothModP: return "smooth-mod-p";
    case WitnessKind::HenselBadPrime: return "hensel";
  }
  return "unknown";
}

std::string LocalWitness::place() const { return p == 0 ? "real" : "p=" + std::to_string(p); }

std::string format_quad(const Quad& q) {
  std::ostringstream os;
  os << '(' << q[0].get_str() << ',' << q[1].get_str() << ',' << q[2].get_str() << ',' << q[3].get_str() << ')';
  return os.str();
}

namespace {

/// Fills in the Newton data of a finite-place witness from its point.
bool newton_data(const DiagonalCubic& s, LocalWitness& w) {
  w.value_valuation = valuation(s.eval(w.point), w.p);
  for (int i = 0; i < 4; ++i) {
    int e = valuation(s.partial(w.point, i), w.p);
    if (w.value_valuation > 2 * e) {
      w.newton_index = i;
      w.derivative_valuation = e;
      return true;
    }
  }
  return false;
}

bool is_primitive_mod(const Quad& pt, std::uint64_t p) {
  const BigInt bp(static_cast<unsigned long>(p));
  return std::any_of(pt.begin(), pt.end(), [&](const BigInt& c) { return c % bp != 0; });
}

}  // namespace

bool verify_witness(const DiagonalCubic& s, const LocalWitness& w) {
  if (w.p == 0) {
    if (w.kind != WitnessKind::RealOddDegree) return false;
    BigRat lhs = 0;
    for (std::size_t i = 0; i < 3; ++i) lhs += BigRat(s.coef[i] * w.point[i] * w.point[i] * w.point[i]);
    bool nontrivial = w.point[0] != 0 || w.point[1] != 0 || w.point[2] != 0;
    return nontrivial && lhs + BigRat(s.coef[3]) * w.real_cube == 0;
  }
  if (w.kind == WitnessKind::RealOddDegree || !is_primitive_mod(w.point, w.p)) return false;
  if (w.newton_index < 0 || w.newton_index > 3) return false;
  int v = valuation(s.eval(w.point), w.p);
  int e = valuation(s.partial(w.point, w.newton_index), w.p);
  if (v != w.value_valuation || e != w.derivative_valuation) return false;
  if (v < w.precision || v <= 2 * e) return false;
  return w.kind != WitnessKind::SmoothModP || e == 0;
}

LocalWitness smooth_fp_point(const DiagonalCubic& s, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::Domain, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 32)) throw Error(ErrorKind::Domain, "prime too large for the residue search");
  if (s.is_bad(p)) throw Error(ErrorKind::WrongBranch, "p = " + std::to_string(p) + " divides 3abcd");
  const BigInt bp(static_cast<unsigned long>(p));
  // cube_root[r] = least x with x^3 = r mod p, or p if none.
  std::vector<std::uint64_t> cube_root(p, p);
  for (std::uint64_t x = p; x-- > 0;) {
    std::uint64_t c = x * x % p * x % p;
    cube_root[static_cast<std::size_t>(c)] = x;
  }
  std::array<std::uint64_t, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) {
    BigInt r = s.coef[i] % bp;
    if (r < 0) r += bp;
    c[i] = r.get_ui();
  }
  const BigInt inv_a = mod_inverse(BigInt(static_cast<unsigned long>(c[0])), bp);
  auto cube = [&](std::uint64_t v) {
    return v * v % p * v % p;
  };
  for (std::uint64_t w = 0; w < p; ++w) {
    for (std::uint64_t z = 0; z < p; ++z) {
      for (std::uint64_t y = 0; y < p; ++y) {
        std::uint64_t rest = (c[1] * cube(y) % p + c[2] * cube(z) % p + c[3] * cube(w) % p) % p;
        BigInt target = (bp - BigInt(static_cast<unsigned long>(rest))) % bp * inv_a % bp;
        std::uint64_t x = cube_root[target.get_ui()];
        if (x == p || (x == 0 && y == 0 && z == 0 && w == 0)) continue;
        Quad pt{BigInt(static_cast<unsigned long>(x)), BigInt(static_cast<unsigned long>(y)),
                BigInt(static_cast<unsigned long>(z)), BigInt(static_cast<unsigned long>(w))};
        const auto lead = std::find_if(pt.begin(), pt.end(), [](const BigInt& v) { return v != 0; });
        const BigInt scale = mod_inverse(*lead, bp);
        for (auto& v : pt) v = symmetric(v * scale, bp);
        LocalWitness wit;
        wit.p = p;
        wit.kind = WitnessKind::SmoothModP;
        wit.point = pt;
        wit.precision = 1;
        if (!newton_data(s, wit) || wit.derivative_valuation != 0)
          throw Error(ErrorKind::Internal, "singular zero of a diagonal cubic at a good prime");
        return wit;
      }
    }
  }
  throw Error(ErrorKind::Internal, "no nontrivial zero mod " + std::to_string(p));
}

LocalWitness real_witness(const DiagonalCubic& s) {
  LocalWitness w;
  w.p = 0;
  w.kind = WitnessKind::RealOddDegree;
  w.point = Quad{1, 0, 0, 0};
  w.real_cube = BigRat(-s.coef[0], s.coef[3]);
  w.real_cube.canonicalize();
  return w;
}

namespace {

std::optional<LocalWitness> hensel_search(const DiagonalCubic& s, std::uint64_t p, int max_precision) {
  constexpr std::size_t kFrontierCap = 200000;
  const BigInt bp(static_cast<unsigned long>(p));
  // Level 1: primitive points mod p with first unit coordinate 1.
  std::vector<Quad> frontier;
  for (int k = 0; k < 4; ++k) {
    const auto free = static_cast<unsigned>(3 - k);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < free; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Quad pt{0, 0, 0, 0};
      pt[static_cast<std::size_t>(k)] = 1;
      std::uint64_t rest = idx;
      for (int j = 3; j > k; --j) {
        pt[static_cast<std::size_t>(j)] = BigInt(static_cast<unsigned long>(rest % p));
        rest /= p;
      }
      if (s.eval(pt) % bp == 0) frontier.push_back(pt);
    }
  }
  BigInt modulus = bp;
  for (int m = 1; m <= max_precision && !frontier.empty(); ++m) {
    for (const auto& pt : frontier) {
      LocalWitness w;
      w.p = p;
      w.kind = WitnessKind::HenselBadPrime;
      w.precision = m;
      for (std::size_t i = 0; i < 4; ++i) w.point[i] = symmetric(pt[i], modulus);
      if (newton_data(s, w) && w.value_valuation >= m) return w;
    }
    if (m == max_precision) break;
    const BigInt next = modulus * bp;
    std::vector<Quad> lifted;
    for (const auto& pt : frontier) {
      const auto fixed = static_cast<std::size_t>(std::find(pt.begin(), pt.end(), BigInt(1)) - pt.begin());
      std::uint64_t count = p * p * p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Quad child = pt;
        std::uint64_t rest = idx;
        for (std::size_t j = 4; j-- > 0;) {
          if (j == fixed) continue;
          child[j] += modulus * BigInt(static_cast<unsigned long>(rest % p));
          rest /= p;
        }
        if (s.eval(child) % next == 0) lifted.push_back(std::move(child));
        if (lifted.size() > kFrontierCap) break;
      }
      if (lifted.size() > kFrontierCap) break;
    }
    frontier = std::move(lifted);
    modulus = next;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LocalWitness> local_solvable(const DiagonalCubic& s, std::uint64_t p, int max_precision) {
  if (p == 0) return real_witness(s);
  if (!is_prime(p)) throw Error(ErrorKind::Domain, std::to_string(p) + " is not prime");
  if (!s.is_bad(p)) return smooth_fp_point(s, p);
  return hensel_search(s, p, max_precision);
}

namespace {

__extension__ using i128 = __int128;

/// Exact integer cube root of n, if any.
std::optional<std::int64_t> exact_cbrt(i128 n) {
  const bool neg = n < 0;
  const i128 m = neg ? -n : n;
  auto r = static_cast<i128>(std::llround(std::cbrt(static_cast<long double>(m))));
  for (i128 c = std::max<i128>(0, r - 2); c <= r + 2; ++c)
    if (c * c * c == m) return static_cast<std::int64_t>(neg ? -c : c);
  return std::nullopt;
}

}  // namespace

std::vector<Quad> rational_search(const DiagonalCubic& s, long height, unsigned jobs) {
  if (height < 1) throw Error(ErrorKind::Precondition, "height bound must be at least 1");
  std::array<std::int64_t, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) c[i] = small_coefficient(s.coef[i]);
  const auto span = static_cast<std::size_t>(2 * height + 1);
  auto rows = parallel_map(span, jobs, [&](std::size_t wi) {
    std::vector<Quad> found;
    const std::int64_t w = static_cast<std::int64_t>(wi) - height;
    for (std::int64_t z = -height; z <= height; ++z) {
      for (std::int64_t y = -height; y <= height; ++y) {
        i128 rest = static_cast<i128>(c[1]) * y * y * y + static_cast<i128>(c[2]) * z * z * z +
                        static_cast<i128>(c[3]) * w * w * w;
        if (rest % c[0] != 0) continue;
        auto x = exact_cbrt(-rest / c[0]);
        if (!x || *x > height || *x < -height) continue;
        std::array<std::int64_t, 4> pt{*x, y, z, w};
        const auto lead = std::find_if(pt.begin(), pt.end(), [](std::int64_t v) { return v != 0; });
        if (lead == pt.end() || *lead < 0) continue;
        std::int64_t g = 0;
        for (auto v : pt) g = std::gcd(g, v);
        if (g != 1) continue;
        found.push_back(Quad{BigInt(static_cast<long>(pt[0])), BigInt(static_cast<long>(pt[1])),
                             BigInt(static_cast<long>(pt[2])), BigInt(static_cast<long>(pt[3]))});
      }
    }
    return found;
  });
  std::vector<Quad> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

CubicReport verify_cassels_guy(std::uint64_t prime_bound, long height, const DiagonalCubic& surface,
                               unsigned jobs, int max_precision) {
  if (prime_bound < 5) throw Error(ErrorKind::Precondition, "prime bound must be at least 5");
  CubicReport report;
  report.surface = surface;
  report.prime_bound = prime_bound;
  report.height = height;
  report.real = real_witness(surface);
  report.real_verified = verify_witness(surface, report.real);

  std::vector<std::uint64_t> primes = primes_below(prime_bound + 1);
  for (auto p : surface.bad_primes())
    if (p > prime_bound) primes.push_back(p);
  report.primes = parallel_map(primes.size(), jobs, [&](std::size_t i) {
    PrimeCheck check;
    check.p = primes[i];
    check.bad = surface.is_bad(check.p);
    check.witness = local_solvable(surface, check.p, max_precision);
    check.verified = check.witness && verify_witness(surface, *check.witness);
    return check;
  });
  report.good_prime_note = "every prime p > " + std::to_string(prime_bound) +
                           " not dividing 3abcd: a nonzero form in 4 variables of degree 3 has a nontrivial zero "
                           "mod p (Chevalley-Warning), nonsingular since the coefficients are units, and it lifts";
  report.locally_solvable = report.real_verified &&
                            std::all_of(report.primes.begin(), report.primes.end(),
                                        [](const PrimeCheck& c) { return c.verified; });
  report.rational_points = rational_search(surface, height, jobs);
  report.search_empty = report.rational_points.empty();
  report.pass = report.locally_solvable && report.search_empty;
  return report;
}

}  // namespace shacert
