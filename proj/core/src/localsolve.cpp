#include "shacert/localsolve.hpp"

#include <algorithm>
#include <sstream>

#include "shacert/parallel.hpp"

namespace shacert {

const char* to_string(Place place) noexcept {
  switch (place) {
    case Place::Real: return "real";
    case Place::TwoAdic: return "2-adic";
    case Place::OddResidue: return "odd-residue";
  }
  return "unknown";
}

const char* to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Solvable: return "solvable";
    case Outcome::NotSolvable: return "not-solvable";
    case Outcome::CoveredByThreshold: return "covered-by-threshold";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string format(const BivarRat& p) {
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [exps, coef] = *it;
    if (coef == 0) continue;
    if (!first) os << (coef < 0 ? " - " : " + ");
    else if (coef < 0) os << "-";
    first = false;
    BigRat mag = abs(coef);
    bool bare = mag == 1 && (exps.first || exps.second);
    if (!bare) os << mag.get_str();
    auto var = [&](const char* name, int e) {
      if (!e) return;
      if (!bare) os << "*";
      bare = false;
      os << name;
      if (e > 1) os << "^" << e;
    };
    var("x", exps.first);
    var("t", exps.second);
  }
  return first ? "0" : os.str();
}

BigRat evaluate(const BivarRat& p, const BigRat& x, const BigRat& t) {
  BigRat acc = 0;
  for (const auto& [exps, coef] : p) {
    BigRat term = coef;
    for (int i = 0; i < exps.first; ++i) term *= x;
    for (int i = 0; i < exps.second; ++i) term *= t;
    acc += term;
  }
  return acc;
}

int min_coefficient_valuation(const IntPoly& f, std::uint64_t p, int cap) {
  int v = cap;
  for (const auto& c : f.coeffs())
    if (c != 0) v = std::min(v, valuation(c, p, cap));
  return v;
}

// ---------------------------------------------------------------------------
// Real place

namespace {

BivarRat family_real_polynomial() {
  // -(right-hand side of chart 1), to be shown positive.
  BivarRat p;
  const auto fam = family_model1();
  for (int i = 0; i <= fam.degree(); ++i) {
    const auto& c = fam.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= c.degree(); ++j) {
      const auto& v = c.coeffs()[static_cast<std::size_t>(j)];
      if (v != 0) p[{i, j}] = BigRat(-v);
    }
  }
  return p;
}

void check_term(AmGmTerm& term) {
  BigRat sum = 0;
  BigRat ex = 0;
  BigRat et = 0;
  term.weights_nonnegative = true;
  term.pieces_even = true;
  for (const auto& [w, mono] : term.pieces) {
    if (w < 0) term.weights_nonnegative = false;
    if (mono.first % 2 || mono.second % 2) term.pieces_even = false;
    sum += w;
    ex += w * mono.first;
    et += w * mono.second;
  }
  term.weights_sum_to_one = sum == 1;
  term.exponents_match = ex == term.monomial.first && et == term.monomial.second;
}

BivarRat residual_of(const BivarRat& poly, const std::vector<AmGmTerm>& terms) {
  BivarRat r = poly;
  for (const auto& term : terms) {
    r[term.monomial] -= term.coefficient;
    BigRat mag = abs(term.coefficient);
    for (const auto& [w, mono] : term.pieces) r[mono] -= mag * w;
  }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

bool residual_positive(const BivarRat& r, BigRat& minimum) {
  minimum = 0;
  for (const auto& [exps, coef] : r) {
    if (exps.first % 2 || exps.second % 2 || coef < 0) return false;
    if (exps == std::pair{0, 0}) minimum = coef;
  }
  return minimum > 0;
}

bool term_valid(const AmGmTerm& t) {
  return t.weights_nonnegative && t.weights_sum_to_one && t.exponents_match && t.pieces_even;
}

}  // namespace

SolvabilityCertificate real_nonsolvability_certificate() {
  RealEvidence ev;
  ev.polynomial = family_real_polynomial();
  ev.terms.push_back({{1, 5}, BigRat(1), {{make_rat(1, 6), {6, 0}}, {make_rat(5, 6), {0, 6}}}});
  ev.terms.push_back({{5, 0}, BigRat(1), {{make_rat(5, 6), {6, 0}}, {make_rat(1, 6), {0, 0}}}});
  for (auto& t : ev.terms) {
    t.coefficient = ev.polynomial.at(t.monomial);
    check_term(t);
  }
  ev.residual = residual_of(ev.polynomial, ev.terms);
  ev.residual_positive = residual_positive(ev.residual, ev.minimum);
  bool ok = ev.residual_positive;
  for (const auto& t : ev.terms) ok = ok && term_valid(t);
  SolvabilityCertificate cert;
  cert.place = Place::Real;
  cert.outcome = ok ? Outcome::NotSolvable : Outcome::Inconclusive;
  cert.label = "real";
  cert.evidence = std::move(ev);
  return cert;
}

// ---------------------------------------------------------------------------
// p = 2

namespace {

/// g(2S) for g in Z[T].
IntPoly substitute_double(const IntPoly& g) {
  std::vector<BigInt> c;
  BigInt scale = 1;
  for (const auto& a : g.coeffs()) {
    c.push_back(a * scale);
    scale *= 2;
  }
  return IntPoly(IntegerRing{}, std::move(c));
}

/// Exact valuation of a parametrised unit-times-power-of-two: the constant
/// term has valuation v and every other coefficient strictly more.
std::optional<int> exact_valuation(const IntPoly& g) {
  if (g.is_zero() || g.coeffs()[0] == 0) return std::nullopt;
  int v = valuation(g.coeffs()[0], 2);
  for (std::size_t i = 1; i < g.coeffs().size(); ++i)
    if (g.coeffs()[i] != 0 && valuation(g.coeffs()[i], 2) <= v) return std::nullopt;
  return v;
}

BigInt mod_pow2(const BigInt& a, int bits) {
  BigInt m = BigInt(1) << bits;
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt inverse_mod_pow2(const BigInt& a, int bits) {
  BigInt m = BigInt(1) << bits;
  BigInt r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw Error(ErrorKind::Internal, "non-unit in 2-adic Newton step");
  return r;
}

struct NewtonRun {
  std::vector<BigInt> iterates;
  BigInt root;
  bool converged = false;
};

/// Newton's method for G over Z_2 from z0, working mod 2^64 and stopping once
/// G(z) = 0 mod 2^bits. Each iterate is reported modulo the precision it
/// determines the root to (at most 2^bits); `symmetric` picks the smaller of
/// +-z (for G even).
NewtonRun newton_2adic(const IntPoly& G, const BigInt& z0, int bits, bool symmetric) {
  constexpr int kWork = 64;
  const IntPoly dG = derivative(G);
  NewtonRun run;
  BigInt z = z0;
  for (int step = 0; step < 16; ++step) {
    BigInt value = G(z);
    BigInt slope = dG(z);
    int e = valuation(slope, 2);
    int v = valuation(value, 2, kWork);
    int known = std::clamp(v - e, 0, bits);
    BigInt rep = mod_pow2(z, known);
    if (symmetric) rep = std::min(rep, mod_pow2(-z, known));
    run.iterates.push_back(rep);
    if (v >= bits) {
      run.root = mod_pow2(z, bits);
      run.converged = true;
      return run;
    }
    if (v <= 2 * e) return run;
    BigInt num = value >> e;  // exact: v > e
    BigInt den = slope >> e;
    z = mod_pow2(z - num * inverse_mod_pow2(den, kWork), kWork);
    if (z >= (BigInt(1) << (kWork - 1))) z -= BigInt(1) << kWork;
  }
  return run;
}

/// G(z) at the instance parameter, as an integer polynomial in the unknown.
IntPoly instance_polynomial(TwoAdicBranch branch, const BigInt& parameter) {
  if (branch == TwoAdicBranch::NonNegativeValuation) {
    // y^2 - u(t)
    BigInt u = family_model1().coeffs()[0](parameter);
    return IntPoly(IntegerRing{}, {-u, BigInt(0), BigInt(1)});
  }
  return evaluate_t(family_model2(), parameter);
}

TwoAdicEvidence two_adic_evidence(TwoAdicBranch branch) {
  TwoAdicEvidence ev;
  ev.branch = branch;
  IntegerRing Z;
  if (branch == TwoAdicBranch::NonNegativeValuation) {
    // x = 0 on chart 1: y^2 = u(t) with u(t) = -(8t^6 + 7); start y = 1.
    const IntPoly u = family_model1().coeffs()[0];
    ev.chart = Chart::Model1;
    ev.unknown = "y";
    ev.free_variable = "t";
    ev.start = 1;
    ev.value_at_start = IntPoly::constant(Z, BigInt(1)) - u;
    ev.derivative_at_start = IntPoly::constant(Z, BigInt(2));
    ev.unit_check = -u;
    ev.unit_check_holds = valuation(ev.unit_check.coeffs()[0], 2) == 0 &&
                          min_coefficient_valuation(ev.unit_check - IntPoly::constant(Z, ev.unit_check.coeffs()[0]), 2) > 0;
    ev.instance_parameter = 1;
  } else {
    // Y = 0 on chart 2 with T = 2S: F(X) = -(X^6 + T X^5 + X + 8 + 7T^6); start X = 0.
    const BivarPoly fam = family_model2();
    ev.chart = Chart::Model2;
    ev.unknown = "X";
    ev.free_variable = "S";
    ev.start = 0;
    ev.value_at_start = substitute_double(fam.coeffs()[0]);
    ev.derivative_at_start = substitute_double(derivative(fam).coeffs()[0]);
    ev.instance_parameter = 2;
  }
  ev.value_valuation = min_coefficient_valuation(ev.value_at_start, 2);
  auto dv = exact_valuation(ev.derivative_at_start);
  ev.derivative_valuation = dv.value_or(1 << 20);
  ev.newton_condition = dv && ev.value_valuation > 2 * *dv;

  const IntPoly G = instance_polynomial(branch, ev.instance_parameter);
  auto run = newton_2adic(G, ev.start, ev.precision_bits, branch == TwoAdicBranch::NonNegativeValuation);
  ev.iterates = run.iterates;
  ev.instance_verified = run.converged && valuation(G(run.root), 2, 64) >= ev.precision_bits;
  return ev;
}

bool two_adic_valid(const TwoAdicEvidence& ev) {
  return ev.newton_condition && ev.unit_check_holds && ev.instance_verified;
}

}  // namespace

SolvabilityCertificate local_solvable_2adic(TwoAdicBranch branch) {
  SolvabilityCertificate cert;
  cert.place = Place::TwoAdic;
  cert.label = branch == TwoAdicBranch::NonNegativeValuation ? "2-adic v(t)>=0" : "2-adic v(t)<0";
  auto ev = two_adic_evidence(branch);
  cert.outcome = two_adic_valid(ev) ? Outcome::Solvable : Outcome::Inconclusive;
  cert.evidence = std::move(ev);
  return cert;
}

// ---------------------------------------------------------------------------
// Odd residue characteristic

ThresholdCheck weil_threshold_check(std::uint64_t q, int genus) {
  ThresholdCheck c;
  c.q = q;
  c.genus = genus;
  c.margin = BigInt(static_cast<unsigned long>(q)) - 3 + 2 * genus;
  c.margin_sq = c.margin * c.margin;
  c.bound = BigInt(4 * genus * genus) * BigInt(static_cast<unsigned long>(q));
  c.holds = c.margin > 0 && c.margin_sq > c.bound;
  return c;
}

bool weil_threshold(std::uint64_t q, int genus) { return weil_threshold_check(q, genus).holds; }

int genus_of_square_free_part(int deg_h) {
  if (deg_h <= 2) return 0;
  return (deg_h + 1) / 2 - 1;
}

SolvabilityCertificate local_solvable_odd(const FqCtx& F, const OddResidue& residue) {
  if (F.p() == 2) throw Error(ErrorKind::UnsupportedCharacteristic, "odd residue procedure needs odd q");
  OddResidueEvidence ev;
  ev.q = F.q();
  ev.curve = residue.t ? specialize_fiber(F, Chart::Model1, *residue.t) : fiber_at_infinity(F);
  ev.residue = ev.curve.param;
  const auto& f = ev.curve.f;

  ev.square_over_closure = is_square_over_closure(f);
  if (ev.square_over_closure)
    throw Error(ErrorKind::InvariantViolation,
                "reduction is a square over the algebraic closure at q=" + std::to_string(ev.q) + " " +
                    ev.residue);
  auto sp = square_part(f);
  ev.j = sp.j;
  ev.h = sp.h;
  ev.c = sp.c;
  ev.genus = genus_of_square_free_part(ev.h.degree());
  ev.q_is_1_mod_4 = ev.q % 4 == 1;
  if (ev.q_is_1_mod_4 && f.degree() % 2 == 0) ev.infinity_slope = least_square_root(F, f.leading());
  ev.threshold = weil_threshold_check(ev.q, ev.genus);
  ev.witness = has_nonsingular_affine_point(ev.curve);
  if (ev.witness) {
    ev.witness_verified = verify_affine_witness(ev.curve, *ev.witness);
    ev.j_nonzero_at_witness = !F.is_zero(ev.j(ev.witness->x));
  }

  SolvabilityCertificate cert;
  cert.place = Place::OddResidue;
  cert.label = "q=" + std::to_string(ev.q) + " " + ev.residue;
  if (ev.q_is_1_mod_4 && ev.infinity_slope) {
    cert.outcome = Outcome::Solvable;
  } else if (ev.threshold.holds) {
    cert.outcome = Outcome::CoveredByThreshold;
  } else if (ev.witness && ev.witness_verified) {
    cert.outcome = Outcome::Solvable;
  } else {
    cert.outcome = Outcome::Inconclusive;
  }
  cert.evidence = std::move(ev);
  return cert;
}

std::vector<OddResidue> residues_for(const FqCtx& F) {
  std::vector<OddResidue> out;
  for (auto& t : fq_enumerate(F)) out.push_back(OddResidue{std::move(t)});
  out.push_back(OddResidue{std::nullopt});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool recheck_real(const RealEvidence& ev) {
  if (ev.polynomial != family_real_polynomial()) return false;
  for (auto t : ev.terms) {
    check_term(t);
    if (!term_valid(t)) return false;
    auto it = ev.polynomial.find(t.monomial);
    if (it == ev.polynomial.end() || it->second != t.coefficient) return false;
  }
  if (residual_of(ev.polynomial, ev.terms) != ev.residual) return false;
  BigRat minimum;
  return residual_positive(ev.residual, minimum) && minimum == ev.minimum;
}

bool recheck_two_adic(const TwoAdicEvidence& ev) {
  auto fresh = two_adic_evidence(ev.branch);
  if (fresh.value_at_start != ev.value_at_start || fresh.derivative_at_start != ev.derivative_at_start)
    return false;
  if (min_coefficient_valuation(ev.value_at_start, 2) < ev.value_valuation) return false;
  auto dv = exact_valuation(ev.derivative_at_start);
  if (!dv || *dv != ev.derivative_valuation || ev.value_valuation <= 2 * *dv) return false;
  return two_adic_valid(fresh) && fresh.instance_parameter == ev.instance_parameter &&
         fresh.iterates == ev.iterates;
}

bool recheck_odd(const OddResidueEvidence& ev) {
  const auto& F = ev.curve.f.ring();
  const auto& f = ev.curve.f;
  // f = c j^2 h, h squarefree of positive degree.
  if (f != (ev.j * ev.j * ev.h).scaled(ev.c)) return false;
  if (!is_squarefree(ev.h).squarefree || ev.h.degree() <= 0) return false;
  if (ev.genus != genus_of_square_free_part(ev.h.degree())) return false;
  auto t = weil_threshold_check(ev.q, ev.genus);
  if (t.holds != ev.threshold.holds || t.margin_sq != ev.threshold.margin_sq) return false;
  if (ev.infinity_slope && F.mul(*ev.infinity_slope, *ev.infinity_slope) != f.leading()) return false;
  if (ev.witness) {
    if (!verify_affine_witness(ev.curve, *ev.witness)) return false;
    if (F.is_zero(ev.j(ev.witness->x))) return false;
  }
  return true;
}

}  // namespace

bool recheck(const SolvabilityCertificate& cert) {
  if (!cert.certified()) return false;
  return std::visit(
      [&](const auto& ev) -> bool {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, RealEvidence>) {
          return cert.place == Place::Real && cert.outcome == Outcome::NotSolvable && recheck_real(ev);
        } else if constexpr (std::is_same_v<T, TwoAdicEvidence>) {
          return cert.place == Place::TwoAdic && cert.outcome == Outcome::Solvable && recheck_two_adic(ev);
        } else {
          if (cert.place != Place::OddResidue || !recheck_odd(ev)) return false;
          if (cert.outcome == Outcome::CoveredByThreshold) return ev.threshold.holds;
          return (ev.q_is_1_mod_4 && ev.infinity_slope) || (ev.witness && ev.witness_verified);
        }
      },
      cert.evidence);
}

ThresholdScan threshold_scan(std::uint64_t q_min, std::uint64_t q_max) {
  ThresholdScan scan;
  scan.q_min = q_min;
  scan.q_max = q_max;
  scan.all_hold = true;
  for (std::uint64_t q = q_min; q <= q_max; ++q) {
    if (!is_prime_power(q)) continue;
    for (int g = 0; g <= 2; ++g) {
      scan.checks.push_back(weil_threshold_check(q, g));
      scan.all_hold = scan.all_hold && scan.checks.back().holds;
    }
  }
  for (std::uint64_t q = 2; q < q_min; ++q)
    if (is_prime_power(q) && !weil_threshold(q, 2)) scan.failing_below_g2.push_back(q);
  return scan;
}

LocalDivisorsReport verify_lemma_localdivisors(unsigned jobs) {
  LocalDivisorsReport report;
  report.real = real_nonsolvability_certificate();
  report.two_adic.push_back(local_solvable_2adic(TwoAdicBranch::NonNegativeValuation));
  report.two_adic.push_back(local_solvable_2adic(TwoAdicBranch::NegativeValuation));
  report.thresholds = threshold_scan();

  struct Task {
    FqCtx field;
    OddResidue residue;
  };
  std::vector<Task> tasks;
  for (auto q : small_residue_fields()) {
    auto F = fq_make(q);
    for (auto& r : residues_for(F)) tasks.push_back({F, std::move(r)});
  }
  report.odd_cases = parallel_map(tasks.size(), jobs, [&](std::size_t i) {
    try {
      return local_solvable_odd(tasks[i].field, tasks[i].residue);
    } catch (const Error& e) {
      SolvabilityCertificate failed;
      failed.place = Place::OddResidue;
      failed.outcome = Outcome::Inconclusive;
      failed.label = std::string("q=") + std::to_string(tasks[i].field.q()) + " error: " + e.what();
      failed.evidence = OddResidueEvidence{};
      return failed;
    }
  });

  auto note = [&](const SolvabilityCertificate& c) {
    if (!c.certified() || !recheck(c)) report.failures.push_back(c.label);
  };
  note(report.real);
  for (const auto& c : report.two_adic) note(c);
  for (const auto& c : report.odd_cases) note(c);
  if (!report.thresholds.all_hold) report.failures.push_back("weil-threshold q>=17");
  report.pass = report.failures.empty();
  return report;
}

PairingValue sha_pairing_self(std::uint64_t places) {
  return PairingValue{make_rat(BigInt(static_cast<unsigned long>(places % 2)), 2)};
}

}  // namespace shacert
