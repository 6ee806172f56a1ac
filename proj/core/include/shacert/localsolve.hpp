#pragma once

// Local solvability of the genus-2 family at every place: a real
// non-solvability certificate, the two 2-adic Hensel branches, and the odd
// residue procedure (square detection, Weil threshold, exhaustive search).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shacert/hyperelliptic.hpp"

namespace shacert {

enum class Place { Real, TwoAdic, OddResidue };
enum class Outcome { Solvable, NotSolvable, CoveredByThreshold, Inconclusive };

const char* to_string(Place place) noexcept;
const char* to_string(Outcome outcome) noexcept;

/// Polynomial in (x, t) over Q keyed by exponent pair (x, t).
using BivarRat = std::map<std::pair<int, int>, BigRat>;

std::string format(const BivarRat& p);
BigRat evaluate(const BivarRat& p, const BigRat& x, const BigRat& t);

/// Weighted AM-GM bound  sum w_i M_i >= |coefficient * monomial|  where the
/// M_i are even monomials.
struct AmGmTerm {
  std::pair<int, int> monomial;
  BigRat coefficient;
  std::vector<std::pair<BigRat, std::pair<int, int>>> pieces;  // (weight, even monomial)
  bool weights_nonnegative = false;
  bool weights_sum_to_one = false;
  bool exponents_match = false;
  bool pieces_even = false;
};

struct RealEvidence {
  BivarRat polynomial;            ///< x^6 + x^5 + t^5 x + 8 t^6 + 7
  std::vector<AmGmTerm> terms;
  BivarRat residual;              ///< lower bound left after the AM-GM steps
  BigRat minimum;                 ///< its minimum over R^2
  bool residual_positive = false;
};

enum class TwoAdicBranch { NonNegativeValuation, NegativeValuation };

struct TwoAdicEvidence {
  TwoAdicBranch branch = TwoAdicBranch::NonNegativeValuation;
  Chart chart = Chart::Model1;
  /// F(z) = 0 is solved by Newton's method from z = start; the value F(start)
  /// is a polynomial in the free variable (t, or S with T = 2S) whose
  /// coefficients all have 2-adic valuation >= value_valuation.
  std::string unknown;            ///< "y" or "X"
  std::string free_variable;      ///< "t" or "S"
  BigInt start;
  IntPoly value_at_start;
  int value_valuation = 0;
  IntPoly derivative_at_start;
  int derivative_valuation = 0;   ///< exact: the polynomial is a unit times 2^v
  bool newton_condition = false;  ///< value_valuation > 2 * derivative_valuation
  /// Auxiliary exact statement: for v2(t) >= 0, 8t^6+7 has valuation 0.
  IntPoly unit_check;
  bool unit_check_holds = true;
  /// Worked instance at a concrete parameter.
  BigInt instance_parameter;
  std::vector<BigInt> iterates;
  int precision_bits = 8;
  bool instance_verified = false;
};

struct ThresholdCheck {
  std::uint64_t q = 0;
  int genus = 0;
  BigInt margin;       ///< L = q - 3 + 2g
  BigInt margin_sq;    ///< L^2
  BigInt bound;        ///< 4 g^2 q
  bool holds = false;  ///< L > 0 and L^2 > 4 g^2 q
};

/// Residue datum at an odd place: t reduces to `t` in F_q, or T = 1/t
/// reduces to 0 (nullopt).
struct OddResidue {
  std::optional<FqElem> t;
};

struct OddResidueEvidence {
  std::uint64_t q = 0;
  std::string residue;
  CurveModel<FqCtx> curve;
  bool square_over_closure = false;
  Poly<FqCtx> j;
  Poly<FqCtx> h;
  FqElem c;
  int genus = 0;
  bool q_is_1_mod_4 = false;
  std::optional<FqElem> infinity_slope;  ///< s with s^2 = lc(f): points (1 : +-s : 0)
  ThresholdCheck threshold;
  std::optional<AffinePoint> witness;
  bool witness_verified = false;
  bool j_nonzero_at_witness = false;
};

struct SolvabilityCertificate {
  Place place = Place::Real;
  Outcome outcome = Outcome::Inconclusive;
  std::string label;
  std::variant<RealEvidence, TwoAdicEvidence, OddResidueEvidence> evidence;

  /// Solvable / CoveredByThreshold / NotSolvable with complete evidence.
  bool certified() const { return outcome != Outcome::Inconclusive; }
};

/// AM-GM bookkeeping in exact arithmetic; the residual is (43/6)t^6 + 41/6.
SolvabilityCertificate real_nonsolvability_certificate();

/// Symbolic Hensel check for one valuation branch at p = 2 plus a worked
/// Newton iteration to precision 2^-8 (instance t = 1, resp. T = 2).
SolvabilityCertificate local_solvable_2adic(TwoAdicBranch branch);

/// L = q - 3 + 2g;  true iff L > 0 and L^2 > 4 g^2 q.
bool weil_threshold(std::uint64_t q, int genus);
ThresholdCheck weil_threshold_check(std::uint64_t q, int genus);

/// ceil(deg h / 2) - 1, clamped at 0.
int genus_of_square_free_part(int deg_h);

/// Odd residue procedure. Throws Error(InvariantViolation) if the reduction is
/// a square over the algebraic closure.
SolvabilityCertificate local_solvable_odd(const FqCtx& F, const OddResidue& residue);

/// Re-derives every claim in a certificate from its recorded data.
bool recheck(const SolvabilityCertificate& cert);

struct ThresholdScan {
  std::uint64_t q_min = 17;
  std::uint64_t q_max = 1000;
  std::vector<ThresholdCheck> checks;
  bool all_hold = false;
  /// Prime powers q < q_min failing the genus-2 inequality.
  std::vector<std::uint64_t> failing_below_g2;
};

ThresholdScan threshold_scan(std::uint64_t q_min = 17, std::uint64_t q_max = 1000);

struct LocalDivisorsReport {
  SolvabilityCertificate real;
  std::vector<SolvabilityCertificate> two_adic;
  ThresholdScan thresholds;
  std::vector<SolvabilityCertificate> odd_cases;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Residue fields swept exhaustively.
inline const std::vector<std::uint64_t>& small_residue_fields() {
  static const std::vector<std::uint64_t> qs{3, 5, 7, 9, 11, 13};
  return qs;
}

/// Every residue datum for one q: all t in F_q (enumeration order), then T = 0.
std::vector<OddResidue> residues_for(const FqCtx& F);

LocalDivisorsReport verify_lemma_localdivisors(unsigned jobs = 1);

/// Value of the self-pairing N/2 in Q/Z, kept in [0, 1).
struct PairingValue {
  BigRat value;
};

PairingValue sha_pairing_self(std::uint64_t places);
inline bool pairing_nonzero(std::uint64_t places) { return places % 2 == 1; }

/// Minimum 2-adic-style valuation over the coefficients (zero poly: cap).
int min_coefficient_valuation(const IntPoly& f, std::uint64_t p, int cap = 1 << 20);

}  // namespace shacert
