#pragma once

// Diagonal cubic surfaces a x^3 + b y^3 + c z^3 + d w^3 = 0: local points at
// every place and a bounded search for rational points.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shacert/bigint.hpp"

namespace shacert {

using Quad = std::array<BigInt, 4>;

struct DiagonalCubic {
  Quad coef;

  /// Throws Error(Domain) if a coefficient is zero.
  explicit DiagonalCubic(Quad coefficients);
  DiagonalCubic() : DiagonalCubic(Quad{5, 9, 10, 12}) {}
  /// 5x^3 + 9y^3 + 10z^3 + 12w^3 (Cassels-Guy).
  static DiagonalCubic cassels_guy();

  BigInt eval(const Quad& pt) const;
  /// d F / d x_i = 3 coef_i x_i^2.
  BigInt partial(const Quad& pt, int i) const;
  /// Primes dividing 3abcd, ascending.
  std::vector<std::uint64_t> bad_primes() const;
  bool is_bad(std::uint64_t p) const;
  std::string text() const;
};

enum class WitnessKind { RealOddDegree, SmoothModP, HenselBadPrime };

const char* to_string(WitnessKind kind) noexcept;

struct LocalWitness {
  std::uint64_t p = 0;            ///< 0 for the real place
  WitnessKind kind = WitnessKind::RealOddDegree;
  /// Integer coordinates; at a finite place they represent a point mod p^precision
  /// (symmetric residues, first unit coordinate 1).
  Quad point;
  /// Real place: the point is (point[0], point[1], point[2], w) with w^3 = real_cube.
  BigRat real_cube;
  int precision = 1;
  int newton_index = -1;          ///< coordinate whose partial satisfies the Newton condition
  int value_valuation = 0;        ///< v_p(F(point))
  int derivative_valuation = 0;   ///< v_p(dF/dx_i (point))

  std::string place() const;
};

/// Re-verifies a witness by substitution.
bool verify_witness(const DiagonalCubic& s, const LocalWitness& w);

/// Nontrivial zero mod p with nonzero gradient: w outer, z middle, y inner,
/// x solved from a cube table. Throws Error(WrongBranch) if p divides 3abcd.
LocalWitness smooth_fp_point(const DiagonalCubic& s, std::uint64_t p);

LocalWitness real_witness(const DiagonalCubic& s);

/// Real place for p = 0, otherwise a smooth point (good p) or a Hensel search
/// to precision max_precision (bad p). nullopt when the search is exhausted.
std::optional<LocalWitness> local_solvable(const DiagonalCubic& s, std::uint64_t p, int max_precision = 6);

/// All primitive solutions with max |coordinate| <= H, first nonzero
/// coordinate positive, ascending.
std::vector<Quad> rational_search(const DiagonalCubic& s, long height, unsigned jobs = 1);

struct PrimeCheck {
  std::uint64_t p = 0;
  bool bad = false;
  std::optional<LocalWitness> witness;
  bool verified = false;
};

struct CubicReport {
  DiagonalCubic surface;
  std::uint64_t prime_bound = 0;
  long height = 0;
  LocalWitness real;
  bool real_verified = false;
  std::vector<PrimeCheck> primes;
  std::string good_prime_note;
  std::vector<Quad> rational_points;
  bool locally_solvable = false;
  bool search_empty = false;
  bool pass = false;
};

/// Every prime p <= B plus any bad prime above B is checked explicitly.
/// Passes iff every local check certifies and the search finds nothing.
CubicReport verify_cassels_guy(std::uint64_t prime_bound, long height,
                               const DiagonalCubic& surface = DiagonalCubic::cassels_guy(),
                               unsigned jobs = 1, int max_precision = 6);

std::string format_quad(const Quad& q);

}  // namespace shacert
