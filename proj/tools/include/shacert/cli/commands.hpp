#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "shacert/cli/report.hpp"

namespace shacert::cli {

struct Options {
  unsigned jobs = 1;
  std::uint64_t witness_bound = 1000;  ///< irreducibility witness primes searched below this
  std::uint64_t prime_bound = 100;
  long height = 100;
  /// Replaces the F_3 point count fed to the Frobenius stage.
  std::optional<long> inject_n1;
};

/// `SHACERT_JOBS` if set and positive, else 1.
unsigned default_jobs();

/// "T=0", "t=<residue>" or a bare residue such as "-1" or "1,2".
OddResidue parse_residue(const FqCtx& F, const std::string& text);

RunReport cmd_discriminant(const Options& opts);
RunReport cmd_verify_theorem(const Options& opts);
RunReport cmd_local_sweep(const Options& opts);
RunReport cmd_local_solve(std::uint64_t q, const std::string& residue, const Options& opts);
RunReport cmd_count_points(const std::string& residue, std::uint64_t q, const Options& opts);
RunReport cmd_weil(const BigInt& q, const BigInt& n1, const BigInt& n2);
RunReport cmd_cubic(const Quad& coef, const Options& opts);

}  // namespace shacert::cli
