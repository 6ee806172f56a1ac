#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "shacert/cli/commands.hpp"

using namespace shacert;
using namespace shacert::cli;

namespace {

Quad parse_coefficients(const std::string& text) {
  Quad q;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    auto comma = text.find(',', start);
    if ((i < 3) != (comma != std::string::npos)) throw Error(ErrorKind::Parse, "expected a,b,c,d");
    q[i] = parse_int(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    start = comma + 1;
  }
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of a Shafarevich-Tate construction and the Cassels-Guy cubic"};
  app.require_subcommand(1);

  Options opts;
  opts.jobs = default_jobs();
  std::string report_path;
  bool timing = false;
  app.add_option("--report", report_path, "Also write the JSON report to this path");
  app.add_option("--jobs", opts.jobs, "Worker threads (default: SHACERT_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "Include wall time in the JSON report");
  app.add_option("--witness-bound", opts.witness_bound, "Irreducibility witness primes below this bound")
      ->check(CLI::Range(2, 1000000));
  app.add_option("--prime-bound", opts.prime_bound, "Cubic: check every prime up to this bound")
      ->check(CLI::Range(5, 100000));
  app.add_option("--height", opts.height, "Cubic: rational search height")->check(CLI::Range(1, 2000));
  app.fallthrough();

  auto* theorem = app.add_subcommand("verify-theorem", "Run every check behind the main theorem");
  long inject = 0;
  auto* inject_opt = theorem->add_option("--inject-n1", inject, "Override the F_3 point count")->group("");

  auto* disc = app.add_subcommand("discriminant", "Discriminant of the family and its irreducibility");

  app.add_subcommand("local-sweep", "Local solvability at every place");

  std::uint64_t q = 0;
  std::string residue;
  auto* local = app.add_subcommand("local-solve", "Local solvability for one residue datum");
  local->add_option("--q", q, "Residue field size")->required();
  local->add_option("--residue", residue, "t=<value> or T=0")->required();

  auto* count = app.add_subcommand("count-points", "Points on one fiber over F_q");
  count->add_option("--q", q, "Field size")->required();
  count->add_option("--t", residue, "t=<value> or T=0")->required();

  std::string wq, wn1, wn2;
  auto* weil = app.add_subcommand("weil", "Frobenius polynomial from point counts");
  weil->add_option("--q", wq, "Field size")->required();
  weil->add_option("--n1", wn1, "Points over F_q")->required();
  weil->add_option("--n2", wn2, "Points over F_{q^2}")->required();

  std::string coefficients = "5,9,10,12";
  auto* cubic = app.add_subcommand("cubic", "Local points and rational search on a diagonal cubic");
  cubic->add_option("--coefficients", coefficients, "a,b,c,d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (*inject_opt) opts.inject_n1 = inject;

  RunReport report;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*theorem) report = cmd_verify_theorem(opts);
    else if (*disc) report = cmd_discriminant(opts);
    else if (app.got_subcommand("local-sweep")) report = cmd_local_sweep(opts);
    else if (*local) report = cmd_local_solve(q, residue, opts);
    else if (*count) report = cmd_count_points(residue, q, opts);
    else if (*weil) report = cmd_weil(parse_int(wq), parse_int(wn1), parse_int(wn2));
    else if (*cubic) report = cmd_cubic(parse_coefficients(coefficients), opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  report.wall = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

  const std::string text = report.to_json(timing).dump(2) + "\n";
  std::cout << text;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << '\n';
      return 2;
    }
    out << text;
  }
  std::cerr << report.summary();
  return report.pass() ? 0 : 1;
}
