#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "shacert/cli/commands.hpp"

using namespace shacert;
using namespace shacert::cli;

namespace {

std::string render(const RunReport& r) { return r.to_json().dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string golden(const std::string& name) { return read_file(std::string(SHACERT_GOLDEN_DIR) + "/" + name); }

struct Run {
  int rc = -1;
  std::string out;
};

/// Runs the binary with stderr discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + SHACERT_BINARY + "\" " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const CheckRecord* find(const RunReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Golden, WeilFromCounts) {
  const auto r = cmd_weil(3, 1, 15);
  EXPECT_EQ(render(r), golden("weil_3_1_15.json"));
  EXPECT_EQ(find(r, "charpoly")->evidence["text"], "3;-3,7,-9,9");
}

TEST(Golden, LocalSolveOverF5) {
  const auto r = cmd_local_solve(5, "t=0", Options{});
  EXPECT_EQ(render(r), golden("local_solve_5_t0.json"));
  const auto& ev = find(r, "local_solvable")->evidence;
  EXPECT_EQ(ev["outcome"], "solvable");
  EXPECT_EQ(ev["evidence"]["q_is_1_mod_4"], true);
  EXPECT_TRUE(ev["evidence"].contains("infinity_slope"));
}

TEST(Golden, LocalSolveAtInfinityOverF3) {
  EXPECT_EQ(render(cmd_local_solve(3, "T=0", Options{})), golden("local_solve_3_inf.json"));
}

TEST(Golden, CountPointsOverF9) {
  EXPECT_EQ(render(cmd_count_points("t=-1", 9, Options{})), golden("count_points_9_tm1.json"));
}

TEST(Reports, IntegersAreStrings) {
  const auto j = cmd_weil(3, 1, 15).to_json();
  EXPECT_TRUE(j["parameters"]["q"].is_string());
  EXPECT_FALSE(j.contains("wall_ms"));
  EXPECT_TRUE(cmd_weil(3, 1, 15).to_json(true)["wall_ms"].is_string());
  EXPECT_EQ(j["status"], "pass");
}

TEST(Reports, VerifyTheoremChecks) {
  const auto r = cmd_verify_theorem(Options{});
  EXPECT_TRUE(r.pass());
  const std::vector<std::string> names{"discriminant_methods_agree", "discriminant_degree", "discriminant_squarefree",
                                       "discriminant_irreducible",   "local_real",          "local_2adic_nonneg",
                                       "local_2adic_neg",            "weil_threshold",      "odd_residue_sweep",
                                       "fiber_counts",               "charpoly_roundtrip",  "weil_conditions",
                                       "absolutely_simple",          "pairing_value"};
  ASSERT_EQ(r.checks.size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    EXPECT_EQ(r.checks[i].name, names[i]);
    EXPECT_FALSE(r.checks[i].claim.empty());
  }
  EXPECT_EQ(find(r, "discriminant_irreducible")->evidence["prime"], "263");
}

TEST(Reports, InjectedCountFailsDownstreamChecks) {
  Options opts;
  opts.inject_n1 = 2;
  const auto r = cmd_verify_theorem(opts);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(find(r, "charpoly_roundtrip")->pass);
  EXPECT_TRUE(find(r, "discriminant_irreducible")->pass);
  EXPECT_TRUE(find(r, "local_real")->pass);
}

TEST(Reports, ResidueParsing) {
  const auto F = fq_make(9);
  EXPECT_FALSE(parse_residue(F, "T=0").t);
  EXPECT_FALSE(parse_residue(F, "inf").t);
  EXPECT_EQ(*parse_residue(F, "t=1,2").t, parse_fq(F, "1,2"));
  EXPECT_EQ(*parse_residue(F, "-1").t, F.from_int(std::int64_t{-1}));
  EXPECT_THROW(parse_residue(F, "t="), Error);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("weil --q 3 --n1 1 --n2 15").rc, 0);
  const auto inconsistent = run("weil --q 3 --n1 1 --n2 14");
  EXPECT_EQ(inconsistent.rc, 1);
  EXPECT_NE(inconsistent.out.find("inconsistent-counts"), std::string::npos);
  EXPECT_EQ(run("weil --q 3 --n1 x --n2 14").rc, 2);
  EXPECT_EQ(run("no-such-command").rc, 2);
  EXPECT_EQ(run("").rc, 2);
  EXPECT_EQ(run("local-solve --q 6 --residue t=0").rc, 2);
  EXPECT_EQ(run("verify-theorem --inject-n1 2").rc, 1);
  EXPECT_EQ(run("--help").rc, 0);
}

TEST(Binary, OutputMatchesInProcessReport) {
  const auto r = run("local-solve --q 5 --residue t=0");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, golden("local_solve_5_t0.json"));
}

TEST(Binary, DeterministicAcrossJobCounts) {
  const auto a = run("--jobs 1 verify-theorem");
  const auto b = run("--jobs 4 verify-theorem");
  EXPECT_EQ(a.rc, 0);
  EXPECT_EQ(b.rc, 0);
  EXPECT_EQ(a.out, b.out);
  const auto c = run("--jobs 1 --prime-bound 50 --height 30 cubic");
  const auto d = run("--jobs 3 --prime-bound 50 --height 30 cubic");
  EXPECT_EQ(c.rc, 0);
  EXPECT_EQ(c.out, d.out);
}

TEST(Binary, CubicWithRationalPointFails) {
  const auto r = run("--prime-bound 7 --height 2 cubic --coefficients 1,1,1,1");
  EXPECT_EQ(r.rc, 1);
  EXPECT_NE(r.out.find("\"status\": \"fail\""), std::string::npos);
}
