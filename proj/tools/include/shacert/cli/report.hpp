#pragma once

// Run reports: every check carries its evidence and a plain-language claim.
// Integers and fractions are serialised as strings.

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"
#include "shacert/cubicsurface.hpp"
#include "shacert/localsolve.hpp"
#include "shacert/weilpoly.hpp"

namespace shacert::cli {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string claim;
  Json evidence = Json::object();
};

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  std::vector<CheckRecord> checks;
  std::chrono::milliseconds wall{0};

  bool pass() const;
  CheckRecord& add(std::string name, bool pass, std::string claim, Json evidence = Json::object());
  /// Record-level content is deterministic; wall time appears only when asked.
  Json to_json(bool timing = false) const;
  /// One line per check plus a verdict, for standard error.
  std::string summary() const;
};

std::string str(const BigInt& v);
std::string str(const BigRat& v);

Json to_json(const SolvabilityCertificate& cert);
Json to_json(const ThresholdCheck& t);
Json to_json(const ThresholdScan& scan);
Json to_json(const WeilPoly& w);
Json to_json(const WeilCheck& c);
Json to_json(const ResolventCubic& r);
Json to_json(const SimplicityCertificate& s);
Json to_json(const PointCount& n);
Json to_json(const LocalWitness& w);
Json to_json(const PrimeCheck& c);
Json to_json(const IrreducibilityCertificate& c);

}  // namespace shacert::cli
