#include "shacert/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace shacert::cli {

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const BigRat& v) { return v.get_str(); }

bool RunReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

CheckRecord& RunReport::add(std::string name, bool pass, std::string claim, Json evidence) {
  checks.push_back(CheckRecord{std::move(name), pass, std::move(claim), std::move(evidence)});
  return checks.back();
}

Json RunReport::to_json(bool timing) const {
  Json out;
  out["command"] = command;
  out["parameters"] = parameters;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json rec;
    rec["name"] = c.name;
    rec["status"] = c.pass ? "pass" : "fail";
    rec["claim"] = c.claim;
    rec["evidence"] = c.evidence;
    list.push_back(std::move(rec));
  }
  out["checks"] = std::move(list);
  out["status"] = pass() ? "pass" : "fail";
  if (timing) out["wall_ms"] = std::to_string(wall.count());
  return out;
}

std::string RunReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
  os << command << ": " << (pass() ? "pass" : "fail") << " (" << checks.size() << " checks, " << wall.count()
     << " ms)\n";
  return os.str();
}

namespace {

std::string mono(const std::pair<int, int>& e) {
  BivarRat m{{e, BigRat(1)}};
  return format(m);
}

template <class Field>
std::string poly_text(const Poly<Field>& f, const std::string& var = "x") {
  return format(f, var);
}

Json evidence_json(const RealEvidence& ev) {
  Json out;
  out["polynomial"] = format(ev.polynomial);
  Json terms = Json::array();
  for (const auto& t : ev.terms) {
    Json pieces = Json::array();
    for (const auto& [w, m] : t.pieces) pieces.push_back(Json{{"weight", str(w)}, {"monomial", mono(m)}});
    terms.push_back(Json{{"monomial", mono(t.monomial)},
                         {"coefficient", str(t.coefficient)},
                         {"pieces", pieces},
                         {"weights_nonnegative", t.weights_nonnegative},
                         {"weights_sum_to_one", t.weights_sum_to_one},
                         {"exponents_match", t.exponents_match},
                         {"pieces_even", t.pieces_even}});
  }
  out["amgm_terms"] = terms;
  out["residual"] = format(ev.residual);
  out["minimum"] = str(ev.minimum);
  out["residual_positive"] = ev.residual_positive;
  return out;
}

Json evidence_json(const TwoAdicEvidence& ev) {
  Json out;
  out["branch"] = ev.branch == TwoAdicBranch::NonNegativeValuation ? "v2(t)>=0" : "v2(t)<0";
  out["chart"] = to_string(ev.chart);
  out["unknown"] = ev.unknown;
  out["free_variable"] = ev.free_variable;
  out["start"] = str(ev.start);
  out["value_at_start"] = format(ev.value_at_start, ev.free_variable);
  out["value_valuation"] = std::to_string(ev.value_valuation);
  out["derivative_at_start"] = format(ev.derivative_at_start, ev.free_variable);
  out["derivative_valuation"] = std::to_string(ev.derivative_valuation);
  out["newton_condition"] = ev.newton_condition;
  if (!ev.unit_check.is_zero()) {
    out["unit_check"] = format(ev.unit_check, ev.free_variable);
    out["unit_check_holds"] = ev.unit_check_holds;
  }
  out["instance_parameter"] = str(ev.instance_parameter);
  Json its = Json::array();
  for (const auto& i : ev.iterates) its.push_back(str(i));
  out["iterates"] = its;
  out["precision_bits"] = std::to_string(ev.precision_bits);
  out["instance_verified"] = ev.instance_verified;
  return out;
}

Json evidence_json(const OddResidueEvidence& ev) {
  Json out;
  out["q"] = std::to_string(ev.q);
  out["residue"] = ev.residue;
  if (ev.curve.f.is_zero() && ev.q == 0) return out;
  const auto& F = ev.curve.f.ring();
  out["chart"] = to_string(ev.curve.chart);
  out["f"] = poly_text(ev.curve.f);
  out["square_over_closure"] = ev.square_over_closure;
  out["square_part"] = Json{{"c", F.format(ev.c)}, {"j", poly_text(ev.j)}, {"h", poly_text(ev.h)}};
  out["genus"] = std::to_string(ev.genus);
  out["q_is_1_mod_4"] = ev.q_is_1_mod_4;
  if (ev.infinity_slope) out["infinity_slope"] = F.format(*ev.infinity_slope);
  out["threshold"] = to_json(ev.threshold);
  if (ev.witness) {
    out["witness"] = Json{{"x", F.format(ev.witness->x)}, {"y", F.format(ev.witness->y)}};
    out["witness_verified"] = ev.witness_verified;
    out["j_nonzero_at_witness"] = ev.j_nonzero_at_witness;
  }
  return out;
}

}  // namespace

Json to_json(const SolvabilityCertificate& cert) {
  Json out;
  out["place"] = to_string(cert.place);
  out["label"] = cert.label;
  out["outcome"] = to_string(cert.outcome);
  out["evidence"] = std::visit([](const auto& ev) { return evidence_json(ev); }, cert.evidence);
  return out;
}

Json to_json(const ThresholdCheck& t) {
  return Json{{"q", std::to_string(t.q)}, {"genus", std::to_string(t.genus)}, {"L", str(t.margin)},
              {"L_squared", str(t.margin_sq)}, {"four_g2_q", str(t.bound)}, {"holds", t.holds}};
}

Json to_json(const ThresholdScan& scan) {
  Json failing = Json::array();
  for (auto q : scan.failing_below_g2) failing.push_back(std::to_string(q));
  std::size_t held = static_cast<std::size_t>(
      std::count_if(scan.checks.begin(), scan.checks.end(), [](const ThresholdCheck& c) { return c.holds; }));
  Json out{{"q_min", std::to_string(scan.q_min)},
           {"q_max", std::to_string(scan.q_max)},
           {"checks", std::to_string(scan.checks.size())},
           {"holding", std::to_string(held)},
           {"all_hold", scan.all_hold},
           {"failing_below_q_min_genus2", failing}};
  Json bad = Json::array();
  for (const auto& c : scan.checks)
    if (!c.holds) bad.push_back(to_json(c));
  out["failures"] = bad;
  return out;
}

Json to_json(const WeilPoly& w) {
  return Json{{"text", w.text()}, {"polynomial", format(w.poly())}};
}

Json to_json(const WeilCheck& c) {
  return Json{{"ok", c.ok}, {"reasons", c.reasons}};
}

Json to_json(const ResolventCubic& r) {
  Json roots = Json::array();
  for (const auto& x : r.rational_roots) roots.push_back(str(x));
  Json out{{"cubic", format(r.cubic, "y")}, {"rational_roots", roots}, {"quadratic_subfields", std::to_string(r.subfield_count)}};
  if (r.residual_discriminant) out["residual_quadratic_discriminant"] = str(*r.residual_discriminant);
  return out;
}

Json to_json(const SimplicityCertificate& s) {
  Json out;
  out["weil"] = to_json(s.weil);
  out["irreducible"] = s.irreducible;
  if (s.factorisation.root) out["rational_root"] = str(*s.factorisation.root);
  if (s.factorisation.quadratics)
    out["quadratic_factors"] = Json::array({format(s.factorisation.quadratics->first), format(s.factorisation.quadratics->second)});
  if (s.resolvent) out["resolvent"] = to_json(*s.resolvent);
  out["real_weil"] = format(s.real_weil);
  if (s.beta_minpoly) {
    out["minpoly_a_plus_q_over_a"] = format(*s.beta_minpoly);
    out["matches_real_weil"] = s.beta_matches_real_weil;
  }
  if (s.gamma_minpoly) {
    out["minpoly_q_over_a_squared"] = format(*s.gamma_minpoly);
    out["root_of_unity_order"] = s.gamma_root_order ? Json(std::to_string(*s.gamma_root_order)) : Json(nullptr);
  }
  out["simple"] = s.simple;
  out["splitting_evidence"] = s.splitting_evidence;
  out["reason"] = s.reason;
  return out;
}

Json to_json(const PointCount& n) {
  return Json{{"q", std::to_string(n.q)},
              {"affine", std::to_string(n.affine)},
              {"infinity", std::to_string(n.infinity)},
              {"total", std::to_string(n.total)},
              {"smooth", n.smooth}};
}

Json to_json(const LocalWitness& w) {
  Json out{{"place", w.place()}, {"kind", to_string(w.kind)}};
  if (w.p == 0) {
    out["point"] = "(" + str(w.point[0]) + "," + str(w.point[1]) + "," + str(w.point[2]) + ",w)";
    out["w_cubed"] = str(w.real_cube);
    return out;
  }
  out["point"] = format_quad(w.point);
  out["precision"] = std::to_string(w.precision);
  out["newton_index"] = std::to_string(w.newton_index);
  out["value_valuation"] = std::to_string(w.value_valuation);
  out["derivative_valuation"] = std::to_string(w.derivative_valuation);
  return out;
}

Json to_json(const PrimeCheck& c) {
  Json out{{"p", std::to_string(c.p)}, {"bad", c.bad}, {"verified", c.verified}};
  out["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  return out;
}

Json to_json(const IrreducibilityCertificate& c) {
  using S = IrreducibilityCertificate::Status;
  Json out;
  out["status"] = c.status == S::Witness ? "witness" : c.status == S::Reducible ? "reducible" : "inconclusive";
  if (c.status == S::Witness) out["prime"] = std::to_string(c.prime);
  if (c.root) out["root"] = str(*c.root);
  if (c.factor) out["factor"] = format(*c.factor);
  out["bound"] = std::to_string(c.bound);
  return out;
}

}  // namespace shacert::cli
