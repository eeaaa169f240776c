#include "confembed/report.hpp"

#include "confembed/error.hpp"

namespace confembed {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Weight& w) { return w.to_string(); }

Json to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& [w, m] : d.entries()) {
    terms.push_back({{"weight", to_json(w)}, {"label", w.label()}, {"multiplicity", m},
                     {"dim", weyl_dim(w).str()}});
  }
  return terms;
}

Json to_json(const CheckResult& c) { return {{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}}; }

Json to_json(const LevelSolution& s) {
  Json levels = Json::array();
  for (const auto& l : s.factor_levels) levels.push_back(to_json(l));
  Json witnesses = Json::array();
  for (const auto& w : s.eigenvalue_witnesses) witnesses.push_back(to_json(w));
  return {{"k", to_json(s.k)},
          {"factor_levels", levels},
          {"eigenvalue_witnesses", witnesses},
          {"central_charge_lhs", to_json(s.central_charge_lhs)},
          {"central_charge_rhs", to_json(s.central_charge_rhs)},
          {"central_charge_equal", s.central_charge_lhs == s.central_charge_rhs}};
}

Json to_json(const LevelSolveResult& r) {
  Json solutions = Json::array();
  for (const auto& s : r.solutions) solutions.push_back(to_json(s));
  return {{"solutions", solutions}, {"diagnostics", r.diagnostics}};
}

Json to_json(const CentralChargeCheck& c) {
  return {{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"equal", c.equal}};
}

Json to_json(const VerificationReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"source", {p.grading_i, p.grading_j}},
                     {"extension", p.extension},
                     {"target_grading", p.target_grading},
                     {"expected", to_json(p.expected)},
                     {"expected_present", p.expected_present},
                     {"product", to_json(p.product)}});
  }
  Json findings = Json::array();
  for (const auto& f : r.findings) {
    Json j = {{"source", {f.grading_i, f.grading_j}},
              {"extension", f.extension},
              {"target_grading", f.target_grading},
              {"weight", to_json(f.weight)},
              {"label", f.weight.label()},
              {"multiplicity", f.multiplicity},
              {"delta", to_json(f.delta)},
              {"classification", to_string(f.classification)}};
    j["annotation"] = f.annotation ? Json(*f.annotation) : Json(nullptr);
    findings.push_back(std::move(j));
  }
  Json decomposition = Json::array();
  for (const auto& t : r.decomposition) {
    Json j = {{"weight", to_json(t.weight)}, {"label", t.weight.label()}, {"grading", t.grading}};
    j["superscript"] = t.superscript ? Json(*t.superscript) : Json(nullptr);
    decomposition.push_back(std::move(j));
  }
  return {{"spec", r.spec_name},
          {"k", to_json(r.level)},
          {"k_prime", to_json(r.factor_level)},
          {"status", to_string(r.status)},
          {"pairs", pairs},
          {"findings", findings},
          {"decomposition", decomposition},
          {"symbolic_decomposition", r.symbolic_decomposition},
          {"concrete_decomposition", r.concrete_decomposition}};
}

Json to_json(const ChainReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json statements = Json::array();
    for (const auto& st : s.statements) statements.push_back({{"text", st.text}, {"basis", st.basis}});
    Json j = {{"spec", s.spec_name},
              {"k", to_json(s.level)},
              {"k_prime", to_json(s.factor_level)},
              {"central_charge", to_json(s.central_charge)},
              {"status", to_string(s.status)},
              {"statements", statements}};
    j["scan"] = s.scan ? to_json(*s.scan) : Json(nullptr);
    steps.push_back(std::move(j));
  }
  return {{"k", to_json(r.level)}, {"status", to_string(r.status)}, {"steps", steps}};
}

Json root_system_json(const RootSystem& rs) {
  Json cartan = Json::array();
  for (const auto& row : rs.cartan()) cartan.push_back(row);
  return {{"type", rs.type().to_string()},
          {"rank", rs.rank()},
          {"dual_coxeter", rs.dual_coxeter()},
          {"dimension", rs.dimension()},
          {"positive_roots", rs.positive_root_coords().size()},
          {"theta", to_json(rs.theta())},
          {"rho", to_json(rs.rho())},
          {"cartan", cartan}};
}

Json ReportDocument::to_json() const {
  return {{"schema_version", schema_version}, {"command", command}, {"results", results}, {"diagnostics", diagnostics}};
}

ReportDocument ReportDocument::from_json(const Json& j) {
  try {
    if (!j.is_object()) fail(ErrorKind::Parse, "report document must be an object");
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kSchemaVersion) {
      fail(ErrorKind::Parse, "unsupported schema_version '" + doc.schema_version + "'");
    }
    doc.command = j.at("command").get<std::vector<std::string>>();
    doc.results = j.at("results");
    doc.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed report document: ") + e.what());
  }
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

bool ReportDocument::operator==(const ReportDocument& other) const {
  return schema_version == other.schema_version && command == other.command && results == other.results &&
         diagnostics == other.diagnostics;
}

}  // namespace confembed
