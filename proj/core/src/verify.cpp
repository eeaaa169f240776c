#include "confembed/verify.hpp"

#include <algorithm>
#include <map>

#include "confembed/conformal.hpp"
#include "confembed/error.hpp"

namespace confembed {

const char* to_string(FindingClass c) {
  switch (c) {
    case FindingClass::NonIntegral: return "non-integral";
    case FindingClass::IntegralAnnotated: return "integral-annotated";
    case FindingClass::IntegralUnresolved: return "integral-unresolved";
    case FindingClass::GradingMismatchDeltaOne: return "grading-mismatch-delta-one";
    case FindingClass::VacuumGradingMismatch: return "vacuum-grading-mismatch";
  }
  return "unknown";
}

const char* to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::Verified: return "Verified";
    case VerificationStatus::VerifiedWithAnnotations: return "VerifiedWithAnnotations";
    case VerificationStatus::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

namespace {

struct Summand {
  Weight weight;
  int grading;
  bool extension;
};

std::optional<std::size_t> covering_annotation(const EmbeddingSpec& spec, const Weight& nu) {
  for (std::size_t i = 0; i < spec.annotations.size(); ++i) {
    const auto& a = spec.annotations[i];
    const bool specific =
        a.kind == AnnotationKind::SingularVectorAbsent || a.kind == AnnotationKind::DecompositionExtension;
    if (specific && a.weight && *a.weight == nu) return i;
  }
  for (std::size_t i = 0; i < spec.annotations.size(); ++i)
    if (spec.annotations[i].kind == AnnotationKind::LiteratureResult) return i;
  return std::nullopt;
}

std::string module(const std::string& algebra, const std::string& level, const ModuleTerm& t) {
  std::string out = "L";
  if (t.superscript) out += "^{(" + std::to_string(*t.superscript) + ")}";
  return out + "_{" + algebra + "}(" + level + "," + t.weight.label() + ")";
}

std::string join_modules(const std::string& algebra, const std::string& level, const std::vector<ModuleTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " ⊕ ";
    out += module(algebra, level, t);
  }
  return out;
}

std::vector<ModuleTerm> claimed_terms(const EmbeddingSpec& spec, const SubalgebraFactor& f) {
  std::vector<ModuleTerm> terms{{root_system(f.type)->zero(), 0, std::nullopt}};
  for (const auto& a : spec.annotations)
    if (a.kind == AnnotationKind::DecompositionExtension && a.weight) terms.push_back({*a.weight, a.grading, std::nullopt});
  std::vector<const BranchingComponent*> comps;
  for (const auto& c : spec.components) comps.push_back(&c);
  std::stable_sort(comps.begin(), comps.end(), [](auto* a, auto* b) { return a->grading < b->grading; });
  for (const auto* c : comps) terms.push_back({c->factor_weights[0], c->grading, std::nullopt});
  for (auto& t : terms) {
    const auto n = std::count_if(terms.begin(), terms.end(), [&](const ModuleTerm& u) { return u.weight == t.weight; });
    if (n > 1) t.superscript = t.grading;
  }
  return terms;
}

}  // namespace

std::vector<Rational> conformal_levels(const EmbeddingSpec& spec) {
  std::vector<Rational> out;
  for (const auto& s : solve_conformal_levels(spec).solutions) out.push_back(s.k);
  return out;
}

VerificationReport fusion_scan(const EmbeddingSpec& spec, const Rational& k) {
  if (!spec.is_graded_single_simple()) {
    fail(ErrorKind::Unsupported, "fusion scan needs a graded spec with one simple factor; '" + spec.display_name() +
                                     "' is certified by the level solver only");
  }
  const auto levels = conformal_levels(spec);
  if (std::find(levels.begin(), levels.end(), k) == levels.end()) {
    fail(ErrorKind::Usage, "k = " + to_string(k) + " is not a conformal level of '" + spec.display_name() + "'");
  }

  const SubalgebraFactor& factor = spec.factors[0];
  const auto sub = root_system(factor.type);
  const int order = *spec.automorphism_order;
  const Rational k_prime = factor.index * k;

  std::map<int, Weight> top;  // grading -> mu
  for (const auto& c : spec.components) top.emplace(c.grading, c.factor_weights[0]);
  auto expected_at = [&](int l) { return l == 0 ? sub->zero() : top.at(l); };

  std::vector<Summand> left;
  for (const auto& c : spec.components) left.push_back({c.factor_weights[0], c.grading, false});
  for (const auto& a : spec.annotations)
    if (a.kind == AnnotationKind::DecompositionExtension && a.weight) left.push_back({*a.weight, a.grading, true});

  VerificationReport report{spec.display_name(), k, k_prime, {}, {}, VerificationStatus::Inconclusive, {}, {}, {}};
  bool all_expected = true;
  for (const auto& lhs : left) {
    for (const auto& c : spec.components) {
      const int l = ((lhs.grading + c.grading) % order + order) % order;
      if (l != 0 && !top.contains(l)) {
        fail(ErrorKind::Validation, "no component at grading " + std::to_string(l) + " in '" + spec.display_name() + "'");
      }
      PairScan pair{lhs.grading, c.grading, lhs.extension, l, tensor_decompose(lhs.weight, c.factor_weights[0]),
                    expected_at(l), false};
      pair.expected_present = pair.product.multiplicity(pair.expected) > 0;
      all_expected = all_expected && pair.expected_present;

      for (const auto& [w, mult] : pair.product.entries()) {
        std::uint64_t m = mult;
        if (pair.expected_present && w == pair.expected) --m;
        if (m == 0) continue;
        ExtraWeightFinding f{lhs.grading, c.grading, lhs.extension, l, w, m, lowest_conformal_weight(factor, w, k_prime),
                             FindingClass::NonIntegral, std::nullopt};
        const bool zero = std::all_of(w.coords().begin(), w.coords().end(), [](const Rational& x) { return x == 0; });
        bool component_elsewhere = false;
        for (const auto& [g, mu] : top)
          if (g != l && mu == w) component_elsewhere = true;
        if (!is_nonnegative_integer(f.delta)) {
          f.classification = FindingClass::NonIntegral;
        } else if (zero && l != 0) {
          f.classification = FindingClass::VacuumGradingMismatch;
        } else if (f.delta == 1 && component_elsewhere) {
          f.classification = FindingClass::GradingMismatchDeltaOne;
        } else if (auto a = covering_annotation(spec, w)) {
          f.classification = FindingClass::IntegralAnnotated;
          f.annotation = a;
        } else {
          f.classification = FindingClass::IntegralUnresolved;
        }
        report.findings.push_back(std::move(f));
      }
      report.pairs.push_back(std::move(pair));
    }
  }

  const bool unresolved = std::any_of(report.findings.begin(), report.findings.end(), [](const auto& f) {
    return f.classification == FindingClass::IntegralUnresolved;
  });
  const bool all_non_integral = std::all_of(report.findings.begin(), report.findings.end(), [](const auto& f) {
    return f.classification == FindingClass::NonIntegral;
  });
  if (!all_expected || unresolved) {
    report.status = VerificationStatus::Inconclusive;
  } else if (all_non_integral) {
    report.status = VerificationStatus::Verified;
  } else {
    report.status = VerificationStatus::VerifiedWithAnnotations;
  }

  if (report.status != VerificationStatus::Inconclusive) {
    report.decomposition = claimed_terms(spec, factor);
    report.symbolic_decomposition = join_modules("g0", "k'", report.decomposition);
    report.concrete_decomposition = "L_{" + spec.ambient.to_string() + "}(" + to_string(k) + ",0) = " +
                                    join_modules(factor.type.to_string(), to_string(k_prime), report.decomposition);
  }
  return report;
}

ChainReport chain_report(const std::vector<EmbeddingSpec>& specs, const Rational& k) {
  if (specs.empty()) fail(ErrorKind::Usage, "empty chain");
  for (const auto& s : specs) {
    if (s.factors.size() != 1 || !s.factors[0].is_simple()) {
      fail(ErrorKind::Usage, "chain step '" + s.display_name() + "' must have a single simple factor");
    }
  }
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    if (specs[i].ambient != specs[i + 1].factors[0].type) {
      fail(ErrorKind::Usage, "chain does not compose: '" + specs[i].display_name() + "' lives in " +
                                 specs[i].ambient.to_string() + " but '" + specs[i + 1].display_name() +
                                 "' embeds " + specs[i + 1].factors[0].type.to_string());
    }
  }

  ChainReport report{k, {}, VerificationStatus::Verified};
  Rational level = k;
  for (auto it = specs.rbegin(); it != specs.rend(); ++it) {
    const EmbeddingSpec& spec = *it;
    const auto levels = conformal_levels(spec);
    if (std::find(levels.begin(), levels.end(), level) == levels.end()) {
      fail(ErrorKind::Usage, "chain step '" + spec.display_name() + "' is not conformal at level " + to_string(level));
    }
    const SubalgebraFactor& f = spec.factors[0];
    ChainStep step{spec.display_name(), level, f.index * level, sugawara_central_charge(spec.ambient, level),
                   std::nullopt, {}, VerificationStatus::Inconclusive};
    if (spec.is_graded_single_simple()) {
      step.scan = fusion_scan(spec, level);
      step.status = step.scan->status;
      if (!step.scan->concrete_decomposition.empty()) {
        step.statements.push_back({step.scan->concrete_decomposition, "fusion-scan"});
      }
    } else {
      const std::string sub = f.type.to_string();
      for (const auto& a : spec.annotations) {
        if (a.kind != AnnotationKind::DecompositionClaim || !a.ambient_weight) continue;
        std::vector<ModuleTerm> terms;
        for (const auto& w : a.summands) terms.push_back({w, 0, std::nullopt});
        step.statements.push_back({"L_{" + spec.ambient.to_string() + "}(" + to_string(level) + "," +
                                       a.ambient_weight->label() + ") = " +
                                       join_modules(sub, to_string(step.factor_level), terms),
                                   "annotation"});
      }
      step.status = step.statements.empty() ? VerificationStatus::Inconclusive
                                            : VerificationStatus::VerifiedWithAnnotations;
    }
    if (step.status == VerificationStatus::Inconclusive) {
      report.status = VerificationStatus::Inconclusive;
    } else if (step.status == VerificationStatus::VerifiedWithAnnotations &&
               report.status == VerificationStatus::Verified) {
      report.status = VerificationStatus::VerifiedWithAnnotations;
    }
    report.steps.push_back(std::move(step));
    level = f.index * level;
  }
  return report;
}

}  // namespace confembed
