#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "confembed/catalog.hpp"
#include "confembed/conformal.hpp"
#include "confembed/report.hpp"
#include "confembed/verify.hpp"
#include "test_support.hpp"

using namespace confembed;
using namespace testing_support;

namespace {

using FindingKey = std::tuple<std::string, std::string, std::string, int>;

// Findings as a sorted multiset of (weight, delta, class, target grading).
std::multiset<FindingKey> finding_keys(const VerificationReport& r) {
  std::multiset<FindingKey> out;
  for (const auto& f : r.findings)
    out.insert({f.weight.label(), to_string(f.delta), to_string(f.classification), f.target_grading});
  return out;
}

std::set<std::string> weights_of(const VerificationReport& r, FindingClass c) {
  std::set<std::string> out;
  for (const auto& f : r.findings)
    if (f.classification == c) out.insert(f.weight.label());
  return out;
}

std::map<std::string, std::string> delta_by_label(const VerificationReport& r) {
  std::map<std::string, std::string> out;
  for (const auto& f : r.findings) out[f.weight.label()] = to_string(f.delta);
  return out;
}

std::vector<EmbeddingSpec> graded_catalog() {
  std::vector<EmbeddingSpec> out;
  for (auto& s : catalog())
    if (s.is_graded_single_simple()) out.push_back(std::move(s));
  return out;
}

Rational only_level(const EmbeddingSpec& spec) {
  const auto levels = conformal_levels(spec);
  REQUIRE(levels.size() == 1);
  return levels[0];
}

}  // namespace

TEST_CASE("a2-in-g2 is verified by integrality alone") {
  const auto r = fusion_scan(make_spec("a2-in-g2"), Rational(-5, 3));
  CHECK(r.status == VerificationStatus::Verified);
  CHECK(r.factor_level == Rational(-5, 3));
  CHECK(r.pairs.size() == 4);
  for (const auto& p : r.pairs) CHECK(p.expected_present);
  CHECK(weights_of(r, FindingClass::NonIntegral) == std::set<std::string>{"2ω1", "2ω2", "ω1+ω2"});
  CHECK(delta_by_label(r) == std::map<std::string, std::string>{{"2ω1", "5/2"}, {"2ω2", "5/2"}, {"ω1+ω2", "9/4"}});
  CHECK(r.symbolic_decomposition == "L_{g0}(k',0) ⊕ L_{g0}(k',ω1) ⊕ L_{g0}(k',ω2)");
  CHECK(r.concrete_decomposition == "L_{G2}(-5/3,0) = L_{A2}(-5/3,0) ⊕ L_{A2}(-5/3,ω1) ⊕ L_{A2}(-5/3,ω2)");
}

TEST_CASE("bl1-in-dl at rank 6") {
  const auto r = fusion_scan(make_spec("bl1-in-dl", 6), -4);
  CHECK(r.status == VerificationStatus::Verified);
  CHECK(delta_by_label(r) == std::map<std::string, std::string>{{"2ω1", "11/5"}, {"ω2", "9/5"}});
}

TEST_CASE("f4-in-e6 needs its annotation") {
  const auto spec = make_spec("f4-in-e6");
  const auto r = fusion_scan(spec, -3);
  CHECK(r.status == VerificationStatus::VerifiedWithAnnotations);
  CHECK(weights_of(r, FindingClass::NonIntegral) == std::set<std::string>{"2ω4", "ω1"});
  CHECK(weights_of(r, FindingClass::IntegralAnnotated) == std::set<std::string>{"ω3"});
  CHECK(weights_of(r, FindingClass::GradingMismatchDeltaOne) == std::set<std::string>{"ω4"});
  CHECK(weights_of(r, FindingClass::IntegralUnresolved).empty());
  CHECK(delta_by_label(r) ==
        std::map<std::string, std::string>{{"2ω4", "13/6"}, {"ω1", "3/2"}, {"ω3", "2"}, {"ω4", "1"}});
  for (const auto& f : r.findings) {
    if (f.classification != FindingClass::IntegralAnnotated) continue;
    REQUIRE(f.annotation);
    CHECK(spec.annotations[*f.annotation].kind == AnnotationKind::SingularVectorAbsent);
  }
  CHECK(r.concrete_decomposition == "L_{E6}(-3,0) = L_{F4}(-3,0) ⊕ L_{F4}(-3,ω4)");
}

TEST_CASE("g2-in-d4 gains an extra summand") {
  const auto r = fusion_scan(make_spec("g2-in-d4"), -2);
  CHECK(r.status == VerificationStatus::VerifiedWithAnnotations);
  CHECK(weights_of(r, FindingClass::NonIntegral) == std::set<std::string>{"2ω1", "ω1+ω2"});
  CHECK(weights_of(r, FindingClass::IntegralAnnotated) == std::set<std::string>{"ω2"});
  CHECK(weights_of(r, FindingClass::GradingMismatchDeltaOne) == std::set<std::string>{"ω1"});
  CHECK(weights_of(r, FindingClass::VacuumGradingMismatch) == std::set<std::string>{"0"});
  CHECK(delta_by_label(r).at("2ω1") == "7/3");
  CHECK(delta_by_label(r).at("ω1+ω2") == "7/2");
  CHECK(delta_by_label(r).at("ω2") == "2");
  CHECK(r.pairs.size() == 6);
  CHECK(std::count_if(r.pairs.begin(), r.pairs.end(), [](const PairScan& p) { return p.extension; }) == 2);
  CHECK(r.concrete_decomposition ==
        "L_{D4}(-2,0) = L_{G2}(-2,0) ⊕ L_{G2}(-2,ω2) ⊕ L^{(1)}_{G2}(-2,ω1) ⊕ L^{(2)}_{G2}(-2,ω1)");
}

TEST_CASE("classification follows the exact integrality of delta") {
  for (const auto& spec : graded_catalog()) {
    CAPTURE(spec.display_name());
    const auto r = fusion_scan(spec, only_level(spec));
    for (const auto& f : r.findings) {
      const bool integral = is_nonnegative_integer(f.delta);
      CHECK((f.classification == FindingClass::NonIntegral) == !integral);
      if (f.classification == FindingClass::GradingMismatchDeltaOne) CHECK(f.delta == 1);
      if (f.classification == FindingClass::IntegralAnnotated) CHECK(f.annotation.has_value());
    }
    CHECK(r.status != VerificationStatus::Inconclusive);
  }
}

TEST_CASE("removing an annotation never upgrades the status") {
  for (const auto& spec : graded_catalog()) {
    const auto before = fusion_scan(spec, only_level(spec)).status;
    for (std::size_t i = 0; i < spec.annotations.size(); ++i) {
      CAPTURE(spec.display_name());
      CAPTURE(i);
      auto reduced = spec;
      reduced.annotations.erase(reduced.annotations.begin() + static_cast<std::ptrdiff_t>(i));
      const auto after = fusion_scan(reduced, only_level(reduced)).status;
      // An unused annotation can go without changing anything; otherwise Verified is out of reach.
      if (before == VerificationStatus::Verified)
        CHECK(after == before);
      else
        CHECK(after != VerificationStatus::Verified);
    }
  }
  auto f4 = make_spec("f4-in-e6");
  f4.annotations.clear();
  CHECK(fusion_scan(f4, -3).status == VerificationStatus::Inconclusive);
  CHECK(weights_of(fusion_scan(f4, -3), FindingClass::IntegralUnresolved) == std::set<std::string>{"ω3"});
  CHECK(fusion_scan(f4, -3).concrete_decomposition.empty());
}

TEST_CASE("scan result does not depend on component order") {
  std::mt19937_64 rng(5150);
  for (const auto& spec : graded_catalog()) {
    if (spec.components.size() < 2) continue;
    CAPTURE(spec.display_name());
    const auto k = only_level(spec);
    const auto base = fusion_scan(spec, k);
    auto shuffled = spec;
    std::shuffle(shuffled.components.begin(), shuffled.components.end(), rng);
    std::reverse(shuffled.components.begin(), shuffled.components.end());
    const auto other = fusion_scan(shuffled, k);
    CHECK(other.status == base.status);
    CHECK(finding_keys(other) == finding_keys(base));
    CHECK(other.concrete_decomposition == base.concrete_decomposition);
  }
}

TEST_CASE("claimed decompositions account for the adjoint") {
  for (const auto& spec : graded_catalog()) {
    CAPTURE(spec.display_name());
    const auto r = fusion_scan(spec, only_level(spec));
    REQUIRE(r.status != VerificationStatus::Inconclusive);
    BigInt total = spec.factors[0].dimension();
    for (const auto& t : r.decomposition)
      if (t.grading != 0) total += weyl_dim(t.weight);
    CHECK(total == root_system(spec.ambient)->dimension());
  }
}

TEST_CASE("fusion scan errors") {
  CHECK(kind_of([] { fusion_scan(make_spec("gl-in-sp", 3), 1); }) == ErrorKind::Unsupported);
  CHECK(kind_of([] { fusion_scan(make_spec("g2-in-b3"), -2); }) == ErrorKind::Unsupported);
  CHECK(kind_of([] { fusion_scan(make_spec("cartan-in-a", 2), 1); }) == ErrorKind::Unsupported);
  CHECK(kind_of([] { fusion_scan(make_spec("f4-in-e6"), -2); }) == ErrorKind::Usage);
}

TEST_CASE("chain through B3") {
  const auto r = chain_report({make_spec("g2-in-b3"), make_spec("b3-in-d4")}, -2);
  CHECK(r.status == VerificationStatus::VerifiedWithAnnotations);
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].spec_name == "b3-in-d4");
  CHECK(r.steps[0].central_charge == -14);
  CHECK(r.steps[0].status == VerificationStatus::Verified);
  REQUIRE(r.steps[0].statements.size() == 1);
  CHECK(r.steps[0].statements[0].text == "L_{D4}(-2,0) = L_{B3}(-2,0) ⊕ L_{B3}(-2,ω1)");
  CHECK(r.steps[0].statements[0].basis == "fusion-scan");
  CHECK(r.steps[1].spec_name == "g2-in-b3");
  CHECK(r.steps[1].level == -2);
  CHECK(r.steps[1].factor_level == -2);
  CHECK(r.steps[1].central_charge == -14);
  REQUIRE(r.steps[1].statements.size() == 2);
  CHECK(r.steps[1].statements[0].text == "L_{B3}(-2,0) = L_{G2}(-2,0) ⊕ L_{G2}(-2,ω1)");
  CHECK(r.steps[1].statements[1].text == "L_{B3}(-2,ω1) = L_{G2}(-2,ω1) ⊕ L_{G2}(-2,ω2)");
  CHECK(r.steps[1].statements[0].basis == "annotation");
}

TEST_CASE("single-step chain equals the fusion scan") {
  for (const char* name : {"b3-in-d4", "f4-in-e6", "g2-in-d4", "a2-in-g2"}) {
    const auto spec = make_spec(name);
    const auto k = only_level(spec);
    const auto chain = chain_report({spec}, k);
    REQUIRE(chain.steps.size() == 1);
    REQUIRE(chain.steps[0].scan);
    CHECK(to_json(*chain.steps[0].scan) == to_json(fusion_scan(spec, k)));
    CHECK(chain.status == chain.steps[0].scan->status);
  }
}

TEST_CASE("chain errors") {
  CHECK(kind_of([] { chain_report({make_spec("b3-in-d4"), make_spec("g2-in-b3")}, -2); }) == ErrorKind::Usage);
  CHECK(kind_of([] { chain_report({make_spec("g2-in-b3"), make_spec("b3-in-d4")}, -3); }) == ErrorKind::Usage);
  CHECK(kind_of([] { chain_report({}, -2); }) == ErrorKind::Usage);
  CHECK(kind_of([] { chain_report({make_spec("gl-in-sp", 3)}, 1); }) == ErrorKind::Usage);
}
