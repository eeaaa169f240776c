#pragma once

// Complete-reducibility check for graded embeddings with a simple g0: scans
// tensor products of the top components, classifies every extra summand by
// the integrality of its lowest conformal weight and applies the spec's
// annotations.

#include <optional>
#include <string>
#include <vector>

#include "confembed/embedding.hpp"
#include "confembed/rep.hpp"

namespace confembed {

enum class FindingClass {
  NonIntegral,
  IntegralAnnotated,
  IntegralUnresolved,
  GradingMismatchDeltaOne,  // delta = 1, weight is a component at another grading
  VacuumGradingMismatch,    // the zero weight (delta = 0) outside grading 0
};

const char* to_string(FindingClass c);

enum class VerificationStatus { Verified, VerifiedWithAnnotations, Inconclusive };

const char* to_string(VerificationStatus s);

struct PairScan {
  int grading_i = 0;
  int grading_j = 0;
  bool extension = false;  // left factor is a decomposition-extension summand
  int target_grading = 0;  // (i + j) mod (s + 1)
  Decomposition product;
  Weight expected;
  bool expected_present = false;
};

struct ExtraWeightFinding {
  int grading_i = 0;
  int grading_j = 0;
  bool extension = false;
  int target_grading = 0;
  Weight weight;
  std::uint64_t multiplicity = 1;
  Rational delta;
  FindingClass classification = FindingClass::NonIntegral;
  /// Index into spec.annotations for IntegralAnnotated findings.
  std::optional<std::size_t> annotation;
};

struct ModuleTerm {
  Weight weight;
  int grading = 0;
  /// Set when the same weight occurs at several gradings.
  std::optional<int> superscript;
};

struct VerificationReport {
  std::string spec_name;
  Rational level;
  Rational factor_level;
  std::vector<PairScan> pairs;
  std::vector<ExtraWeightFinding> findings;
  VerificationStatus status = VerificationStatus::Inconclusive;
  /// Empty when the status is Inconclusive.
  std::vector<ModuleTerm> decomposition;
  /// "L_{g0}(k',0) ⊕ L_{g0}(k',ω1)"
  std::string symbolic_decomposition;
  /// "L_{G2}(-5/3,0) = L_{A2}(-5/3,0) ⊕ ..."
  std::string concrete_decomposition;
};

/// Throws Error(Unsupported) unless the spec is graded with a single simple
/// factor, and Error(Usage) unless k is one of its conformal levels.
VerificationReport fusion_scan(const EmbeddingSpec& spec, const Rational& k);

/// Only conformal levels of the spec are accepted (Error(Usage) otherwise);
/// with several levels the caller must pick one.
std::vector<Rational> conformal_levels(const EmbeddingSpec& spec);

struct ChainStatement {
  std::string text;
  std::string basis;  // "fusion-scan" or "annotation"
};

struct ChainStep {
  std::string spec_name;
  Rational level;         // level of the step's ambient algebra
  Rational factor_level;  // level of its simple factor
  Rational central_charge;
  std::optional<VerificationReport> scan;  // graded steps only
  std::vector<ChainStatement> statements;
  VerificationStatus status = VerificationStatus::Inconclusive;
};

struct ChainReport {
  Rational level;  // level of the outermost algebra
  std::vector<ChainStep> steps;  // outermost first
  VerificationStatus status = VerificationStatus::Inconclusive;
};

/// specs are listed innermost first: the ambient algebra of specs[i] must be
/// the single simple factor of specs[i + 1]. k is the level of the outermost
/// ambient algebra. Throws Error(Usage) for chains that do not compose or
/// steps that are not conformal at the induced level.
ChainReport chain_report(const std::vector<EmbeddingSpec>& specs, const Rational& k);

}  // namespace confembed
