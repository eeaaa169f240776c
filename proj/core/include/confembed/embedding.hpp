#pragma once

// Declarative model of a reductive subalgebra g0 < g together with the
// branching of the adjoint representation of g.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "confembed/lie.hpp"
#include "confembed/rational.hpp"

namespace confembed {

struct SubalgebraFactor {
  enum class Kind { Simple, Abelian };

  Kind kind = Kind::Simple;
  LieType type{};           // simple factors only
  int abelian_dim = 0;      // abelian factors only
  Rational index = 1;       // declared Dynkin index; 1 for abelian factors

  static SubalgebraFactor simple(LieType t, Rational index);
  static SubalgebraFactor abelian(int dim);

  bool is_simple() const { return kind == Kind::Simple; }
  std::uint64_t dimension() const;
  /// 0 for abelian factors.
  int dual_coxeter() const;
  std::string label() const;
};

/// One irreducible g0-summand g_i = V(mu_i) of g / g0.
struct BranchingComponent {
  /// Automorphism eigenvalue exponent (xi^grading); a plain label for ungraded specs.
  int grading = 1;
  /// One dominant weight per simple factor, in factor order.
  std::vector<Weight> factor_weights;
  /// (c, c) of the central charge vector in the ambient normalized form.
  Rational center_norm = 0;
  std::uint64_t dim = 0;
};

enum class AnnotationKind {
  SingularVectorAbsent,    // integral-weight case resolved outside the integrality test
  DecompositionExtension,  // singular vector present; it generates an extra summand
  LiteratureResult,        // whole embedding established elsewhere (positive levels etc.)
  DecompositionClaim,      // decomposition statement for ungraded steps of a chain
};

const char* to_string(AnnotationKind kind);
AnnotationKind parse_annotation_kind(const std::string& text);

struct Annotation {
  AnnotationKind kind = AnnotationKind::SingularVectorAbsent;
  /// Subalgebra weight this annotation resolves (first simple factor).
  std::optional<Weight> weight;
  /// Grading of the summand added by a DecompositionExtension.
  int grading = 0;
  /// DecompositionClaim: L_g(k, ambient_weight) = sum of L_g0(k', summands).
  std::optional<Weight> ambient_weight;
  std::vector<Weight> summands;
  std::string resolution;
  std::string source;
};

struct EmbeddingSpec {
  std::string name;
  std::optional<int> rank_parameter;
  LieType ambient;
  /// s + 1 for a grading automorphism; empty for ungraded embeddings.
  std::optional<int> automorphism_order;
  std::vector<SubalgebraFactor> factors;
  std::vector<BranchingComponent> components;
  std::vector<Annotation> annotations;
  /// Components are declared to share one Casimir eigenvalue.
  bool equal_casimir = true;

  /// "bl1-in-dl[l=6]" for parametric instances, otherwise the plain name.
  std::string display_name() const;
  std::vector<std::size_t> simple_factor_indices() const;
  std::uint64_t abelian_dimension() const;
  /// A grading automorphism and exactly one factor, which is simple.
  bool is_graded_single_simple() const;
};

/// One line of the ambient adjoint restricted to g0.
struct AdjointTerm {
  std::string label;
  std::uint64_t dim;
};

/// Adjoint of each factor followed by the components.
std::vector<AdjointTerm> adjoint_branching(const EmbeddingSpec& spec);

/// Dynkin multi-index a_i per factor, from the Dynkin index of the restricted
/// adjoint. Throws Error(Validation) if the branching is dimension-inconsistent
/// or a simple-factor index is not a positive integer.
std::vector<Rational> embedding_index(const EmbeddingSpec& spec);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;
};

std::vector<CheckResult> validate(const EmbeddingSpec& spec);

/// (c, c) for the center of the Levi subalgebra obtained by deleting simple
/// node `node` (1-based), evaluated on a root whose a_node coefficient is 1:
/// d_node^2 / (w_node, w_node).
Rational levi_center_norm(const RootSystem& ambient, int node);

}  // namespace confembed
