#pragma once

// Affine-level arithmetic: Sugawara central charges, lowest conformal
// weights, the L(0) eigenvalue on a branching component and the solver for
// conformal levels.

#include <string>
#include <vector>

#include "confembed/embedding.hpp"

namespace confembed {

/// k dim g / (k + h). Throws Error(Domain) at the critical level k = -h.
Rational sugawara_central_charge(LieType t, const Rational& k);

/// (mu, mu + 2 rho) / (2 (k' + h)) for a simple factor.
Rational lowest_conformal_weight(const SubalgebraFactor& factor, const Weight& mu, const Rational& k_prime);

/// Sum over simple factors of casimir_i / (2 (a_i k + h_i)), plus
/// center_norm / (2k) when the component carries a center charge.
Rational l0_eigenvalue(const EmbeddingSpec& spec, const BranchingComponent& component, const Rational& k);

struct CentralChargeCheck {
  Rational lhs;  // abelian dimension + Sugawara charges of the simple factors at a_i k
  Rational rhs;  // Sugawara charge of the ambient algebra at k
  bool equal = false;
};

CentralChargeCheck central_charge_check(const EmbeddingSpec& spec, const Rational& k);

struct LevelSolution {
  Rational k;
  /// a_i k for every factor, in factor order.
  std::vector<Rational> factor_levels;
  /// l0_eigenvalue per component, in component order; all equal 1.
  std::vector<Rational> eigenvalue_witnesses;
  Rational central_charge_lhs;
  Rational central_charge_rhs;
};

struct LevelSolveResult {
  /// Sorted by k, largest first.
  std::vector<LevelSolution> solutions;
  /// Excluded poles, discarded irrational factors and similar notes.
  std::vector<std::string> diagnostics;
};

/// All rational k at which every component has L(0) eigenvalue 1, poles
/// excluded. Throws Error(Usage) for a spec without components.
LevelSolveResult solve_conformal_levels(const EmbeddingSpec& spec);

/// Levels at which the L(0) eigenvalue is singular for this spec.
std::vector<Rational> level_poles(const EmbeddingSpec& spec);

}  // namespace confembed
