#include "confembed/embedding.hpp"

#include <algorithm>
#include <set>

#include "confembed/error.hpp"
#include "confembed/rep.hpp"

namespace confembed {

SubalgebraFactor SubalgebraFactor::simple(LieType t, Rational index) {
  t.check();
  SubalgebraFactor f;
  f.kind = Kind::Simple;
  f.type = t;
  f.index = std::move(index);
  return f;
}

SubalgebraFactor SubalgebraFactor::abelian(int dim) {
  if (dim < 1) fail(ErrorKind::Usage, "abelian factor needs positive dimension");
  SubalgebraFactor f;
  f.kind = Kind::Abelian;
  f.abelian_dim = dim;
  f.index = 1;
  return f;
}

std::uint64_t SubalgebraFactor::dimension() const {
  return is_simple() ? root_system(type)->dimension() : static_cast<std::uint64_t>(abelian_dim);
}

int SubalgebraFactor::dual_coxeter() const { return is_simple() ? root_system(type)->dual_coxeter() : 0; }

std::string SubalgebraFactor::label() const {
  return is_simple() ? type.to_string() : "abelian(" + std::to_string(abelian_dim) + ")";
}

const char* to_string(AnnotationKind kind) {
  switch (kind) {
    case AnnotationKind::SingularVectorAbsent: return "singular-vector-absent";
    case AnnotationKind::DecompositionExtension: return "decomposition-extension";
    case AnnotationKind::LiteratureResult: return "literature-result";
    case AnnotationKind::DecompositionClaim: return "decomposition-claim";
  }
  return "unknown";
}

AnnotationKind parse_annotation_kind(const std::string& text) {
  for (auto k : {AnnotationKind::SingularVectorAbsent, AnnotationKind::DecompositionExtension,
                 AnnotationKind::LiteratureResult, AnnotationKind::DecompositionClaim}) {
    if (text == to_string(k)) return k;
  }
  fail(ErrorKind::Parse, "unknown annotation kind '" + text + "'");
}

std::string EmbeddingSpec::display_name() const {
  if (!rank_parameter) return name;
  return name + "[l=" + std::to_string(*rank_parameter) + "]";
}

std::vector<std::size_t> EmbeddingSpec::simple_factor_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].is_simple()) out.push_back(i);
  return out;
}

std::uint64_t EmbeddingSpec::abelian_dimension() const {
  std::uint64_t d = 0;
  for (const auto& f : factors)
    if (!f.is_simple()) d += f.dimension();
  return d;
}

bool EmbeddingSpec::is_graded_single_simple() const {
  return automorphism_order && *automorphism_order >= 2 && factors.size() == 1 && factors[0].is_simple();
}

std::vector<AdjointTerm> adjoint_branching(const EmbeddingSpec& spec) {
  std::vector<AdjointTerm> out;
  for (const auto& f : spec.factors) out.push_back({"adjoint " + f.label(), f.dimension()});
  for (const auto& c : spec.components) {
    std::string label = "V(";
    for (std::size_t i = 0; i < c.factor_weights.size(); ++i) {
      if (i) label += " x ";
      label += c.factor_weights[i].label();
    }
    if (c.factor_weights.empty()) label += "1";
    label += ")@" + std::to_string(c.grading);
    out.push_back({label, c.dim});
  }
  return out;
}

namespace {

std::uint64_t sum_dims(const std::vector<AdjointTerm>& terms) {
  std::uint64_t s = 0;
  for (const auto& t : terms) s += t.dim;
  return s;
}

std::string dimension_witness(const EmbeddingSpec& spec, const std::vector<AdjointTerm>& terms) {
  std::string rhs;
  for (const auto& t : terms) {
    if (!rhs.empty()) rhs += " + ";
    rhs += std::to_string(t.dim);
  }
  return "dim g = " + std::to_string(root_system(spec.ambient)->dimension()) + ", branching = " + rhs +
         " = " + std::to_string(sum_dims(terms));
}

// Structural problems that make the index and Casimir computations meaningless.
std::string structural_problem(const EmbeddingSpec& spec) {
  const auto simple = spec.simple_factor_indices();
  for (const auto& c : spec.components) {
    if (c.factor_weights.size() != simple.size()) {
      return "component at grading " + std::to_string(c.grading) + " has " +
             std::to_string(c.factor_weights.size()) + " factor weights, expected " +
             std::to_string(simple.size());
    }
    for (std::size_t m = 0; m < simple.size(); ++m) {
      const Weight& w = c.factor_weights[m];
      if (w.system().type() != spec.factors[simple[m]].type) {
        return "factor weight " + w.to_string() + " is not a " + spec.factors[simple[m]].type.to_string() +
               " weight";
      }
      if (!w.is_dominant_integral()) return "factor weight " + w.to_string() + " is not dominant integral";
    }
    if (c.center_norm < 0) return "negative center_norm";
  }
  return {};
}

}  // namespace

std::vector<Rational> embedding_index(const EmbeddingSpec& spec) {
  if (auto problem = structural_problem(spec); !problem.empty()) fail(ErrorKind::Validation, problem);
  const auto terms = adjoint_branching(spec);
  const auto ambient = root_system(spec.ambient);
  if (sum_dims(terms) != ambient->dimension()) {
    fail(ErrorKind::Validation, "adjoint branching is dimension-inconsistent: " + dimension_witness(spec, terms));
  }
  const auto simple = spec.simple_factor_indices();
  std::vector<Rational> out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    if (!f.is_simple()) {
      out.emplace_back(1);
      continue;
    }
    const std::size_t slot = static_cast<std::size_t>(std::find(simple.begin(), simple.end(), i) - simple.begin());
    // Dynkin index of g restricted to this factor, divided by index(adjoint g) = h^vee(g).
    Rational restricted = f.dual_coxeter();
    for (const auto& c : spec.components) {
      Rational mult = 1;
      for (std::size_t m = 0; m < simple.size(); ++m) {
        if (m != slot) mult *= Rational(weyl_dim(c.factor_weights[m]));
      }
      restricted += mult * dynkin_index_rep(c.factor_weights[slot]);
    }
    const Rational a = restricted / ambient->dual_coxeter();
    if (!is_integer(a) || a <= 0) {
      fail(ErrorKind::Validation, "Dynkin index of " + f.label() + " is " + to_string(a) +
                                      ", not a positive integer");
    }
    out.push_back(a);
  }
  return out;
}

std::vector<CheckResult> validate(const EmbeddingSpec& spec) {
  std::vector<CheckResult> out;
  const auto ambient = root_system(spec.ambient);

  const std::string problem = structural_problem(spec);
  out.push_back({"structure", problem.empty(), problem.empty() ? "factor weights consistent" : problem});

  if (spec.components.empty()) out.push_back({"components", false, "no branching components"});

  if (spec.automorphism_order) {
    const int order = *spec.automorphism_order;
    bool ok = order >= 2;
    std::string bad;
    for (const auto& c : spec.components) {
      if (c.grading < 1 || c.grading >= order) {
        ok = false;
        bad += " " + std::to_string(c.grading);
      }
    }
    out.push_back({"grading-range", ok,
                   ok ? "gradings within 1.." + std::to_string(order - 1)
                      : "order " + std::to_string(order) + ", bad gradings:" + bad});
  }

  if (problem.empty()) {
    for (const auto& c : spec.components) {
      BigInt expected = 1;
      for (const auto& w : c.factor_weights) expected *= weyl_dim(w);
      const bool ok = expected == c.dim;
      out.push_back({"component-dim@" + std::to_string(c.grading), ok,
                     "stored " + std::to_string(c.dim) + ", Weyl " + expected.str()});
    }
  }

  const auto terms = adjoint_branching(spec);
  out.push_back({"dimension", sum_dims(terms) == ambient->dimension(), dimension_witness(spec, terms)});

  if (problem.empty()) {
    try {
      const auto indices = embedding_index(spec);
      bool declared_ok = true;
      std::string witness = "a = [";
      for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) witness += ",";
        witness += to_string(indices[i]);
        if (indices[i] != spec.factors[i].index) declared_ok = false;
      }
      witness += "]";
      if (!declared_ok) witness += " differs from declared indices";
      out.push_back({"index", declared_ok, witness});
    } catch (const Error& e) {
      out.push_back({"index", false, e.what()});
    }

    if (spec.equal_casimir && !spec.components.empty()) {
      // Each component's l0 data: Casimir per simple factor plus center norm.
      std::set<std::vector<Rational>> distinct;
      std::string witness;
      for (const auto& c : spec.components) {
        std::vector<Rational> key;
        if (!witness.empty()) witness += "; ";
        for (std::size_t m = 0; m < c.factor_weights.size(); ++m) {
          key.push_back(casimir(c.factor_weights[m]));
          if (m) witness += ",";
          witness += c.factor_weights[m].label() + ": " + to_string(key.back());
        }
        key.push_back(c.center_norm);
        if (c.center_norm != 0) witness += (c.factor_weights.empty() ? "" : ", ") + std::string("center ") +
                                           to_string(c.center_norm);
        distinct.insert(key);
      }
      out.push_back({"casimir-equality", distinct.size() == 1, witness});
    }
  }
  return out;
}

Rational levi_center_norm(const RootSystem& ambient, int node) {
  if (node < 1 || node > ambient.rank()) fail(ErrorKind::Usage, "Levi node out of range");
  const Rational d = ambient.symmetrizers()[node - 1];
  return d * d / ambient.gram()[node - 1][node - 1];
}

}  // namespace confembed
