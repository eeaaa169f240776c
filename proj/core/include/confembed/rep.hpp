#pragma once

// Finite-dimensional representations: weight multiplicities (Freudenthal),
// tensor product decomposition (Klimyk / Racah-Speiser), Dynkin indices.

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "confembed/lie.hpp"

namespace confembed {

struct RepConfig {
  /// Largest Weyl dimension for which a weight system is materialized.
  std::uint64_t dimension_guard = 100000;
};

/// Weight multiplicities of V(highest), stored on dominant representatives.
class WeightSystem {
 public:
  WeightSystem(Weight highest, std::map<IntVec, std::uint64_t> dominant);

  const Weight& highest() const { return highest_; }
  /// Multiplicity of an arbitrary integral weight (0 if absent).
  std::uint64_t multiplicity(const Weight& w) const;
  std::uint64_t multiplicity(const IntVec& w) const;
  const std::map<IntVec, std::uint64_t>& dominant_multiplicities() const { return dominant_; }
  /// Full map over the saturated weight set, expanded through Weyl orbits.
  std::map<IntVec, std::uint64_t> expand() const;
  /// Sum of all multiplicities (equals weyl_dim(highest)).
  std::uint64_t total() const;

 private:
  Weight highest_;
  std::map<IntVec, std::uint64_t> dominant_;
};

/// Multiset of dominant weights; keys ordered lexicographically by coordinates.
class Decomposition {
 public:
  explicit Decomposition(std::shared_ptr<const RootSystem> system);

  const RootSystem& system() const { return *system_; }
  const std::map<IntVec, std::uint64_t>& terms() const { return terms_; }

  void add(const Weight& w, std::uint64_t multiplicity = 1);
  void add(const IntVec& w, std::uint64_t multiplicity = 1);
  std::uint64_t multiplicity(const Weight& w) const;
  std::uint64_t multiplicity(const IntVec& w) const;
  std::vector<std::pair<Weight, std::uint64_t>> entries() const;
  std::size_t size() const { return terms_.size(); }
  /// Sum of multiplicity * weyl_dim over the terms.
  BigInt total_dimension() const;

  bool operator==(const Decomposition& other) const;

 private:
  std::shared_ptr<const RootSystem> system_;
  std::map<IntVec, std::uint64_t> terms_;
};

WeightSystem weight_multiplicities(const Weight& lambda, const RepConfig& config = {});

Decomposition tensor_decompose(const Weight& lambda, const Weight& mu, const RepConfig& config = {});

/// x_lambda = dim V(lambda) * casimir(lambda) / (2 dim g).
Rational dynkin_index_rep(const Weight& lambda);

}  // namespace confembed
