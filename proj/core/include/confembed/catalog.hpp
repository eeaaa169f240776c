#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "confembed/embedding.hpp"

namespace confembed {

/// A named embedding, or a family of embeddings indexed by a rank l.
struct CatalogEntry {
  std::string name;
  std::string ambient_label;     // e.g. "A_{2ℓ-1}"
  std::string subalgebra_label;  // e.g. "C_ℓ"
  bool parametric = false;
  int min_rank = 0;  // parametric entries only
  int max_rank = 0;
  std::function<EmbeddingSpec(int)> build;
};

constexpr int kMaxCatalogRank = 8;

const std::vector<CatalogEntry>& catalog_entries();

/// Throws Error(UnknownSpec) for unknown names, Error(Usage) for a missing or
/// out-of-range rank on parametric entries (or a rank given to a fixed entry).
const CatalogEntry& find_entry(const std::string& name);
EmbeddingSpec make_spec(const std::string& name, std::optional<int> rank = std::nullopt);

/// Every built-in instance, parametric families expanded over
/// [family minimum, min(max_rank, family maximum)].
std::vector<EmbeddingSpec> catalog(int max_rank = kMaxCatalogRank);

}  // namespace confembed
