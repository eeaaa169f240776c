#pragma once

// JSON spec files: one EmbeddingSpec per document, keys in a fixed order
// (docs/spec-file-format.md).

#include <string>

#include <json.hpp>

#include "confembed/embedding.hpp"

namespace confembed {

nlohmann::ordered_json spec_to_json(const EmbeddingSpec& spec);
/// Throws Error(Parse) on malformed or inconsistent documents.
EmbeddingSpec spec_from_json(const nlohmann::ordered_json& doc);

std::string dump_spec(const EmbeddingSpec& spec);
EmbeddingSpec parse_spec(const std::string& text);
EmbeddingSpec load_spec_file(const std::string& path);

/// "1,0,2" against a given root system. Throws Error(Parse).
Weight parse_weight(const RootSystem& system, const std::string& text);
std::string format_weight_coords(const Weight& w);

}  // namespace confembed
