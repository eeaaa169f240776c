#include "confembed/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "confembed/error.hpp"

namespace confembed {

using nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "confembed-spec";
constexpr const char* kVersion = "1";

const ordered_json& field(const ordered_json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string string_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_string()) fail(ErrorKind::Parse, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int int_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number_integer()) fail(ErrorKind::Parse, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::optional<Weight> optional_weight(const ordered_json& obj, const char* key, LieType t) {
  const auto& v = field(obj, key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) fail(ErrorKind::Parse, std::string("field '") + key + "' must be a weight string or null");
  return parse_weight(*root_system(t), v.get<std::string>());
}

ordered_json factor_to_json(const SubalgebraFactor& f) {
  ordered_json j;
  if (f.is_simple()) {
    j["kind"] = "simple";
    j["type"] = f.type.to_string();
  } else {
    j["kind"] = "abelian";
    j["dim"] = f.abelian_dim;
  }
  j["index"] = to_string(f.index);
  return j;
}

SubalgebraFactor factor_from_json(const ordered_json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "simple") {
    return SubalgebraFactor::simple(LieType::parse(string_field(j, "type")),
                                    parse_rational(string_field(j, "index")));
  }
  if (kind == "abelian") {
    auto f = SubalgebraFactor::abelian(int_field(j, "dim"));
    if (parse_rational(string_field(j, "index")) != 1) fail(ErrorKind::Parse, "abelian factor index must be 1");
    return f;
  }
  fail(ErrorKind::Parse, "unknown factor kind '" + kind + "'");
}

// Type of the first simple factor; annotation weights live there.
std::optional<LieType> annotation_type(const EmbeddingSpec& spec) {
  for (const auto& f : spec.factors)
    if (f.is_simple()) return f.type;
  return std::nullopt;
}

}  // namespace

std::string format_weight_coords(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.coords().size(); ++i) {
    if (i) out += ",";
    out += to_string(w.coords()[i]);
  }
  return out;
}

Weight parse_weight(const RootSystem& system, const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorKind::Parse, "empty coordinate in weight '" + text + "'");
    coords.push_back(parse_rational(std::string_view(part).substr(b, e - b + 1)));
  }
  if (!text.empty() && text.back() == ',') fail(ErrorKind::Parse, "empty coordinate in weight '" + text + "'");
  if (static_cast<int>(coords.size()) != system.rank()) {
    fail(ErrorKind::Parse, "weight '" + text + "' has " + std::to_string(coords.size()) + " coordinates, " +
                               system.type().to_string() + " needs " + std::to_string(system.rank()));
  }
  return system.weight(std::move(coords));
}

ordered_json spec_to_json(const EmbeddingSpec& spec) {
  ordered_json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["name"] = spec.name;
  j["rank_parameter"] = spec.rank_parameter ? ordered_json(*spec.rank_parameter) : ordered_json(nullptr);
  j["ambient"] = spec.ambient.to_string();
  j["automorphism_order"] =
      spec.automorphism_order ? ordered_json(*spec.automorphism_order) : ordered_json("none");
  j["equal_casimir"] = spec.equal_casimir;

  j["factors"] = ordered_json::array();
  for (const auto& f : spec.factors) j["factors"].push_back(factor_to_json(f));

  j["components"] = ordered_json::array();
  for (const auto& c : spec.components) {
    ordered_json cj;
    cj["grading"] = c.grading;
    cj["factor_weights"] = ordered_json::array();
    for (const auto& w : c.factor_weights) cj["factor_weights"].push_back(format_weight_coords(w));
    cj["center_norm"] = to_string(c.center_norm);
    cj["dim"] = c.dim;
    j["components"].push_back(std::move(cj));
  }

  j["annotations"] = ordered_json::array();
  for (const auto& a : spec.annotations) {
    ordered_json aj;
    aj["kind"] = to_string(a.kind);
    aj["weight"] = a.weight ? ordered_json(format_weight_coords(*a.weight)) : ordered_json(nullptr);
    aj["grading"] = a.grading;
    aj["ambient_weight"] =
        a.ambient_weight ? ordered_json(format_weight_coords(*a.ambient_weight)) : ordered_json(nullptr);
    aj["summands"] = ordered_json::array();
    for (const auto& w : a.summands) aj["summands"].push_back(format_weight_coords(w));
    aj["resolution"] = a.resolution;
    aj["source"] = a.source;
    j["annotations"].push_back(std::move(aj));
  }
  return j;
}

EmbeddingSpec spec_from_json(const ordered_json& doc) {
  try {
    if (string_field(doc, "format") != kFormat) fail(ErrorKind::Parse, "not a confembed-spec document");
    if (string_field(doc, "version") != kVersion) {
      fail(ErrorKind::Parse, "unsupported spec version '" + string_field(doc, "version") + "'");
    }
    EmbeddingSpec spec;
    spec.name = string_field(doc, "name");
    if (spec.name.empty()) fail(ErrorKind::Parse, "empty spec name");
    const auto& rank = field(doc, "rank_parameter");
    if (!rank.is_null()) spec.rank_parameter = int_field(doc, "rank_parameter");
    spec.ambient = LieType::parse(string_field(doc, "ambient"));
    const auto& order = field(doc, "automorphism_order");
    if (order.is_string()) {
      if (order.get<std::string>() != "none") fail(ErrorKind::Parse, "automorphism_order must be an integer or \"none\"");
    } else {
      spec.automorphism_order = int_field(doc, "automorphism_order");
    }
    const auto& eq = field(doc, "equal_casimir");
    if (!eq.is_boolean()) fail(ErrorKind::Parse, "field 'equal_casimir' must be a boolean");
    spec.equal_casimir = eq.get<bool>();

    const auto& factors = field(doc, "factors");
    if (!factors.is_array()) fail(ErrorKind::Parse, "field 'factors' must be an array");
    for (const auto& f : factors) spec.factors.push_back(factor_from_json(f));
    const auto simple = spec.simple_factor_indices();

    const auto& components = field(doc, "components");
    if (!components.is_array()) fail(ErrorKind::Parse, "field 'components' must be an array");
    for (const auto& cj : components) {
      BranchingComponent c;
      c.grading = int_field(cj, "grading");
      const auto& weights = field(cj, "factor_weights");
      if (!weights.is_array() || weights.size() != simple.size()) {
        fail(ErrorKind::Parse, "component needs one factor weight per simple factor");
      }
      for (std::size_t m = 0; m < simple.size(); ++m) {
        if (!weights[m].is_string()) fail(ErrorKind::Parse, "factor weights must be strings");
        c.factor_weights.push_back(
            parse_weight(*root_system(spec.factors[simple[m]].type), weights[m].get<std::string>()));
      }
      c.center_norm = parse_rational(string_field(cj, "center_norm"));
      const auto& dim = field(cj, "dim");
      if (!dim.is_number_unsigned()) fail(ErrorKind::Parse, "component dim must be a positive integer");
      c.dim = dim.get<std::uint64_t>();
      spec.components.push_back(std::move(c));
    }

    const auto& annotations = field(doc, "annotations");
    if (!annotations.is_array()) fail(ErrorKind::Parse, "field 'annotations' must be an array");
    const auto sub = annotation_type(spec);
    for (const auto& aj : annotations) {
      Annotation a;
      a.kind = parse_annotation_kind(string_field(aj, "kind"));
      a.grading = int_field(aj, "grading");
      a.resolution = string_field(aj, "resolution");
      a.source = string_field(aj, "source");
      const bool has_weights = !field(aj, "weight").is_null() || !field(aj, "summands").empty();
      if (has_weights && !sub) fail(ErrorKind::Parse, "annotation weights need a simple factor");
      if (sub) {
        a.weight = optional_weight(aj, "weight", *sub);
        for (const auto& s : field(aj, "summands")) {
          if (!s.is_string()) fail(ErrorKind::Parse, "summands must be weight strings");
          a.summands.push_back(parse_weight(*root_system(*sub), s.get<std::string>()));
        }
      }
      a.ambient_weight = optional_weight(aj, "ambient_weight", spec.ambient);
      spec.annotations.push_back(std::move(a));
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed spec document: ") + e.what());
  }
}

std::string dump_spec(const EmbeddingSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

EmbeddingSpec parse_spec(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

EmbeddingSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read spec file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

}  // namespace confembed
