#pragma once

// JSON rendering of results and the versioned report envelope
// (docs/report-schema.md).

#include <string>
#include <vector>

#include <json.hpp>

#include "confembed/conformal.hpp"
#include "confembed/embedding.hpp"
#include "confembed/rep.hpp"
#include "confembed/verify.hpp"

namespace confembed {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const Rational& q);
Json to_json(const Weight& w);
Json to_json(const Decomposition& d);
Json to_json(const CheckResult& c);
Json to_json(const LevelSolution& s);
Json to_json(const LevelSolveResult& r);
Json to_json(const CentralChargeCheck& c);
Json to_json(const VerificationReport& r);
Json to_json(const ChainReport& r);
Json root_system_json(const RootSystem& rs);

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::vector<std::string> command;
  Json results = Json::object();
  std::vector<std::string> diagnostics;

  Json to_json() const;
  /// Throws Error(Parse) on documents that do not follow the schema.
  static ReportDocument from_json(const Json& j);
  /// Two-space indented JSON with a trailing newline; byte-stable.
  std::string dump() const;

  bool operator==(const ReportDocument& other) const;
};

}  // namespace confembed
