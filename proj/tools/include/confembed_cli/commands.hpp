#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "confembed/embedding.hpp"
#include "confembed/error.hpp"
#include "confembed/report.hpp"

namespace confembed::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kUnknownSpec = 3,
  kInconclusive = 4,
  kUnsupported = 5,
};

int exit_code_for(ErrorKind kind);

struct CommandOutput {
  ReportDocument doc;
  std::string text;
  int exit_code = kOk;
};

/// Either a catalog name (plus rank for parametric families) or a spec file.
struct SpecSource {
  std::string name;
  std::optional<int> rank;
  std::string spec_file;
};

EmbeddingSpec resolve_spec(const SpecSource& source);

CommandOutput cmd_lie_info(const std::string& type);
CommandOutput cmd_tensor(const std::string& type, const std::string& a, const std::string& b,
                         std::uint64_t guard);
CommandOutput cmd_solve_level(const SpecSource& source);
CommandOutput cmd_verify(const SpecSource& source, const std::optional<std::string>& level);
/// Items are catalog names, "name:rank", or paths to spec files; innermost first.
CommandOutput cmd_chain(const std::vector<std::string>& items, const std::string& level);
/// format is "md" or "json"; range like "4..6" expands parametric families.
CommandOutput cmd_report_all(const std::string& format, const std::optional<std::string>& range);
CommandOutput cmd_catalog_list();
CommandOutput cmd_catalog_show(const SpecSource& source);

/// Full command line entry point; writes reports to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confembed::cli
