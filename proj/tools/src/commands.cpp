#include "confembed_cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "confembed/catalog.hpp"
#include "confembed/conformal.hpp"
#include "confembed/error.hpp"
#include "confembed/rep.hpp"
#include "confembed/spec_io.hpp"
#include "confembed/verify.hpp"

namespace confembed::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSpec: return kUnknownSpec;
    case ErrorKind::Unsupported: return kUnsupported;
    default: return kUsage;
  }
}

EmbeddingSpec resolve_spec(const SpecSource& source) {
  if (!source.spec_file.empty()) {
    if (!source.name.empty()) fail(ErrorKind::Usage, "give either a spec name or --spec-file, not both");
    if (source.rank) fail(ErrorKind::Usage, "--rank does not apply to spec files");
    EmbeddingSpec spec = load_spec_file(source.spec_file);
    for (const auto& c : validate(spec))
      if (!c.passed) fail(ErrorKind::Validation, source.spec_file + ": check " + c.name + " failed: " + c.witness);
    return spec;
  }
  if (source.name.empty()) fail(ErrorKind::Usage, "missing spec name");
  return make_spec(source.name, source.rank);
}

namespace {

std::string pad(std::string s, std::size_t width) {
  // Column widths count code points so that ω and ℓ line up.
  std::size_t cps = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++cps;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string subalgebra_label(const EmbeddingSpec& spec) {
  std::vector<std::string> parts;
  for (const auto& f : spec.factors) {
    if (f.is_simple()) {
      parts.push_back(f.type.to_string());
    } else {
      parts.push_back(f.abelian_dim == 1 ? "u(1)" : "u(1)^" + std::to_string(f.abelian_dim));
    }
  }
  return join(parts, "+");
}

Json validation_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

std::string validation_text(const std::vector<CheckResult>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += "  " + pad(c.passed ? "ok" : "FAIL", 5) + pad(c.name, 18) + c.witness + "\n";
  }
  return out;
}

Rational parse_level(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    fail(ErrorKind::Usage, "bad level '" + text + "': " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

CommandOutput cmd_lie_info(const std::string& type) {
  const auto rs = root_system(LieType::parse(type));
  CommandOutput out;
  out.doc.results = root_system_json(*rs);
  std::ostringstream text;
  text << rs->type().to_string() << "\n"
       << "  dual Coxeter number  " << rs->dual_coxeter() << "\n"
       << "  dimension            " << rs->dimension() << "\n"
       << "  positive roots       " << rs->positive_root_coords().size() << "\n"
       << "  theta                " << rs->theta().to_string() << " (" << rs->theta().label() << ")\n"
       << "  rho                  " << rs->rho().to_string() << "\n"
       << "  Cartan matrix\n";
  for (const auto& row : rs->cartan()) {
    text << "    ";
    for (const auto x : row) text << std::setw(3) << x;
    text << "\n";
  }
  out.text = text.str();
  return out;
}

CommandOutput cmd_tensor(const std::string& type, const std::string& a, const std::string& b,
                         std::uint64_t guard) {
  const auto rs = root_system(LieType::parse(type));
  const Weight lambda = parse_weight(*rs, a);
  const Weight mu = parse_weight(*rs, b);
  const Decomposition d = tensor_decompose(lambda, mu, RepConfig{guard});
  const BigInt product = weyl_dim(lambda) * weyl_dim(mu);
  const BigInt total = d.total_dimension();

  CommandOutput out;
  out.doc.results = {{"type", rs->type().to_string()},
                     {"lambda", to_json(lambda)},
                     {"mu", to_json(mu)},
                     {"dim_lambda", weyl_dim(lambda).str()},
                     {"dim_mu", weyl_dim(mu).str()},
                     {"decomposition", to_json(d)},
                     {"total_dimension", total.str()},
                     {"dimension_conserved", total == product}};
  std::ostringstream text;
  text << rs->type().to_string() << ": V(" << lambda.label() << ") x V(" << mu.label() << ")\n";
  std::vector<std::string> dims;
  for (const auto& [w, m] : d.entries()) {
    text << "  " << pad(w.to_string(), 14) << pad(w.label(), 14) << "dim " << pad(weyl_dim(w).str(), 8)
         << "x" << m << "\n";
    dims.push_back((m > 1 ? std::to_string(m) + "*" : "") + weyl_dim(w).str());
  }
  text << "dimension check: " << weyl_dim(lambda) << " * " << weyl_dim(mu) << " = " << product << ", summands "
       << join(dims, " + ") << " = " << total << (total == product ? " (ok)" : " (MISMATCH)") << "\n";
  out.text = text.str();
  return out;
}

CommandOutput cmd_solve_level(const SpecSource& source) {
  const EmbeddingSpec spec = resolve_spec(source);
  const auto checks = validate(spec);
  const LevelSolveResult r = solve_conformal_levels(spec);

  CommandOutput out;
  out.doc.results = {{"spec", spec.display_name()}, {"validation", validation_json(checks)}, {"levels", to_json(r)}};
  out.doc.diagnostics = r.diagnostics;
  std::ostringstream text;
  text << spec.display_name() << ": " << spec.ambient.to_string() << " > " << subalgebra_label(spec) << "\n";
  text << validation_text(checks);
  if (r.solutions.empty()) text << "no conformal level\n";
  for (const auto& s : r.solutions) {
    std::vector<std::string> levels, witnesses;
    for (const auto& l : s.factor_levels) levels.push_back(to_string(l));
    for (const auto& w : s.eigenvalue_witnesses) witnesses.push_back(to_string(w));
    text << "k = " << to_string(s.k) << "\n"
         << "  factor levels   " << join(levels, ", ") << "\n"
         << "  L(0) on g_i     " << join(witnesses, ", ") << "\n"
         << "  central charge  " << to_string(s.central_charge_lhs) << " = " << to_string(s.central_charge_rhs)
         << (s.central_charge_lhs == s.central_charge_rhs ? " (equal)" : " (DIFFERENT)") << "\n";
  }
  out.text = text.str();
  return out;
}

namespace {

std::string scan_text(const VerificationReport& r) {
  std::ostringstream text;
  text << r.spec_name << " at k = " << to_string(r.level) << ", k' = " << to_string(r.factor_level) << "\n";
  for (const auto& p : r.pairs) {
    std::vector<std::string> terms;
    for (const auto& [w, m] : p.product.entries()) terms.push_back((m > 1 ? std::to_string(m) + "*" : "") + w.label());
    text << "  " << (p.extension ? "ext" : "") << "(" << p.grading_i << "," << p.grading_j << ") -> "
         << p.target_grading << ": " << join(terms, " + ") << "; expected " << p.expected.label()
         << (p.expected_present ? " present" : " MISSING") << "\n";
  }
  for (const auto& f : r.findings) {
    text << "  " << pad(f.weight.label(), 10) << "delta " << pad(to_string(f.delta), 7) << to_string(f.classification);
    if (f.annotation) text << " (annotation " << *f.annotation << ")";
    text << "\n";
  }
  text << "status: " << to_string(r.status) << "\n";
  if (!r.concrete_decomposition.empty()) text << r.concrete_decomposition << "\n";
  return text.str();
}

int status_exit(VerificationStatus s) { return s == VerificationStatus::Inconclusive ? kInconclusive : kOk; }

}  // namespace

CommandOutput cmd_verify(const SpecSource& source, const std::optional<std::string>& level) {
  const EmbeddingSpec spec = resolve_spec(source);
  if (!spec.is_graded_single_simple()) {
    fail(ErrorKind::Unsupported, "'" + spec.display_name() +
                                     "' is not graded with a single simple factor; use solve-level instead");
  }
  Rational k;
  if (level) {
    k = parse_level(*level);
  } else {
    const auto levels = conformal_levels(spec);
    if (levels.empty()) fail(ErrorKind::Usage, "'" + spec.display_name() + "' has no conformal level");
    if (levels.size() > 1) fail(ErrorKind::Usage, "several conformal levels; pick one with --level");
    k = levels.front();
  }
  const VerificationReport r = fusion_scan(spec, k);
  CommandOutput out;
  out.doc.results = to_json(r);
  out.text = scan_text(r);
  out.exit_code = status_exit(r.status);
  return out;
}

CommandOutput cmd_chain(const std::vector<std::string>& items, const std::string& level) {
  std::vector<EmbeddingSpec> specs;
  for (const auto& item : items) {
    if (item.find('/') != std::string::npos || item.ends_with(".json")) {
      specs.push_back(load_spec_file(item));
      continue;
    }
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      specs.push_back(make_spec(item));
    } else {
      int rank = 0;
      try {
        rank = std::stoi(item.substr(colon + 1));
      } catch (const std::exception&) {
        fail(ErrorKind::Usage, "bad rank in '" + item + "'");
      }
      specs.push_back(make_spec(item.substr(0, colon), rank));
    }
  }
  const ChainReport r = chain_report(specs, parse_level(level));
  CommandOutput out;
  out.doc.results = to_json(r);
  std::ostringstream text;
  for (const auto& step : r.steps) {
    text << step.spec_name << " at k = " << to_string(step.level) << " (central charge "
         << to_string(step.central_charge) << "): " << to_string(step.status) << "\n";
    for (const auto& s : step.statements) text << "  " << s.text << "  [" << s.basis << "]\n";
  }
  text << "chain status: " << to_string(r.status) << "\n";
  out.text = text.str();
  out.exit_code = status_exit(r.status);
  return out;
}

// ---------------------------------------------------------------------------
// report-all

namespace {

struct Instance {
  EmbeddingSpec spec;
  std::vector<CheckResult> checks;
  std::optional<LevelSolveResult> levels;
  std::optional<VerificationReport> scan;
  std::string error;
  std::string status;
};

Instance evaluate(EmbeddingSpec spec) {
  Instance in{std::move(spec), {}, std::nullopt, std::nullopt, {}, {}};
  try {
    in.checks = validate(in.spec);
    in.levels = solve_conformal_levels(in.spec);
    const auto& sols = in.levels->solutions;
    if (sols.empty()) {
      in.status = "not conformal";
    } else if (!in.spec.is_graded_single_simple()) {
      in.status = "Conformal";
    } else if (sols.size() > 1) {
      in.status = "ambiguous level";
    } else {
      in.scan = fusion_scan(in.spec, sols.front().k);
      in.status = to_string(in.scan->status);
    }
  } catch (const Error& e) {
    in.error = e.what();
    in.status = std::string("error: ") + e.what();
  }
  return in;
}

std::vector<Rational> levels_of(const Instance& in) {
  std::vector<Rational> out;
  if (in.levels)
    for (const auto& s : in.levels->solutions) out.push_back(s.k);
  return out;
}

// Level of the first simple factor for each solution; empty without a simple factor.
std::vector<Rational> factor_levels_of(const Instance& in) {
  std::vector<Rational> out;
  const auto simple = in.spec.simple_factor_indices();
  if (!in.levels || simple.empty()) return out;
  for (const auto& s : in.levels->solutions) out.push_back(s.factor_levels[simple.front()]);
  return out;
}

std::string render_list(const std::vector<Rational>& values) {
  if (values.empty()) return "—";
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(to_string(v));
  return join(parts, ", ");
}

// alpha*ℓ + beta, e.g. "-ℓ+2", "-ℓ+3/2", "(-ℓ-1)/2".
std::string render_affine(const Rational& alpha, const Rational& beta) {
  if (alpha == 0) return to_string(beta);
  auto signed_term = [](const Rational& q, bool leading) {
    std::string s = to_string(q);
    if (!leading && q >= 0) s = "+" + s;
    return s;
  };
  auto coefficient = [](const BigInt& a) {
    if (a == 1) return std::string("ℓ");
    if (a == -1) return std::string("-ℓ");
    return a.str() + "ℓ";
  };
  if (is_integer(alpha)) {
    std::string out = coefficient(numerator_of(alpha));
    if (beta != 0) out += signed_term(beta, false);
    return out;
  }
  const BigInt d = boost::multiprecision::lcm(denominator_of(alpha), denominator_of(beta));
  const Rational a = alpha * Rational(d);
  const Rational b = beta * Rational(d);
  std::string out = "(" + coefficient(numerator_of(a));
  if (b != 0) out += signed_term(b, false);
  return out + ")/" + d.str();
}

// Fits each solution position as an affine function of the rank.
std::string fit_family(const std::vector<int>& ranks, const std::vector<std::vector<Rational>>& values) {
  if (values.empty()) return "—";
  const std::size_t n = values.front().size();
  for (const auto& v : values)
    if (v.size() != n) return "varies with ℓ";
  if (n == 0) return "—";
  std::vector<std::string> parts;
  for (std::size_t p = 0; p < n; ++p) {
    Rational alpha = 0;
    Rational beta = values[0][p];
    if (ranks.size() > 1) {
      alpha = (values[1][p] - values[0][p]) / (ranks[1] - ranks[0]);
      beta = values[0][p] - alpha * ranks[0];
    }
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (alpha * ranks[i] + beta != values[i][p]) return "varies with ℓ";
    }
    parts.push_back(render_affine(alpha, beta));
  }
  return join(parts, ", ");
}

struct Row {
  std::string spec;
  std::string g;
  std::string g0;
  std::string decomposition;
  std::string k;
  std::string k_prime;
  std::string status;
  std::vector<int> ranks;
  std::vector<Instance> instances;
};

std::string decomposition_cell(const Instance& in) {
  if (!in.spec.is_graded_single_simple()) return "—";
  if (in.scan && !in.scan->symbolic_decomposition.empty()) return in.scan->symbolic_decomposition;
  return "—";
}

Row single_row(Instance in) {
  Row row;
  row.spec = in.spec.display_name();
  row.g = in.spec.ambient.to_string();
  row.g0 = subalgebra_label(in.spec);
  row.decomposition = decomposition_cell(in);
  row.k = render_list(levels_of(in));
  row.k_prime = render_list(factor_levels_of(in));
  row.status = in.status;
  if (in.spec.rank_parameter) row.ranks.push_back(*in.spec.rank_parameter);
  row.instances.push_back(std::move(in));
  return row;
}

Row family_row(const CatalogEntry& e, int lo, int hi) {
  Row row;
  row.spec = e.name + " (ℓ=" + std::to_string(lo) + ".." + std::to_string(hi) + ")";
  row.g = e.ambient_label;
  row.g0 = e.subalgebra_label;
  std::vector<std::vector<Rational>> ks, kps;
  std::set<std::string> decompositions;
  std::vector<std::pair<std::string, int>> statuses;
  for (int l = lo; l <= hi; ++l) {
    Instance in = evaluate(e.build(l));
    row.ranks.push_back(l);
    ks.push_back(levels_of(in));
    kps.push_back(factor_levels_of(in));
    decompositions.insert(decomposition_cell(in));
    statuses.emplace_back(in.status, l);
    row.instances.push_back(std::move(in));
  }
  row.k = fit_family(row.ranks, ks);
  row.k_prime = fit_family(row.ranks, kps);
  row.decomposition = decompositions.size() == 1 ? *decompositions.begin() : "varies with ℓ";
  const bool uniform = std::all_of(statuses.begin(), statuses.end(),
                                   [&](const auto& s) { return s.first == statuses.front().first; });
  if (uniform) {
    row.status = statuses.front().first;
  } else {
    // Runs of equal status: "ℓ=2: Verified; ℓ=3..8: VerifiedWithAnnotations".
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < statuses.size();) {
      std::size_t j = i;
      while (j + 1 < statuses.size() && statuses[j + 1].first == statuses[i].first) ++j;
      std::string ranks = "ℓ=" + std::to_string(statuses[i].second);
      if (j > i) ranks += ".." + std::to_string(statuses[j].second);
      parts.push_back(ranks + ": " + statuses[i].first);
      i = j + 1;
    }
    row.status = join(parts, "; ");
  }
  return row;
}

Json instance_json(const Instance& in) {
  Json j = {{"spec", in.spec.display_name()}};
  j["rank"] = in.spec.rank_parameter ? Json(*in.spec.rank_parameter) : Json(nullptr);
  j["validation"] = validation_json(in.checks);
  j["levels"] = in.levels ? to_json(*in.levels) : Json(nullptr);
  j["scan"] = in.scan ? to_json(*in.scan) : Json(nullptr);
  j["status"] = in.status;
  j["error"] = in.error.empty() ? Json(nullptr) : Json(in.error);
  return j;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorKind::Usage, "rank range must look like 4..6, got '" + text + "'");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used_lo);
    const int hi = std::stoi(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo > hi || lo < 1) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    fail(ErrorKind::Usage, "rank range must look like 4..6, got '" + text + "'");
  }
}

}  // namespace

CommandOutput cmd_report_all(const std::string& format, const std::optional<std::string>& range) {
  if (format != "md" && format != "json") fail(ErrorKind::Usage, "format must be md or json");
  std::optional<std::pair<int, int>> ranks;
  if (range) ranks = parse_range(*range);

  std::vector<Row> rows;
  for (const auto& e : catalog_entries()) {
    if (!e.parametric) {
      rows.push_back(single_row(evaluate(e.build(0))));
      continue;
    }
    if (!ranks) {
      rows.push_back(family_row(e, e.min_rank, e.max_rank));
      continue;
    }
    for (int l = std::max(ranks->first, e.min_rank); l <= std::min(ranks->second, e.max_rank); ++l) {
      rows.push_back(single_row(evaluate(e.build(l))));
    }
  }

  CommandOutput out;
  Json jrows = Json::array();
  for (const auto& r : rows) {
    Json instances = Json::array();
    for (const auto& in : r.instances) instances.push_back(instance_json(in));
    jrows.push_back({{"spec", r.spec},
                     {"g", r.g},
                     {"g0", r.g0},
                     {"decomposition", r.decomposition},
                     {"k", r.k},
                     {"k_prime", r.k_prime},
                     {"status", r.status},
                     {"ranks", r.ranks},
                     {"instances", instances}});
  }
  out.doc.results = {{"mode", ranks ? "per-rank" : "aggregated"},
                     {"rank_range", range ? Json(*range) : Json(nullptr)},
                     {"rows", jrows}};

  std::ostringstream md;
  md << "| spec | g | g₀ | decomposition | k | k′ | status |\n"
     << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    md << "| " << r.spec << " | " << r.g << " | " << r.g0 << " | " << r.decomposition << " | " << r.k << " | "
       << r.k_prime << " | " << r.status << " |\n";
  }
  out.text = format == "json" ? out.doc.dump() : md.str();
  return out;
}

CommandOutput cmd_catalog_list() {
  CommandOutput out;
  Json entries = Json::array();
  std::ostringstream text;
  for (const auto& e : catalog_entries()) {
    Json j = {{"name", e.name}, {"g", e.ambient_label}, {"g0", e.subalgebra_label}, {"parametric", e.parametric}};
    j["ranks"] = e.parametric ? Json(std::to_string(e.min_rank) + ".." + std::to_string(e.max_rank)) : Json(nullptr);
    entries.push_back(std::move(j));
    text << pad(e.name, 14) << pad(e.ambient_label, 10) << pad(e.subalgebra_label, 10)
         << (e.parametric ? "ℓ=" + std::to_string(e.min_rank) + ".." + std::to_string(e.max_rank) : "") << "\n";
  }
  out.doc.results = {{"entries", entries}};
  out.text = text.str();
  return out;
}

CommandOutput cmd_catalog_show(const SpecSource& source) {
  const EmbeddingSpec spec = resolve_spec(source);
  const auto checks = validate(spec);
  CommandOutput out;
  out.doc.results = {{"spec", spec_to_json(spec)}, {"validation", validation_json(checks)}};
  out.text = dump_spec(spec) + validation_text(checks);
  return out;
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie-algebra and conformal-embedding computations", "confembed"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the JSON report document instead of text");

  std::string type, weight_a, weight_b;
  std::uint64_t guard = RepConfig{}.dimension_guard;
  auto* lie_info = app.add_subcommand("lie-info", "Root-system data of a simple Lie algebra");
  lie_info->add_option("type", type, "Lie type such as G2 or D5")->required();

  auto* tensor = app.add_subcommand("tensor", "Decompose V(a) x V(b)");
  tensor->add_option("type", type, "Lie type")->required();
  tensor->add_option("a", weight_a, "Dominant weight, comma-separated fundamental coordinates")->required();
  tensor->add_option("b", weight_b, "Dominant weight")->required();
  tensor->add_option("--guard", guard, "Largest Weyl dimension to expand");

  SpecSource source;
  std::optional<std::string> level;
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("name", source.name, "Catalog name");
    cmd->add_option("--rank,-l", source.rank, "Rank for parametric families");
    cmd->add_option("--spec-file", source.spec_file, "Load the spec from a JSON file");
  };
  auto* solve = app.add_subcommand("solve-level", "Conformal levels of an embedding");
  add_source(solve);
  auto* verify = app.add_subcommand("verify", "Fusion scan of a graded embedding");
  add_source(verify);
  verify->add_option("--level,-k", level, "Ambient level (default: the unique conformal level)");

  std::vector<std::string> chain_items;
  std::string chain_level;
  auto* chain = app.add_subcommand("chain", "Verify a chain of embeddings, innermost first");
  chain->add_option("specs", chain_items, "Catalog names (name or name:rank) or spec files")->required();
  chain->add_option("--level,-k", chain_level, "Level of the outermost algebra")->required();

  std::string format = "md";
  std::optional<std::string> range;
  auto* report = app.add_subcommand("report-all", "Solve and verify the whole catalog");
  report->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
  report->add_option("--rank-range", range, "Instantiate parametric families at these ranks, e.g. 4..6");

  auto* catalog_cmd = app.add_subcommand("catalog", "Browse the built-in catalog");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "List catalog entries");
  auto* show = catalog_cmd->add_subcommand("show", "Print a spec in file format with its validation");
  add_source(show);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    CommandOutput result;
    bool always_json = false;
    if (lie_info->parsed()) {
      result = cmd_lie_info(type);
    } else if (tensor->parsed()) {
      result = cmd_tensor(type, weight_a, weight_b, guard);
    } else if (solve->parsed()) {
      result = cmd_solve_level(source);
    } else if (verify->parsed()) {
      result = cmd_verify(source, level);
    } else if (chain->parsed()) {
      result = cmd_chain(chain_items, chain_level);
    } else if (report->parsed()) {
      result = cmd_report_all(format, range);
      always_json = format == "json";
    } else if (show->parsed()) {
      result = cmd_catalog_show(source);
    } else {
      result = cmd_catalog_list();
    }
    result.doc.command = args;
    out << ((json || always_json) ? result.doc.dump() : result.text);
    for (const auto& d : result.doc.diagnostics)
      if (!json) err << "note: " << d << "\n";
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace confembed::cli
