// flagsym: index of symmetry of generalized flag manifolds.
//
//   flagsym analyze A3:{2,3} [--xi 1,2] [--json] [--dot DIR]
//   flagsym enumerate --max-rank 6 [--families A,B] [--out FILE] [--seed S] [--dedup] [--dot DIR]
//   flagsym verify --max-rank 6 [--families A,B] [--seed S] [--json]
//   flagsym constants G2 [--out FILE]

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "flagsym/chevalley.hpp"
#include "flagsym/report_io.hpp"
#include "flagsym/survey.hpp"

namespace {

using namespace flagsym;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Family> parse_families(const std::string& text) {
  std::vector<Family> out;
  for (const auto& item : split(text, ',')) {
    auto f = item.size() == 1 ? family_from_char(item[0]) : std::nullopt;
    if (!f) throw InvalidInput("unknown family '" + item + "'");
    out.push_back(*f);
  }
  return out;
}

SimpleType parse_type(const std::string& text) {
  auto f = text.empty() ? std::nullopt : family_from_char(text[0]);
  if (!f || text.size() < 2) throw InvalidInput("malformed type '" + text + "'");
  const int rank = std::stoi(text.substr(1));
  if (!is_valid_type(*f, rank)) throw InvalidInput("invalid simple type " + text);
  return {*f, rank};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_analyze(const std::string& spec, const std::string& xi_text, std::uint64_t seed, bool json,
                const std::string& dot_dir) {
  const PaintedDiagram pd = parse_painted(spec);
  const FlagData f = make_flag(pd);
  std::vector<KahlerParam> xis;
  if (!xi_text.empty()) {
    std::vector<Rational> values;
    for (const auto& item : split(xi_text, ',')) values.push_back(parse_rational(item));
    xis.push_back(make_kahler_param(f, values));
  } else {
    xis = kahler_sample(f, seed, 5);
  }
  const ChevalleyTable table = build_constants(*pd.rs);
  const EnumerationEntry e = analyze_painting(pd, table, xis);
  if (!dot_dir.empty()) write_dot_files(pd, dot_dir);
  if (json) std::cout << to_detailed_json(e).dump(2) << "\n";
  else std::cout << describe(e);
  return e.failures.empty() ? 0 : 1;
}

int run_enumerate(const EnumerationOptions& options, const std::string& out, const std::string& dot_dir) {
  const EnumerationReport report = enumerate(options);
  if (!dot_dir.empty()) {
    for (const auto& e : report.entries) {
      auto rs = std::make_shared<const RootSystem>(build_root_system(e.type.family, e.type.rank));
      write_dot_files(make_painted(rs, e.painted), dot_dir);
    }
  }
  emit(to_json(report).dump(2) + "\n", out);
  if (!out.empty()) {
    std::cerr << report.summary.entries << " entries, " << report.summary.failed_checks.size()
              << " failed checks\n";
  }
  return report.summary.failed_checks.empty() ? 0 : 1;
}

int run_verify(const EnumerationOptions& options, bool json) {
  const EnumerationReport report = enumerate(options);
  const VerificationResult result = verify_theorem(report);
  if (json) {
    std::cout << to_json(result).dump(2) << "\n";
  } else {
    std::cout << report.summary.entries << " painted diagrams, " << report.summary.symmetric << " symmetric, "
              << report.summary.exceptions << " Onishchik exceptions\n";
    for (const auto& v : result.violations) {
      std::cout << "VIOLATION " << v.entry << " [" << v.check << "] " << v.detail << "\n";
    }
    std::cout << (result.passed ? "PASS" : "FAIL") << "\n";
  }
  return result.passed ? 0 : 1;
}

int run_constants(const std::string& type_text, const std::string& out) {
  const SimpleType type = parse_type(type_text);
  const RootSystem rs = build_root_system(type.family, type.rank);
  const ChevalleyTable table = build_constants(rs);
  std::ostringstream os;
  write_csv(os, table, rs);
  emit(os.str(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index of symmetry of generalized flag manifolds"};
  app.require_subcommand(1);

  std::string spec, xi_text, dot_dir, out, families_text, type_text;
  std::uint64_t seed = 0;
  bool json = false;
  bool dedup = false;
  int max_rank = 6;
  int samples = 5;

  auto* analyze = app.add_subcommand("analyze", "Analyze one painted diagram, e.g. A3:{2,3}");
  analyze->add_option("spec", spec, "Painted diagram <Family><rank>:{i,j,...}")->required();
  analyze->add_option("--xi", xi_text, "Kahler parameter, one positive rational per painted node");
  analyze->add_option("--seed", seed, "Seed for the xi sample when --xi is absent");
  analyze->add_flag("--json", json, "Emit JSON");
  analyze->add_option("--dot", dot_dir, "Write Graphviz files into DIR");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Sweep all paintings up to a rank");
  enumerate_cmd->add_option("--max-rank", max_rank, "Largest rank")->check(CLI::Range(1, kMaxEnumerationRank));
  enumerate_cmd->add_option("--families", families_text, "Comma-separated families, e.g. A,B,G");
  enumerate_cmd->add_option("--out", out, "Write the JSON report to FILE");
  enumerate_cmd->add_option("--seed", seed, "Seed for the xi samples");
  enumerate_cmd->add_option("--samples", samples, "xi samples per painting")->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--dedup", dedup, "Keep one painting per diagram-automorphism orbit");
  enumerate_cmd->add_option("--dot", dot_dir, "Write Graphviz files into DIR");

  auto* verify = app.add_subcommand("verify", "Check the theorem on every painting up to a rank");
  verify->add_option("--max-rank", max_rank, "Largest rank")->check(CLI::Range(1, kMaxEnumerationRank));
  verify->add_option("--families", families_text, "Comma-separated families");
  verify->add_option("--seed", seed, "Seed for the xi samples");
  verify->add_option("--samples", samples, "xi samples per painting")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Emit JSON");

  auto* constants = app.add_subcommand("constants", "Dump Chevalley structure constants as CSV");
  constants->add_option("type", type_text, "Simple type, e.g. G2")->required();
  constants->add_option("--out", out, "Write CSV to FILE");

  CLI11_PARSE(app, argc, argv);

  try {
    EnumerationOptions options;
    options.max_rank = max_rank;
    options.families = parse_families(families_text);
    options.dedup_automorphisms = dedup;
    options.seed = seed;
    options.xi_samples = samples;

    if (analyze->parsed()) return run_analyze(spec, xi_text, seed, json, dot_dir);
    if (enumerate_cmd->parsed()) return run_enumerate(options, out, dot_dir);
    if (verify->parsed()) return run_verify(options, json);
    if (constants->parsed()) return run_constants(type_text, out);
  } catch (const InvalidInput& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
