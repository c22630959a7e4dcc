// cantorlab: run line-delimited scenario files, generate instances, or run a
// generated suite with one scenario per kind.
//
// Exit codes: 0 all scenarios succeeded, 1 some verdict failed, 2 malformed input.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cantor/scenario.hpp"

namespace {

using cantor::json_io::Json;

struct Output {
  std::string format = "json";
  std::string path;
  std::ofstream file;

  std::ostream& stream() { return file.is_open() ? file : std::cout; }

  void emit(const cantor::Report& r) {
    if (format == "text") {
      stream() << cantor::render_text(r);
    } else {
      stream() << r.body.dump() << '\n';
    }
  }
};

cantor::Report invalid_report(const std::string& message, std::size_t line) {
  cantor::Report r;
  r.exit_code = 2;
  r.body = {{"line", line}, {"status", "invalid"}, {"error", {{"type", "input"}, {"message", message}}}};
  return r;
}

int run_file(const std::string& path, std::optional<std::uint64_t> horizon,
             std::optional<std::uint64_t> seed, Output& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cantorlab: cannot open " << path << '\n';
    return 2;
  }
  // Parse everything first; reports are emitted in input order.
  std::vector<cantor::Report> reports;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Json record = Json::parse(line);
      if (record.is_object()) {
        if (horizon && !record.contains("horizon")) record["horizon"] = *horizon;
        if (seed && !record.contains("seed") && !record.contains("payload")) record["seed"] = *seed;
      }
      reports.push_back(cantor::run_scenario(cantor::parse_scenario(record)));
    } catch (const nlohmann::json::exception& e) {
      reports.push_back(invalid_report(std::string("malformed JSON: ") + e.what(), number));
    } catch (const cantor::Error& e) {
      reports.push_back(invalid_report(e.what(), number));
    }
  }
  if (reports.empty()) {
    std::cerr << "cantorlab: " << path << " holds no scenarios\n";
    return 2;
  }
  int code = 0;
  for (const cantor::Report& r : reports) {
    out.emit(r);
    code = std::max(code, r.exit_code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-horizon splitting, slalom and filter-certificate laboratory"};
  app.require_subcommand(1);

  Output out;
  std::optional<std::uint64_t> horizon;
  std::uint64_t seed = 0;
  app.add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out.path, "Write reports to this file instead of stdout");
  app.add_option("--horizon", horizon, "Upper bound on word lengths and partition horizons");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for generated instances");

  auto* run = app.add_subcommand("run", "Run a line-delimited scenario file");
  std::string file;
  run->add_option("file", file, "Scenario file, one JSON record per line")->required();

  auto* gen = app.add_subcommand("gen", "Print a generated scenario");
  std::string kind;
  std::size_t size = 8;
  std::size_t count = 1;
  gen->add_option("--kind", kind, "Scenario kind")->required();
  gen->add_option("--size", size, "Instance size")->capture_default_str();
  gen->add_option("--count", count, "Number of scenarios (seeds seed, seed+1, ...)")
      ->capture_default_str();

  auto* suite = app.add_subcommand("suite", "Generate and run one scenario of every kind");
  suite->add_option("--size", size, "Instance size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!out.path.empty()) {
    out.file.open(out.path);
    if (!out.file) {
      std::cerr << "cantorlab: cannot write " << out.path << '\n';
      return 2;
    }
  }

  if (*run) {
    std::optional<std::uint64_t> s;
    if (*seed_opt) s = seed;
    return run_file(file, horizon, s, out);
  }

  if (*gen) {
    cantor::ScenarioKind k;
    try {
      k = cantor::parse_kind(kind);
    } catch (const cantor::SchemaError& e) {
      std::cerr << "cantorlab: " << e.what() << '\n';
      return 2;
    }
    for (std::size_t i = 0; i < count; ++i) {
      cantor::Scenario s = cantor::generate_instance(k, seed + i, size);
      s.horizon = horizon;
      out.stream() << cantor::scenario_to_json(s).dump() << '\n';
    }
    return 0;
  }

  int code = 0;
  for (const char* name : {"roundtrip", "capture", "rapidity", "build-slalom",
                           "witness-from-slalom", "certificate", "diagonalize", "closure",
                           "transport", "pipeline", "sigma-union", "catalog"}) {
    cantor::Scenario s = cantor::generate_instance(cantor::parse_kind(name), seed, size);
    s.horizon = horizon;
    const cantor::Report r = cantor::run_scenario(s);
    out.emit(r);
    code = std::max(code, r.exit_code);
  }
  return code;
}
