#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cantor/error.hpp"
#include "cantor/json_io.hpp"

namespace cantor {

enum class ScenarioKind {
  kRoundtrip,
  kCapture,
  kRapidity,
  kBuildSlalom,
  kWitnessFromSlalom,
  kCertificate,
  kDiagonalize,
  kClosure,
  kTransport,
  kPipeline,
  kSigmaUnion,
  kCatalog,
};

/// Malformed scenario record. Maps to exit code 2.
class SchemaError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Throws SchemaError for an unknown name.
ScenarioKind parse_kind(std::string_view name);
std::string_view kind_name(ScenarioKind kind);

struct Scenario {
  ScenarioKind kind = ScenarioKind::kRoundtrip;
  json_io::Json payload = json_io::Json::object();
  std::optional<std::uint64_t> seed;
  /// Upper bound on every word length and partition horizon in the payload.
  std::optional<std::uint64_t> horizon;
};

/// One scenario record: {"kind", "payload"?, "seed"?, "horizon"?, "size"?}.
/// Without a payload the record must carry a seed, and the payload is
/// generated from (kind, seed, size) with size defaulting to 8.
Scenario parse_scenario(const json_io::Json& record);
Scenario parse_scenario_line(std::string_view line);
json_io::Json scenario_to_json(const Scenario& s);

struct Report {
  /// 0 success, 1 verdict failure or failed construction, 2 malformed input.
  int exit_code = 0;
  json_io::Json body;
};

/// Never throws: every error becomes a report with the matching exit code.
Report run_scenario(const Scenario& s);

/// Seed-stable random instance of the kind; size 0 gives a minimal instance.
Scenario generate_instance(ScenarioKind kind, std::uint64_t seed, std::size_t size);

/// Human-readable rendering: a status line followed by one line per field.
std::string render_text(const Report& r);

}  // namespace cantor
