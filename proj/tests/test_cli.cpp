#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cantor/filter.hpp"
#include "cantor/scenario.hpp"

using namespace cantor;
using json_io::Json;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("cantorlab_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run cantorlab(const std::string& args) {
  const fs::path out = scratch("stdout.txt");
  const std::string cmd = std::string(CANTORLAB_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out)};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

const char* kExample =
    R"({"kind":"roundtrip","payload":{"partition":[0,4,6,9,14,15,18],"point":"110001001101110010"}})";
const char* kBlocked =
    R"({"kind":"diagonalize","payload":{"a":"1000","aprime":[0],"pieces":[["0000","1000"]],"steps":1}})";

}  // namespace

TEST_CASE("roundtrip scenario on the nat example") {
  const Report r = run_scenario(parse_scenario_line(kExample));
  CHECK(r.exit_code == 0);
  CHECK(r.body["result"]["encoded"] == Json::parse("[12,1,1,23,0,2]"));
}

TEST_CASE("roundtrip scenario on the bin example") {
  const Report r = run_scenario(parse_scenario_line(
      R"({"kind":"roundtrip","payload":{"deltas":[4,2,3,5,1,3],"sequence":[12,5,5,15,42,2]}})"));
  // 42 does not fit one bit, so the sequence does not survive the round trip.
  CHECK(r.exit_code == 1);
  CHECK(r.body["result"]["decoded"] == "110001101011110010");
  CHECK(r.body["result"]["slices"] ==
        Json::parse(R"(["1100","01","101","01111","0","010"])"));
  CHECK(r.body["result"]["range_bounded"] == false);
}

TEST_CASE("blocked diagonalization exits 1") {
  const Report r = run_scenario(parse_scenario_line(kBlocked));
  CHECK(r.exit_code == 1);
  CHECK(r.body["result"]["blocked"]["stage"] == 0);
  CHECK(r.body["result"]["blocked"]["position"] == 0);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_scenario_line("not json"), SchemaError);
  CHECK_THROWS_AS(parse_scenario_line(R"({"kind":"nope","payload":{}})"), SchemaError);
  CHECK_THROWS_AS(parse_scenario_line(R"({"kind":"roundtrip"})"), SchemaError);
  CHECK_THROWS_AS(parse_scenario_line(R"({"kind":"roundtrip","payload":{},"extra":1})"), SchemaError);
  CHECK_THROWS_AS(parse_kind("unknown"), SchemaError);
  // A word longer than the declared horizon.
  CHECK_THROWS_AS(parse_scenario_line(
                      R"({"kind":"roundtrip","horizon":4,"payload":{"partition":[0,2,5],"point":"10101"}})"),
                  SchemaError);

  Report r = run_scenario(parse_scenario_line(R"({"kind":"roundtrip","payload":{"partition":[1,2]}})"));
  CHECK(r.exit_code == 2);
  r = run_scenario(parse_scenario_line(R"({"kind":"certificate","payload":{"subject":["01"]}})"));
  CHECK(r.exit_code == 2);
  r = run_scenario(parse_scenario_line(
      R"({"kind":"roundtrip","payload":{"partition":[0,2],"point":"0a"}})"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("hypothesis failures exit 1 with the failing index") {
  const Report r = run_scenario(parse_scenario_line(
      R"({"kind":"build-slalom","payload":{"partition":[0,1,2,3],"pieces":[],"witness":[1]}})"));
  CHECK(r.exit_code == 1);
  CHECK(r.body["error"]["type"] == "hypothesis");
  CHECK(r.body["error"]["index"] == 2);
}

TEST_CASE("generated instances") {
  for (int k = 0; k < 12; ++k) {
    const auto kind = static_cast<ScenarioKind>(k);
    CHECK(parse_kind(kind_name(kind)) == kind);
    const Scenario a = generate_instance(kind, 7, 6);
    const Scenario b = generate_instance(kind, 7, 6);
    CHECK(scenario_to_json(a).dump() == scenario_to_json(b).dump());
    CHECK(run_scenario(a).body.dump() == run_scenario(b).body.dump());
    // Generated payloads parse back through the schema.
    const Scenario again = parse_scenario(scenario_to_json(a));
    CHECK(again.payload == a.payload);
    const Report zero = run_scenario(generate_instance(kind, 3, 0));
    CHECK(zero.exit_code != 2);
  }

  const Report built = run_scenario(generate_instance(ScenarioKind::kBuildSlalom, 0, 8));
  CHECK(built.exit_code != 2);
  CHECK_FALSE(built.body.contains("error"));
  CHECK(built.body["result"]["preconditions"] == true);
}

TEST_CASE("reported certificates re-validate") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Scenario s = generate_instance(ScenarioKind::kTransport, seed, 6);
    const Report r = run_scenario(s);
    REQUIRE(r.exit_code == 0);
    const FilterCertificate c = json_io::read_certificate(r.body["result"]["prepended"], "prepended");
    CHECK(check_certificate(c).ok());
  }
}

TEST_CASE("cantorlab run") {
  const fs::path file = scratch("scenarios.jsonl");
  write_file(file, std::string(kExample) + "\n\n" + kBlocked + "\n{broken\n");
  Run r = cantorlab("run " + file.string());
  CHECK(r.code == 2);
  auto reports = lines(r.out);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0]["kind"] == "roundtrip");
  CHECK(reports[0]["result"]["encoded"] == Json::parse("[12,1,1,23,0,2]"));
  CHECK(reports[1]["kind"] == "diagonalize");
  CHECK(reports[2]["status"] == "invalid");

  write_file(file, std::string(kExample) + "\n" + kBlocked + "\n");
  r = cantorlab("run " + file.string());
  CHECK(r.code == 1);

  write_file(file, std::string(kExample) + "\n");
  r = cantorlab("run " + file.string());
  CHECK(r.code == 0);
  const Run again = cantorlab("run " + file.string());
  CHECK(again.out == r.out);

  r = cantorlab("--format text run " + file.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("roundtrip: ok") != std::string::npos);

  const fs::path out = scratch("reports.jsonl");
  r = cantorlab("--out " + out.string() + " run " + file.string());
  CHECK(r.code == 0);
  CHECK(lines(read_file(out)).size() == 1);

  // Horizon flag applies to records without their own horizon.
  r = cantorlab("--horizon 10 run " + file.string());
  CHECK(r.code == 2);
}

TEST_CASE("cantorlab empty file") {
  const fs::path file = scratch("empty.jsonl");
  write_file(file, "");
  CHECK(cantorlab("run " + file.string()).code == 2);
  write_file(file, "\n  \n");
  CHECK(cantorlab("run " + file.string()).code == 2);
  CHECK(cantorlab("run " + scratch("missing.jsonl").string()).code == 2);
}

TEST_CASE("cantorlab gen and suite") {
  Run r = cantorlab("--seed 0 gen --kind build-slalom --size 8");
  REQUIRE(r.code == 0);
  const Run same = cantorlab("--seed 0 gen --kind build-slalom --size 8");
  CHECK(same.out == r.out);
  const fs::path file = scratch("generated.jsonl");
  write_file(file, r.out);
  const Run ran = cantorlab("run " + file.string());
  auto reports = lines(ran.out);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["result"]["preconditions"] == true);

  CHECK(cantorlab("gen --kind nonsense").code == 2);
  CHECK(cantorlab("--format xml gen --kind capture").code == 2);
  CHECK(cantorlab("").code == 2);

  r = cantorlab("--seed 5 gen --kind pipeline --size 3 --count 3");
  CHECK(lines(r.out).size() == 3);

  // Seeded records without a payload are generated on the fly.
  write_file(file, R"({"kind":"sigma-union","seed":4,"size":5})""\n");
  r = cantorlab("run " + file.string());
  CHECK(r.code == 0);

  r = cantorlab("--seed 1 suite --size 4");
  CHECK(lines(r.out).size() == 12);
  CHECK(r.code != 2);
}
