#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pellq/checks.hpp"
#include "pellq/cli.hpp"

using nlohmann::ordered_json;
using pellq::cli::run;

namespace {

struct CliOutput {
  int code;
  std::string out;
  std::string err;
};

CliOutput invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("generate renders a table with golden rows") {
  auto r = invoke({"generate", "--max-index", "3", "--eps", "+1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# command=generate max_index=3 eps=+1") != std::string::npos);
  CHECK(r.out.find("239") != std::string::npos);
  CHECK(r.out.find("169") != std::string::npos);
}

TEST_CASE("generate with eps=both emits two rows per index") {
  auto r = invoke({"generate", "--max-index", "0", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,eps,x,t\n0,1,1,1\n0,-1,1,-1\n");
  CHECK(r.err.find("# command=generate") != std::string::npos); // CSV meta on stderr
}

TEST_CASE("generate handles --eps=-1") {
  auto r = invoke({"generate", "--max-index", "1", "--eps=-1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,eps,x,t\n0,-1,1,-1\n1,-1,-1,-1\n");
}

TEST_CASE("generate --verify exits zero on agreement") {
  auto r = invoke({"generate", "--max-index", "20", "--verify"});
  CHECK(r.code == 0);
}

TEST_CASE("json output round-trips byte-identically") {
  for (auto args : {std::vector<std::string>{"generate", "--max-index", "4", "--format", "json"},
                    std::vector<std::string>{"solve", "x^2 = 2y^4 - 1", "--max-index", "10",
                                             "--format", "json"},
                    std::vector<std::string>{"check", "--max-index", "5", "--format", "json"},
                    std::vector<std::string>{"bench", "--max-index", "2", "--repetitions", "1",
                                             "--format", "json"}}) {
    auto r = invoke(args);
    CHECK(r.code == 0);
    ordered_json doc = ordered_json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK(doc["meta"]["version"] == pellq::cli::kVersion);
  }
}

TEST_CASE("json integers are decimal strings") {
  auto r = invoke({"generate", "--max-index", "30", "--eps", "+1", "--format", "json"});
  ordered_json doc = ordered_json::parse(r.out);
  const auto& last = doc["records"].back();
  CHECK(last["x"].is_string());
  CHECK(last["t"].is_string());
  // x_30 overflows 64-bit; value must be exact decimal
  CHECK(last["x"].get<std::string>() == "111760107268250945908601");
  CHECK(last["t"].get<std::string>() == "79026329715516201199301");
}

TEST_CASE("solve dispatches the title equation to the quartic search") {
  auto r = invoke({"solve", "x^2 = 2y^4 - 1", "--max-index", "50", "--format", "json"});
  CHECK(r.code == 0);
  ordered_json doc = ordered_json::parse(r.out);
  CHECK(doc["meta"]["bounds"]["solver"] == "quartic_search");
  CHECK(doc["meta"]["bounds"]["max_index"] == "50");
  REQUIRE(doc["records"].size() == 2);
  CHECK(doc["records"][0]["kind"] == "quartic_solution");
  CHECK(doc["records"][0]["x"] == "1");
  CHECK(doc["records"][0]["y"] == "1");
  CHECK(doc["records"][1]["x"] == "239");
  CHECK(doc["records"][1]["y"] == "13");
}

TEST_CASE("solve dispatches other equations to the general solver") {
  auto r = invoke({"solve", "x^2 = 5y^4 + 1", "--v-bound", "2000", "--format", "json"});
  CHECK(r.code == 0);
  ordered_json doc = ordered_json::parse(r.out);
  CHECK(doc["meta"]["bounds"]["solver"] == "general");
  REQUIRE(doc["records"].size() == 1);
  CHECK(doc["records"][0]["kind"] == "general_solution");
  CHECK(doc["records"][0]["x"] == "9");
  CHECK(doc["records"][0]["y"] == "2");

  auto with_zero = invoke(
      {"solve", "x^2 = 5y^4 + 1", "--v-bound", "2000", "--allow-zero", "--format", "json"});
  ordered_json doc2 = ordered_json::parse(with_zero.out);
  REQUIRE(doc2["records"].size() == 2);
  CHECK(doc2["records"][0]["x"] == "1");
  CHECK(doc2["records"][0]["y"] == "0");
}

TEST_CASE("prefilter flag leaves solve output unchanged") {
  auto off = invoke({"solve", "x^2 = 2y^4 - 1", "--max-index", "200", "--format", "csv"});
  auto on = invoke(
      {"solve", "x^2 = 2y^4 - 1", "--max-index", "200", "--prefilter", "on", "--format", "csv"});
  CHECK(off.code == 0);
  CHECK(on.code == 0);
  CHECK(off.out == on.out);
}

TEST_CASE("solve reports parse errors on exit code 2") {
  auto r = invoke({"solve", "x^3 = 2y^4 - 1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("odd exponent at position 2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"generate", "--no-such-flag"}).code == 2);
  CHECK(invoke({"generate", "--eps", "maybe"}).code == 2);
}

TEST_CASE("check passes and exits zero") {
  auto r = invoke({"check", "--max-index", "30", "--format", "json"});
  CHECK(r.code == 0);
  ordered_json doc = ordered_json::parse(r.out);
  bool saw_agreement = false;
  for (const auto& rec : doc["records"]) {
    CHECK(rec["pass"].is_boolean());
    CHECK(rec["pass"] == true);
    if (rec["check"] == "four_way_agreement")
      saw_agreement = true;
  }
  CHECK(saw_agreement);
}

TEST_CASE("tampered recurrence is caught with the first failing index") {
  auto tampered = [](int eps, std::uint64_t count) {
    std::vector<pellq::PellPair> seq;
    seq.push_back(pellq::seed(eps));
    for (std::uint64_t i = 0; i < count; ++i) {
      const pellq::PellPair& p = seq.back();
      seq.push_back(pellq::PellPair{pellq::BigInt(3) * p.x + pellq::BigInt(4) * p.t,
                                    pellq::BigInt(2) * p.x + pellq::BigInt(4) * p.t, p.n + 1,
                                    p.eps});
    }
    return seq;
  };
  auto results = pellq::run_checks(10, tampered);
  CHECK_FALSE(pellq::all_passed(results));
  bool found = false;
  for (const auto& res : results) {
    if (res.name == "four_way_agreement") {
      CHECK_FALSE(res.pass);
      CHECK(res.detail.find("n=1") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("bench emits samples for every rung and method") {
  auto r = invoke({"bench", "--max-index", "8", "--repetitions", "2", "--format", "json"});
  CHECK(r.code == 0);
  ordered_json doc = ordered_json::parse(r.out);
  // rungs 1, 2, 4, 8, three methods each
  CHECK(doc["records"].size() == 12);
  for (const auto& rec : doc["records"]) {
    CHECK(rec["kind"] == "bench_sample");
    CHECK(rec["min_ns"].is_string());
  }
}

TEST_CASE("table elides huge integers, csv does not") {
  auto table = invoke({"generate", "--max-index", "120", "--eps", "+1"});
  CHECK(table.code == 0);
  CHECK(table.out.find(" digits)...") != std::string::npos);
  auto csv = invoke({"generate", "--max-index", "120", "--eps", "+1", "--format", "csv"});
  CHECK(csv.out.find("digits") == std::string::npos);
  auto json = invoke({"generate", "--max-index", "120", "--eps", "+1", "--format", "json"});
  CHECK(json.out.find("digits") == std::string::npos);
}

TEST_CASE("csv quoting follows RFC 4180") {
  // check reports carry free text; commas and quotes must be quoted
  auto r = invoke({"check", "--max-index", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"") != std::string::npos); // detail cells contain commas
}

TEST_CASE("help exits zero") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"solve", "--help"}).code == 0);
}
