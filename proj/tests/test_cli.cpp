#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
using quasibraid::cli::run;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args, int expected_code = 0) {
  const auto r = invoke(std::move(args));
  REQUIRE(r.code == expected_code);
  return json::parse(r.out);
}

std::string write_tmp(const std::string& name, const std::string& content) {
  const std::string path = std::string(QUASIBRAID_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("envelope fields") {
  const auto j = invoke_json({"tilings", "--seed", "L", "--n", "2"});
  CHECK(j["schema"] == "quasibraid/1");
  CHECK(j["version"].is_string());
  CHECK(j["command"] == "tilings");
  CHECK(j["config"]["seed"] == "L");
  CHECK(j["config"]["n"] == 2);
  CHECK(j["result"]["words"] == json::array({"LLS", "LSL", "SLL"}));
  CHECK(j["result"]["count"] == 3);
  CHECK(j["result"]["fib_n_plus_2"] == "3");
}

TEST_CASE("usage errors exit 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"nonsense"}).code == 1);
  CHECK(invoke({"generate", "--radius", "0"}).code == 1);
  CHECK(invoke({"generate", "--format", "dot"}).code == 1);
  CHECK(invoke({"tilings", "--seed", "X"}).code == 1);
  CHECK(invoke({"compile", "--rep", "rho"}).code == 1);
  CHECK(invoke({"heights"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("generate") {
  const auto j = invoke_json({"generate", "--radius", "50", "--shift", "0.0"});
  const auto& r = j["result"];
  CHECK(r["fibonacci_patch"] == true);
  const std::string word = r["word"];
  CHECK(word.size() + 1 == r["point_count"].get<std::size_t>());
  CHECK(r["count_L"].get<std::size_t>() + r["count_S"].get<std::size_t>() == word.size());
  CHECK(j["config"]["scale"] == 1.0);
}

TEST_CASE("domain errors exit 2 with an error object") {
  const auto j = invoke_json({"generate", "--radius", "40", "--scale", "1.7"}, 2);
  CHECK(j["error"]["code"] == "singular_configuration");
  CHECK_FALSE(j.contains("result"));

  const auto f = invoke_json({"flip", "--word", "LLSL", "--pair", "0"}, 2);
  CHECK(f["error"]["code"] == "flip_undefined");

  const auto h = invoke_json({"heights", "--word", "LXS"}, 2);
  CHECK(h["error"]["code"] == "invalid_argument");

  const auto c = invoke_json({"compile", "--target", "identity", "--max-length", "17"}, 2);
  CHECK(c["error"]["code"] == "budget_exceeded");
}

TEST_CASE("verify") {
  const auto tl = invoke_json({"verify", "--what", "tl", "--qubits", "5", "--tol", "1e-12"});
  CHECK(tl["result"]["report"]["pass"] == true);
  CHECK(invoke({"verify", "--what", "braid", "--qubits", "4", "--root-index", "2"}).code == 0);
  const auto fr = invoke_json({"verify", "--what", "fr"});
  CHECK(fr["result"]["report"]["relations"].size() == 6);
  // A zero tolerance cannot be met by floating-point relations.
  CHECK(invoke({"verify", "--what", "tl", "--qubits", "4", "--tol", "0"}).code == 2);
}

TEST_CASE("bratteli") {
  const auto j = invoke_json({"bratteli", "--levels", "100"});
  const auto& last = j["result"]["levels"].back();
  CHECK(last["paths_L"] == "573147844013817084101");
  CHECK(last["af_d_L"] == last["paths_L"]);

  const auto dot = invoke({"bratteli", "--levels", "4", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("// quasibraid/1", 0) == 0);
  for (const char* label : {"L (1)", "L (2)", "L (3)", "L (5)"}) {
    CHECK(dot.out.find(label) != std::string::npos);
  }
}

TEST_CASE("heights and flip") {
  const auto h = invoke_json({"heights", "--word", "LSLL"});
  CHECK(h["result"]["heights"] == json::array({0, 1, 1}));
  const auto f = invoke_json({"flip", "--word", "LSLL", "--pair", "0"});
  CHECK(f["result"]["flipped"] == "SLLL");
  CHECK(f["result"]["factor"].get<double>() == doctest::Approx(0.3819660112501051));
}

TEST_CASE("compile") {
  const auto j = invoke_json({"compile", "--rep", "fr", "--target", "R", "--max-length", "3"});
  CHECK(j["result"]["word"] == json::parse("[[1, 1]]"));
  CHECK(j["result"]["distance"].get<double>() < 1e-14);

  const auto path = write_tmp("target_identity.json",
                              R"({"dim": 2, "entries": [[1,0],[0,0],[0,0],[1,0]]})");
  const auto bad = invoke_json({"compile", "--target-file", path}, 2);
  CHECK(bad["error"]["code"] == "dimension_mismatch");

  const auto malformed = write_tmp("target_bad.json", "{\"dim\": 2}");
  CHECK(invoke_json({"compile", "--target-file", malformed}, 2)["error"]["code"] == "parse_error");
}

TEST_CASE("simulate") {
  const auto path = write_tmp("circuit.json", "[[[1, 1], [2, -1]], [[2, 1], [1, -1]]]");
  const auto j = invoke_json({"simulate", "--rep", "fr", "--circuit-file", path, "--initial", "3"});
  const auto& st = j["result"]["final_state"];
  REQUIRE(st.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(st[i][0].get<double>() == doctest::Approx(i == 3 ? 1.0 : 0.0));
    CHECK(st[i][1].get<double>() == doctest::Approx(0.0));
  }
  CHECK(j["result"]["norm"].get<double>() == doctest::Approx(1.0));

  const auto rho = invoke_json({"simulate", "--rep", "rho", "--qubits", "3", "--circuit-file", path});
  CHECK(rho["result"]["tiling_labels"].size() == 8);

  const auto bad = write_tmp("circuit_bad.json", "[[[3, 1]]]");
  CHECK(invoke_json({"simulate", "--rep", "fr", "--circuit-file", bad}, 2)["error"]["code"] ==
        "invalid_argument");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"compile", "--rep", "rho", "--qubits", "3", "--target", "gen2",
                                      "--max-length", "4"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto t = invoke({"tilings", "--n", "5", "--format", "text"});
  CHECK(t.out.find("schema: quasibraid/1") != std::string::npos);
}
