// End-to-end tests of the command-line binary: exit codes, output goldens,
// and lossless JSON round trips.  The binary path is injected by the build as
// MUBS_CLI_PATH.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mubs/serialize.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(MUBS_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  RunResult r;
  r.out = std::move(out);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("exit code matrix") {
  CHECK(run_cli("gen master --d 3").exit_code == 0);
  CHECK(run_cli("gen w4 --format pretty").exit_code == 0);
  CHECK(run_cli("verify --gen master 6").exit_code == 0);
  CHECK(run_cli("verify --gen alternative 3").exit_code == 0);
  CHECK(run_cli("verify --gen alternative 2").exit_code == 1);
  CHECK(run_cli("help").exit_code == 0);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("pauli --d 4 group-check").exit_code == 0);
  CHECK(run_cli("bounds --d 12").exit_code == 0);

  // usage and parse errors
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("gen master").exit_code == 2);                    // missing --d
  CHECK(run_cli("gen master --d 3 --numeric").exit_code == 2);    // numeric without csv
  CHECK(run_cli("gen master --d 3 --format xml").exit_code == 2); // unknown format
  CHECK(run_cli("verify").exit_code == 2);                        // neither --in nor --gen
  CHECK(run_cli("verify --gen nosuchmethod 3").exit_code == 2);
  CHECK(run_cli("verify --gen gf 3").exit_code == 2);             // wrong arity
  CHECK(run_cli("pauli --d 6 classes").exit_code == 2);           // composite d
  CHECK(run_cli("pauli --d 3 badaction").exit_code == 2);
  CHECK(run_cli("sim dj --f 0,1,1").exit_code == 2);              // not constant or balanced
  CHECK(run_cli("sim teleport --state 1,2,3").exit_code == 2);    // wrong component count
  CHECK(run_cli("sim bloch --state 0,0").exit_code == 2);         // zero state
  CHECK(run_cli("bounds --d 1").exit_code == 2);
}

TEST_CASE("gen gf rejects characteristic two with an odd-prime message") {
  const auto r = run_cli("gen gf --p 2 --m 3", true);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "odd prime"));
}

TEST_CASE("gen pretty output matches the reference typography") {
  const auto r = run_cli("gen master --d 3 --format pretty");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "# ω = exp(2πi/3)"));
  CHECK(contains(r.out, "(|0⟩+|1⟩+|2⟩)/√3"));
  CHECK(contains(r.out, "(ω²|0⟩+ω|1⟩+|2⟩)/√3"));
  CHECK(contains(r.out, "(ω|0⟩+ω²|1⟩+|2⟩)/√3"));
  CHECK(contains(r.out, "B_3 (computational)"));
  CHECK(contains(r.out, "  [0]  |0⟩"));
}

TEST_CASE("gen json output has the documented shape") {
  const auto r = run_cli("gen gr --m 2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == 4);
  CHECK(j["conductor"] == 4);
  CHECK(j["method"] == "gr");
  CHECK(j["normalization"] == "1/sqrt(d)");
  CHECK(j["field"].is_null());
  CHECK(j["ring"]["m"] == 2);
  CHECK(j["ring"]["basic_irreducible"] == nlohmann::json::array({1, 1, 1}));
  REQUIRE(j["bases"].size() == 5);
  CHECK(j["bases"][0]["label"] == "B_0");
  CHECK(j["bases"][4]["kind"] == "computational");

  const auto w = run_cli("gen w4 --format json");
  REQUIRE(w.exit_code == 0);
  const auto jw = nlohmann::json::parse(w.out);
  std::vector<std::string> labels;
  for (const auto& b : jw["bases"]) labels.push_back(b["label"].get<std::string>());
  CHECK(labels == std::vector<std::string>{"W_00", "W_11", "W_01", "W_10", "B_4"});
}

TEST_CASE("gen csv output") {
  const auto r = run_cli("gen master --d 2 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(first_line(r.out) == "# dimension=2 conductor=4 method=master normalization=1/sqrt(d)");
  CHECK(contains(r.out, "basis_label,vector_index,position,exponent\n"));
  CHECK(contains(r.out, "B_1,0,0,1\n"));
  CHECK(contains(r.out, "B_1,1,0,3\n"));

  const auto n = run_cli("gen master --d 2 --format csv --numeric");
  REQUIRE(n.exit_code == 0);
  CHECK(contains(n.out, "basis_label,vector_index,position,re,im\n"));
  CHECK(contains(n.out, "0.70710678118654746"));
}

TEST_CASE("gen --out writes a file and the export round-trips byte-identically") {
  const std::string dir = "/tmp";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"master --d 5", "m5"}, {"alternative --p 3", "a3"}, {"gf --p 3 --m 2", "gf32"},
      {"gr --m 3", "gr3"},    {"w4", "w4"},
  };
  for (const auto& [args, tag] : cases) {
    INFO(args);
    const std::string path = dir + "/mubs_cli_test_" + tag + ".json";
    REQUIRE(run_cli("gen " + args + " --out " + path).exit_code == 0);
    const std::string bytes = slurp(path);
    // import the exported file and re-export: byte-identical
    const mubs::MubSet set = mubs::mub_from_json_string(bytes);
    CHECK(mubs::mub_to_json_string(set) == bytes);
    // the file itself verifies
    CHECK(run_cli("verify --in " + path).exit_code == 0);
    std::remove(path.c_str());
  }
  // generation is deterministic: two runs emit identical bytes
  const auto a = run_cli("gen master --d 5");
  const auto b = run_cli("gen master --d 5");
  CHECK(a.out == b.out);
}

TEST_CASE("verify reports are machine-readable JSON") {
  const auto ok = run_cli("verify --gen gf 3 2 --mode exact");
  REQUIRE(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["verdict"] == "complete");
  CHECK(j["dimension"] == 9);
  CHECK(j["bases"] == 10);
  CHECK(j["mode"] == "exact");
  REQUIRE(j["unbiased"].size() == 45);
  for (const auto& p : j["unbiased"]) CHECK(p["ok"] == true);

  const auto bad = run_cli("verify --gen alternative 2");
  REQUIRE(bad.exit_code == 1);
  const auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["verdict"] == "violation");
  bool found_witness = false;
  for (const auto& p : jb["unbiased"])
    if (p["ok"] == false) {
      found_witness = true;
      CHECK(p["first"] == 0);
      CHECK(p["second"] == 1);
      CHECK(!p["witness"].is_null());
      CHECK(contains(p["witness"]["detail"].get<std::string>(), "expected"));
    }
  CHECK(found_witness);

  const auto fl = run_cli("verify --gen master 7 --mode float --tol 1e-9");
  REQUIRE(fl.exit_code == 0);
  const auto jf = nlohmann::json::parse(fl.out);
  CHECK(jf["mode"] == "float");
  CHECK(jf["tol"] == 1e-9);
  CHECK(jf["verdict"] == "complete");
}

TEST_CASE("verify --in accepts an exported file and rejects corruption") {
  const std::string good = "/tmp/mubs_cli_test_good.json";
  REQUIRE(run_cli("gen gr --m 2 --out " + good).exit_code == 0);
  CHECK(run_cli("verify --in " + good).exit_code == 0);

  const std::string bad = "/tmp/mubs_cli_test_bad.json";
  {
    std::ofstream f(bad, std::ios::binary);
    f << "{\"dimension\": 4, \"broken\"";
  }
  CHECK(run_cli("verify --in " + bad).exit_code == 2);

  // tampered exponent: violation (exit 1), not a parse error
  auto j = nlohmann::json::parse(slurp(good));
  j["bases"][0]["vectors"][0][1] = 1;
  const std::string tampered = "/tmp/mubs_cli_test_tampered.json";
  {
    std::ofstream f(tampered, std::ios::binary);
    f << j.dump(2) << "\n";
  }
  CHECK(run_cli("verify --in " + tampered).exit_code == 1);

  CHECK(run_cli("verify --in /tmp/mubs_cli_test_missing.json").exit_code == 2);
  std::remove(good.c_str());
  std::remove(bad.c_str());
  std::remove(tampered.c_str());
}

TEST_CASE("pauli table output") {
  const auto r = run_cli("pauli --d 2 table");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "U_00 = I"));
  CHECK(contains(r.out, "U_10 = X"));
  CHECK(contains(r.out, "U_01 = Z"));
  CHECK(contains(r.out, "U_11 = Y = XZ"));
  // Y = XZ acts as [[0, -1], [1, 0]]
  CHECK(contains(r.out, "U_11 = Y = XZ\n  [  0 -1 ]\n  [  1  0 ]"));

  const auto r3 = run_cli("pauli --d 3 table");
  REQUIRE(r3.exit_code == 0);
  CHECK(contains(r3.out, "# ω = exp(2πi/3)"));
  CHECK(contains(r3.out, "ω^2"));
}

TEST_CASE("pauli classes output") {
  const auto r = run_cli("pauli --d 5 classes");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "𝒱_0 = {01, 02, 03, 04}"));
  CHECK(contains(r.out, "𝒱_1 = {10, 20, 30, 40}"));
  CHECK(contains(r.out, "𝒱_2 = {11, 22, 33, 44}"));
  CHECK(contains(r.out, "𝒱_3 = {12, 24, 31, 43}"));
  CHECK(contains(r.out, "𝒱_4 = {13, 21, 34, 42}"));
  CHECK(contains(r.out, "𝒱_5 = {14, 23, 32, 41}"));
}

TEST_CASE("pauli group-check output") {
  const auto r = run_cli("pauli --d 3 group-check");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "elements: 27"));
  CHECK(contains(r.out, "closure: ok"));
  CHECK(contains(r.out, "identity and inverses: ok"));
  CHECK(contains(r.out, "associativity: ok"));
  CHECK(contains(r.out, "size 3"));
  CHECK(contains(r.out, "order 27 confirmed"));
}

TEST_CASE("sim dj output") {
  CHECK(first_line(run_cli("sim dj --f 0,1").out) == "balanced");
  CHECK(first_line(run_cli("sim dj --f 1,0").out) == "balanced");
  CHECK(first_line(run_cli("sim dj --f 0,0").out) == "constant");
  CHECK(first_line(run_cli("sim dj --f 1,1").out) == "constant");
  CHECK(first_line(run_cli("sim dj --f 0,1,1,0").out) == "balanced");
  CHECK(first_line(run_cli("sim dj --f 1,1,1,1,1,1,1,1").out) == "constant");
}

TEST_CASE("sim bloch output") {
  CHECK(first_line(run_cli("sim bloch --state 1,0").out) == "(0, 0, 1)");
  CHECK(first_line(run_cli("sim bloch --state 0,1").out) == "(0, 0, -1)");
  CHECK(first_line(run_cli("sim bloch --state 1,1").out) == "(1, 0, 0)");
  CHECK(first_line(run_cli("sim bloch --state 1,-1").out) == "(-1, 0, 0)");
  CHECK(first_line(run_cli("sim bloch --state 1,i").out) == "(0, 1, 0)");
  CHECK(first_line(run_cli("sim bloch --state 1,-i").out) == "(0, -1, 0)");
  // normalization is automatic and phases are parsed
  CHECK(first_line(run_cli("sim bloch --state 3,3i").out) == "(0, 1, 0)");
  CHECK(first_line(run_cli("sim bloch --state 0.6,0.8").out) == "(0.96, 0, -0.28)");
}

TEST_CASE("sim teleport output") {
  const auto r = run_cli("sim teleport --state 0.6,0.8");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "input |ψ⟩ = 0.6|0⟩ + 0.8|1⟩"));
  for (const std::string branch : {"(0, 0)", "(0, 1)", "(1, 0)", "(1, 1)"})
    CHECK(contains(r.out, "branch (m0, m1) = " + branch + ": probability 0.25, fidelity 1"));

  // sampling is deterministic under a fixed seed
  const auto s1 = run_cli("sim teleport --state 1,i --sample --seed 7");
  const auto s2 = run_cli("sim teleport --state 1,i --sample --seed 7");
  CHECK(s1.out == s2.out);
  CHECK(contains(s1.out, "sampled branch (seed 7): ("));
}

TEST_CASE("sim bell output") {
  const auto r = run_cli("sim bell --x 0 --y 1");
  REQUIRE(r.exit_code == 0);
  CHECK(first_line(r.out) == "bell(0, 1) = (|01⟩ + |10⟩)/√2");
  CHECK(contains(r.out, "concurrence: 0.5"));
  CHECK(contains(r.out, "(0, 1): probability 0.5"));
  CHECK(contains(r.out, "(1, 0): probability 0.5"));

  const auto c = run_cli("sim bell --x 0 --y 0 --shots 1024 --seed 7");
  REQUIRE(c.exit_code == 0);
  CHECK(contains(c.out, "counts (shots = 1024, seed = 7):"));
  CHECK(contains(c.out, "(0, 0): 527"));
  CHECK(contains(c.out, "(1, 1): 497"));
}

TEST_CASE("bounds output") {
  const auto b6 = run_cli("bounds --d 6");
  REQUIRE(b6.exit_code == 0);
  CHECK(first_line(b6.out) == "3 ≤ N(6) ≤ 7");
  CHECK(contains(b6.out, "prime power: no (6 = 2 * 3)"));

  const auto b9 = run_cli("bounds --d 9");
  CHECK(first_line(b9.out) == "N(9) = 10");
  CHECK(contains(b9.out, "prime power: yes (9 = 3^2)"));

  CHECK(first_line(run_cli("bounds --d 15").out) == "4 ≤ N(15) ≤ 16");
  CHECK(first_line(run_cli("bounds --d 2").out) == "N(2) = 3");
  CHECK(first_line(run_cli("bounds --d 12").out) == "4 ≤ N(12) ≤ 13");
  CHECK(contains(run_cli("bounds --d 12").out, "prime power: no (12 = 2^2 * 3)"));
}
