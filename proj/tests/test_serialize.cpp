#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "mubs/serialize.hpp"

using namespace mubs;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("json layout") {
  const json j = mub_to_json(mub_gr(1));
  REQUIRE(j.at("dimension") == 2);
  REQUIRE(j.at("conductor") == 4);
  REQUIRE(j.at("method") == "gr");
  REQUIRE(j.at("normalization") == "1/sqrt(d)");
  REQUIRE(j.at("field").is_null());
  REQUIRE(j.at("ring").at("m") == 1);
  REQUIRE(j.at("ring").at("basic_irreducible") == json::array({3, 1}));
  REQUIRE(j.at("bases").size() == 3);
  REQUIRE(j.at("bases")[0].at("label") == "B_0");
  REQUIRE(j.at("bases")[0].at("kind") == "phase");
  REQUIRE(j.at("bases")[1].at("vectors") == json::array({json::array({0, 1}), json::array({0, 3})}));
  REQUIRE(j.at("bases")[2].at("kind") == "computational");
  REQUIRE(j.at("bases")[2].at("vectors") == json::array({json::array({0}), json::array({1})}));

  const json f = mub_to_json(mub_gf(3, 2));
  REQUIRE(f.at("ring").is_null());
  REQUIRE(f.at("field").at("p") == 3);
  REQUIRE(f.at("field").at("m") == 2);
  REQUIRE(f.at("field").at("modulus") == json::array({1, 0, 1}));
}

TEST_CASE("json round trips are byte-identical and verify identically") {
  for (const MubSet& set :
       {mub_master(5), mub_master(6), mub_alternative(2), mub_gf(3, 2), mub_gr(2), mub_w4()}) {
    INFO("method " << method_name(set.method) << ", d = " << set.dimension);
    const std::string once = mub_to_json_string(set);
    const MubSet back = mub_from_json_string(once);
    REQUIRE(mub_to_json_string(back) == once);
    REQUIRE(back.dimension == set.dimension);
    REQUIRE(back.conductor == set.conductor);
    REQUIRE(back.method == set.method);
    REQUIRE(back.completeness_claimed == set.completeness_claimed);
    REQUIRE(back.claimed_pairs == set.claimed_pairs);
    REQUIRE(back.field == set.field);
    REQUIRE(back.ring == set.ring);
    REQUIRE(check_mub_set(back).verdict == check_mub_set(set).verdict);
    for (size_t b = 0; b < set.bases.size(); ++b) {
      REQUIRE(back.bases[b].label == set.bases[b].label);
      REQUIRE(back.bases[b].vectors == set.bases[b].vectors);
    }
  }
}

TEST_CASE("json schema violations are rejected") {
  const json good = mub_to_json(mub_gr(1));
  auto expect_reject = [](json j) {
    REQUIRE_THROWS_AS(mub_from_json(j), std::invalid_argument);
  };

  SECTION("not an object") { expect_reject(json::array()); }
  SECTION("unknown top-level key") {
    json j = good;
    j["extra"] = 1;
    expect_reject(j);
  }
  SECTION("missing key") {
    json j = good;
    j.erase("ring");
    expect_reject(j);
  }
  SECTION("bad method") {
    json j = good;
    j["method"] = "qft";
    expect_reject(j);
  }
  SECTION("bad normalization") {
    json j = good;
    j["normalization"] = "1/d";
    expect_reject(j);
  }
  SECTION("dimension too small") {
    json j = good;
    j["dimension"] = 1;
    expect_reject(j);
  }
  SECTION("non-integer dimension") {
    json j = good;
    j["dimension"] = 2.5;
    expect_reject(j);
  }
  SECTION("ring metadata with a non-ring method") {
    json j = good;
    j["method"] = "master";
    expect_reject(j);
  }
  SECTION("gf method without field metadata") {
    json j = mub_to_json(mub_gf(3, 2));
    j["field"] = nullptr;
    expect_reject(j);
  }
  SECTION("unknown basis key") {
    json j = good;
    j["bases"][0]["color"] = "red";
    expect_reject(j);
  }
  SECTION("bad kind") {
    json j = good;
    j["bases"][0]["kind"] = "weird";
    expect_reject(j);
  }
  SECTION("wrong vector count") {
    json j = good;
    j["bases"][0]["vectors"].erase(1);
    expect_reject(j);
  }
  SECTION("phase vector with wrong length") {
    json j = good;
    j["bases"][0]["vectors"][0] = json::array({0, 0, 0});
    expect_reject(j);
  }
  SECTION("exponent out of range") {
    json j = good;
    j["bases"][0]["vectors"][0] = json::array({0, 4});
    expect_reject(j);
  }
  SECTION("negative exponent") {
    json j = good;
    j["bases"][0]["vectors"][0] = json::array({0, -1});
    expect_reject(j);
  }
  SECTION("computational vector with two entries") {
    json j = good;
    j["bases"][2]["vectors"][0] = json::array({0, 1});
    expect_reject(j);
  }
  SECTION("empty bases") {
    json j = good;
    j["bases"] = json::array();
    expect_reject(j);
  }
  SECTION("unparsable text") {
    REQUIRE_THROWS_AS(mub_from_json_string("{not json"), std::invalid_argument);
  }
}

TEST_CASE("csv golden, exponent mode") {
  const std::string expected =
      "# dimension=2 conductor=4 method=master normalization=1/sqrt(d)\n"
      "basis_label,vector_index,position,exponent\n"
      "B_0,0,0,0\n"
      "B_0,0,1,0\n"
      "B_0,1,0,2\n"
      "B_0,1,1,0\n"
      "B_1,0,0,1\n"
      "B_1,0,1,0\n"
      "B_1,1,0,3\n"
      "B_1,1,1,0\n"
      "B_2,0,0,0\n"
      "B_2,1,1,0\n";
  REQUIRE(mub_to_csv(mub_master(2)) == expected);
}

TEST_CASE("csv numeric mode") {
  const auto rows = lines(mub_to_csv(mub_master(2), true));
  REQUIRE(rows[0] == "# dimension=2 conductor=4 method=master normalization=1/sqrt(d)");
  REQUIRE(rows[1] == "basis_label,vector_index,position,re,im");
  // B_1 vector 0 position 0 has amplitude i/sqrt(2).
  const std::string& row = rows[6];
  REQUIRE(row.substr(0, 8) == "B_1,0,0,");
  std::istringstream is(row.substr(8));
  double re = 0.0, im = 0.0;
  char comma = 0;
  is >> re >> comma >> im;
  REQUIRE(re == Catch::Approx(0.0).margin(1e-15));
  REQUIRE(im == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  // Computational rows carry the numeric amplitude 1, 0.
  REQUIRE(rows.back() == "B_2,1,1,1,0");
  // Full-resolution doubles round-trip: a parsed value re-prints identically.
  std::ostringstream os;
  os << std::setprecision(17) << im;
  REQUIRE(row.find(os.str()) != std::string::npos);
}

TEST_CASE("pretty rendering, third roots") {
  const std::string text = mub_to_pretty(mub_master(3));
  const auto rows = lines(text);
  REQUIRE(rows[0] == "# method master, dimension 3, 4 bases, conductor 6");
  REQUIRE(rows[1] == "# ω = exp(2πi/3)");
  REQUIRE(text.find("(ω²|0⟩+ω|1⟩+|2⟩)/√3") != std::string::npos);
  REQUIRE(text.find("B_3 (computational)") != std::string::npos);
  REQUIRE(text.find("  [0]  |0⟩") != std::string::npos);
}

TEST_CASE("pretty rendering, fourth roots use i") {
  const std::string text = mub_to_pretty(mub_master(2));
  REQUIRE(text.find("exp(2πi") == std::string::npos);  // no omega header needed
  REQUIRE(text.find("(|0⟩+|1⟩)/√2") != std::string::npos);
  REQUIRE(text.find("(-|0⟩+|1⟩)/√2") != std::string::npos);
  REQUIRE(text.find("(i|0⟩+|1⟩)/√2") != std::string::npos);
  REQUIRE(text.find("(-i|0⟩+|1⟩)/√2") != std::string::npos);

  // The d = 4 W tables collapse from eighth to fourth roots the same way.
  const std::string w = mub_to_pretty(mub_w4());
  REQUIRE(w.find("# method w4, dimension 4, 5 bases, conductor 8") != std::string::npos);
  REQUIRE(w.find("(|0⟩-i|1⟩-|2⟩-i|3⟩)/√4") != std::string::npos);  // W_10 vector 0
}

TEST_CASE("report json") {
  const json ok = report_to_json(check_mub_set(mub_master(3)));
  REQUIRE(ok.at("dimension") == 3);
  REQUIRE(ok.at("bases") == 4);
  REQUIRE(ok.at("mode") == "exact");
  REQUIRE(ok.at("verdict") == "complete");
  REQUIRE(ok.at("completeness_claimed") == true);
  REQUIRE(ok.at("orthonormal").size() == 4);
  REQUIRE(ok.at("unbiased").size() == 6);
  for (const auto& b : ok.at("orthonormal")) {
    REQUIRE(b.at("ok") == true);
    REQUIRE(b.at("witness").is_null());
  }

  const json bad = report_to_json(check_mub_set(mub_alternative(2)));
  REQUIRE(bad.at("verdict") == "violation");
  bool saw_witness = false;
  for (const auto& p : bad.at("unbiased"))
    if (p.at("ok") == false) {
      REQUIRE(p.at("witness").is_object());
      REQUIRE(p.at("witness").contains("detail"));
      saw_witness = true;
    }
  REQUIRE(saw_witness);

  CheckOptions fopts;
  fopts.mode = CheckMode::Float;
  fopts.tol = 1e-9;
  const json fl = report_to_json(check_mub_set(mub_master(3), fopts));
  REQUIRE(fl.at("mode") == "float");
  REQUIRE(fl.at("tol") == 1e-9);
}
