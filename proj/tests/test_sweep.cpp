#include <doctest.h>

#include <regex>

#include "cyclomat/errors.hpp"
#include "cyclomat/sweep.hpp"

using namespace cyclomat;
using nlohmann::json;

namespace {

// Zero every "elapsed_ms" field so two runs can be compared byte for byte.
void strip_elapsed(json& j) {
  if (j.is_object()) {
    if (j.contains("elapsed_ms")) j["elapsed_ms"] = 0;
    for (auto& [_, v] : j.items()) strip_elapsed(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_elapsed(v);
  }
}

}  // namespace

TEST_CASE("config parsing and validation") {
  const auto ok = SweepConfig::from_json(json::parse(R"({"q_min": 5, "q_max": 31, "claims": ["thm1.i"],
      "congruences": [{"modulus": 4, "residue": 3}], "r": [1, 2], "backend": "exact",
      "precision_bits": 128, "parallelism": 2, "format": "csv", "output": "out.csv"})"));
  CHECK(ok.q_min == 5);
  CHECK(ok.backend == Backend::exact);
  CHECK(ok.r == std::vector<std::int64_t>{1, 2});
  CHECK(sweep_moduli(ok) == std::vector<std::uint32_t>{7, 11, 19, 23, 27, 31});
  CHECK(!SweepConfig::from_json(json::parse(R"({"claims": ["eq1.1"], "r": "all"})")).r.has_value());

  const char* bad[] = {
      R"({"claims": ["thm1.i"], "colour": 1})",
      R"({"claims": []})",
      R"({})",
      R"({"claims": ["thm9"]})",
      R"({"claims": ["thm1.i"], "q_min": 40, "q_max": 30})",
      R"({"claims": ["thm1.i"], "precision_bits": 52})",
      R"({"claims": ["thm1.i"], "format": "xml"})",
      R"({"claims": ["thm1.i"], "backend": "fast"})",
      R"({"claims": ["thm1.i"], "r": "some"})",
      R"({"claims": ["thm1.i"], "q_max": "many"})",
      R"({"claims": ["thm1.i"], "congruences": [{"modulus": 4, "residue": 4}]})",
      R"({"claims": ["thm1.i"], "congruences": [{"modulus": 4, "residue": 1, "x": 0}]})",
      R"([1, 2])",
  };
  for (const char* text : bad) CHECK_THROWS_AS(SweepConfig::from_json(json::parse(text)), InvalidParameter);
}

TEST_CASE("sweep moduli are the odd prime powers in range") {
  SweepConfig c;
  c.claims = {"eq1.1"};
  c.q_min = 1;
  c.q_max = 50;
  CHECK(sweep_moduli(c) ==
        std::vector<std::uint32_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49});
  c.congruences = {{8, 5}};
  CHECK(sweep_moduli(c) == std::vector<std::uint32_t>{5, 13, 29, 37});
}

TEST_CASE("sweep output is deterministic and independent of parallelism") {
  SweepConfig c;
  c.q_min = 3;
  c.q_max = 23;
  c.claims = {"thm1.i", "thm2", "thm1.ii", "eq1.1", "mordell", "eigen.M"};
  c.parallelism = 1;
  const auto a = run_sweep(c);
  c.parallelism = 4;
  const auto b = run_sweep(c);
  json ja = sweep_json(c, a), jb = sweep_json(c, b);
  strip_elapsed(ja);
  strip_elapsed(jb);
  CHECK(ja.dump() == jb.dump());
  CHECK(a.summary.fail == 0);
  CHECK(a.summary.pass > 0);
  CHECK(a.summary.skipped > 0);
  CHECK(ja.contains("version"));
  CHECK(ja["summary"]["pass"] == a.summary.pass);

  const std::string csv = sweep_csv(a);
  CHECK(csv.rfind("claim_id,p,n,q,k,r,status,backend,lhs_hash,rhs_hash,elapsed_ms\n", 0) == 0);
  const std::regex row(R"(^[a-zA-Z0-9_.]+,\d*,\d*,\d*,\d*,\d*,(pass|fail|skipped),(exact|numeric|both),[0-9a-f]{16},[0-9a-f]{16},\d+\.\d{3}$)");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    CHECK_MESSAGE(std::regex_match(line, row), line);
    ++rows;
  }
  CHECK(rows == a.reports.size());
  CHECK(sweep_text(a).find("summary:") != std::string::npos);
}

TEST_CASE("claims enumerate their parameters") {
  const auto f7 = FiniteField::make(7, 1);
  ClaimArgs args;
  CHECK(run_claim("thm1.i", f7, args).size() == 5);
  CHECK(run_claim("lemma3.1", f7, args).size() == 5 * 6);
  CHECK(run_claim("eq1.2", f7, args).size() == 5);
  CHECK(run_claim("eq1.2", FiniteField::make(3, 2), args).front().status == Status::skipped);
  args.r = std::vector<std::int64_t>{2};
  const auto one = run_claim("thm1.i", f7, args);
  REQUIRE(one.size() == 1);
  CHECK(one.front().parameters.at("r") == 2);
  CHECK_THROWS_AS(run_claim("nonsense", f7, args), InvalidParameter);
  CHECK(value_hash(json(1)) != value_hash(json(2)));
  CHECK(value_hash(json::parse(R"({"a":1})")).size() == 16);
}
