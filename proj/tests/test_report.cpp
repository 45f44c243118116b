#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "operadforge/prime_field.hpp"
#include "operadforge/report.hpp"

using namespace operadforge;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg = SuiteConfig::defaults();
  cfg.exact_cap = 3;
  cfg.modular_cap = 3;
  cfg.primes = default_rank_primes();
  // trim the samples to keep the run quick
  cfg.samples = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}};
  cfg.h_samples = {Rat(1)};
  cfg.gv_h_samples = {Rat(1)};
  return cfg;
}

}  // namespace

TEST_CASE("claim ids are unique and every criterion is represented") {
  Report rep = run_suite(small_config());
  std::set<std::string> ids;
  std::set<int> criteria;
  for (const auto& c : rep.claims) {
    CHECK(ids.insert(c.id).second);
    criteria.insert(c.criterion);
    CHECK((c.status == "pass" || c.status == "fail" || c.status == "skip"));
  }
  for (int k = 1; k <= 13; ++k) CHECK(criteria.count(k) == 1);
}

TEST_CASE("reduced caps mark higher arities as skipped") {
  Report rep = run_suite(small_config());
  bool found_skip = false;
  for (const auto& c : rep.claims) {
    if (c.id.find(".n4.") != std::string::npos || c.id.rfind(".n4") == c.id.size() - 3) {
      if (c.id.rfind("dim.", 0) == 0 || c.id.rfind("species.", 0) == 0 ||
          c.id.rfind("char.", 0) == 0) {
        CHECK(c.status == "skip");
        found_skip = true;
      }
    }
    if (c.id.find(".n5.") != std::string::npos) CHECK(c.status == "skip");
  }
  CHECK(found_skip);
}

TEST_CASE("report is deterministic") {
  SuiteConfig cfg = small_config();
  Report a = run_suite(cfg);
  Report b = run_suite(cfg);
  CHECK(a.to_json(false) == b.to_json(false));
}

TEST_CASE("criterion lines cover all thirteen criteria") {
  Report rep = run_suite(small_config());
  auto lines = rep.criterion_lines();
  REQUIRE(lines.size() == 13);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    CAPTURE(lines[k]);
    CHECK(lines[k].find("criterion " + std::to_string(k + 1)) != std::string::npos);
  }
}

TEST_CASE("config parsing and validation") {
  auto cfg = SuiteConfig::from_json_text(R"({
    "samples": [["0", "0"], ["1", "1"]],
    "h_samples": ["1", "5/3"],
    "exact_cap": 3,
    "modular_cap": 3,
    "out": "r.json"
  })");
  CHECK(cfg.samples.size() == 2);
  CHECK(cfg.h_samples[1] == Rat(5, 3));
  CHECK(cfg.out_path == "r.json");

  CHECK_THROWS_AS(SuiteConfig::from_json_text(R"({"exact_cap": 5, "modular_cap": 4})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(SuiteConfig::from_json_text(R"({"exact_cap": 3, "modular_cap": 5,
    "primes": [2147483659]})"),
                  std::invalid_argument);
}
