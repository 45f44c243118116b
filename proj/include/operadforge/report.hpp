#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "operadforge/param_poly.hpp"

namespace operadforge {

struct SuiteConfig {
  // parameter samples (h1, h2) for the two-parameter presets
  std::vector<std::pair<Rat, Rat>> samples = {
      {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(2), Rat(-3)}};
  // single-parameter samples for ll / gv
  std::vector<Rat> h_samples = {Rat(0), Rat(1), Rat(5, 3)};
  std::vector<Rat> gv_h_samples = {Rat(1), Rat(2)};
  int exact_cap = 4;
  int modular_cap = 5;
  std::vector<std::uint64_t> primes;
  std::string out_path = "report.json";

  static SuiteConfig defaults();
  static SuiteConfig from_json_text(const std::string& text);
  void validate() const;
};

struct ClaimRecord {
  std::string id;
  int criterion = 0;
  std::string inputs;
  std::string expected;
  std::string computed;
  std::string status;  // pass | fail | skip
  long elapsed_ms = 0;
};

struct Report {
  std::string schema_version = "1";
  std::vector<ClaimRecord> claims;  // sorted by id

  bool all_pass() const;
  // Deterministic given config and presets; elapsed fields are excluded when
  // include_elapsed is false (the byte-identical comparison mode).
  std::string to_json(bool include_elapsed = true) const;

  // One line per acceptance criterion, pass/fail plus the failing claim ids.
  std::vector<std::string> criterion_lines() const;
};

Report run_suite(const SuiteConfig& config);

}  // namespace operadforge
