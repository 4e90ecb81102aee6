#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/constructions.hpp"
#include "hyperspec/report_json.hpp"

namespace hyperspec::verify {

struct Config {
  std::vector<std::string> theorems;  // empty selects every suite
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t n_max = 12;
  std::size_t m_max = 12;
  SizeRange sizes{2, 4};
  std::optional<std::size_t> k;
};

struct Counterexample {
  std::size_t trial = 0;
  std::string detail;
  std::string hg;
};

struct Result {
  std::string id;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Instances drawn but outside the theorem's hypothesis.
  std::size_t skipped = 0;
  /// True when the suite measures a quantity instead of asserting it.
  bool report_only = false;
  std::vector<Counterexample> counterexamples;
  Json details = Json::object();

  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

/// Runs one suite; throws Error{bad_params} for an unknown id.
Result run(const std::string& id, const Config& config);

Json to_json(const Result& result);

}  // namespace hyperspec::verify
