#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace tlbasis {

struct CheckReport {
  std::string name;
  std::string description;
  int n = 0;                  // highest rank covered; ranks 1..n are all run
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  nlohmann::json failures = nlohmann::json::array();  // first counterexamples, inputs and both sides
  nlohmann::json data;                                 // recorded values, null when unused
  std::chrono::duration<double> elapsed{};

  bool passed() const noexcept { return failure_count == 0; }
};

struct CheckInfo {
  std::string name;
  std::string description;
  int default_n;    // ranks above this are not run
  int fixed_n = 0;  // nonzero: runs at exactly this rank, skipped when n_max is smaller
};

const std::vector<CheckInfo>& check_catalog();

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t max_failures_recorded = 16;
};

// Throws PreconditionError unless 1 <= n_max <= 8 and every selected name exists.
// An empty selection runs the whole catalog. Reports come back in catalog order.
std::vector<CheckReport> run_all(int n_max, const std::vector<std::string>& selection = {},
                                 const VerifyOptions& options = {});
CheckReport run_check(const std::string& name, int n_max, const VerifyOptions& options = {});
bool all_passed(const std::vector<CheckReport>& reports);

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const std::vector<CheckReport>& reports);

}  // namespace tlbasis
