#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hpineq::harness {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitBudget = 3 };

enum class ReportFormat { kJson, kCsv };

struct ViolationRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string inputs_digest;
  std::string metric;  // "minEigenvalue" or "margin"
  double value = 0.0;
  double scale = 1.0;
  std::string detail;                      // e.g. convex function name
  std::optional<nlohmann::ordered_json> inputs;
};

struct TrialReport {
  std::string command;
  std::string family;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::size_t trials = 0;
  std::size_t evaluations = 0;  // certificates/margins computed (trials x variants)
  std::vector<ViolationRecord> violations;
  std::optional<double> min_margin;         // over every evaluation
  std::optional<double> min_scaled_margin;  // margin / max(1, scale)
  std::size_t equality_cases = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::int64_t runtime_ms = 0;
  std::vector<std::string> interpretation_flags;

  void record_margin(double margin, double scale);
};

nlohmann::ordered_json to_json(const TrialReport& r);
// Flattened "key,value" rows with the same numeric text as the JSON form.
std::string to_csv(const TrialReport& r);
std::string render(const TrialReport& r, ReportFormat format);

// FNV-1a over the raw bytes of the doubles, as 16 hex digits.
std::string digest(const std::vector<double>& values);

}  // namespace hpineq::harness
