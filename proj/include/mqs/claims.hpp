#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mqs/transfer.hpp"

namespace mqs {

/// One verified claim point. Every pass/fail carries the numeric metric
/// that produced it; "measured" marks claims the source material asserts
/// without proof, reported empirically instead of gated.
struct ClaimResult {
  std::string id;
  std::map<std::string, double> params;
  std::string status;  // "pass" | "fail" | "measured"
  double metric = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct SweepConfig {
  int n_min = 2;
  int n_max = 6;
  std::string k_policy = "closed-form";  // or "exhaustive-window"
  std::vector<int> trotter_list{4, 8, 16, 32};
  std::uint64_t seed = 12345;
  std::map<std::string, double> tolerance_overrides;
  double tolerance_scale = 1.0;  // multiplies defaults; overrides win
  int workers = 0;               // 0: hardware concurrency
  bool counts_only = false;
  int count_n_max = 20;
};

std::vector<ClaimResult> run_claims_suite(const SweepConfig& config);

/// Literal four-term expansion of the selective-rotation conjugation
/// identity; matches U_o A U_o^{-1} for U_o = prod C_k(theta_k).
Matrix selective_conjugation_expansion(const Matrix& a, const std::vector<Index>& positions,
                      const std::vector<double>& angles);

struct TrotterFit {
  double slope = 0.0;
  double intercept = 0.0;
  bool exact = false;  // every distance sat below the floor
  int used_points = 0;
  std::vector<double> distances;
};

/// Distances of the synthesized U_pm to the dense oracle over the L list,
/// fitted log-log. Distances under 1e-12 are floor noise and excluded.
TrotterFit trotter_convergence(const TransferSpec& spec,
                               const std::vector<int>& trotter_list);

std::string to_json_line(const ClaimResult& r);
std::string report_to_jsonl(const std::vector<ClaimResult>& rs);
SweepConfig config_from_json(const std::string& text);

/// True when no result carries a "fail" status.
bool all_passed(const std::vector<ClaimResult>& rs);

}  // namespace mqs
