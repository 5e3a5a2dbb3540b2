#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symleib/scalar.hpp"

namespace symleib {

struct RunConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  double eps_num = kDefaultEpsNum;
  double eps_fd = kDefaultEpsFd;
  std::size_t grid_budget = 60000;     // tuples per exhaustive rack-axiom grid
  std::size_t medial_budget = 400000;  // tuples per mediality / absorption grid
};

// "pass", "fail", "discrepancy" (the library ran cleanly and found that a
// stated result does not hold), or "incomplete" (no violation, but the
// required coverage was not reached within the budget).
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string status;
  std::string summary;
  nlohmann::json details;
  double seconds = 0.0;        // wall time; never serialised
  double limit_seconds = 0.0;  // 0 = no runtime limit
  bool within_limit() const { return limit_seconds <= 0.0 || seconds <= limit_seconds; }
};

CriterionResult criterion_catalog(const RunConfig& cfg);            // 1
CriterionResult criterion_prop31(const RunConfig& cfg);             // 2
CriterionResult criterion_normal_form(const RunConfig& cfg);        // 3
CriterionResult criterion_rack_axioms(const RunConfig& cfg);        // 4
CriterionResult criterion_closed_forms(const RunConfig& cfg);       // 5
CriterionResult criterion_tangent(const RunConfig& cfg);            // 6
CriterionResult criterion_quasi_triviality(const RunConfig& cfg);   // 7
CriterionResult criterion_mediality(const RunConfig& cfg);          // 8
CriterionResult criterion_reference_quandles(const RunConfig& cfg); // 9

// Criteria 1-9 in order; `progress` is called after each one.
std::vector<CriterionResult> run_criteria(const RunConfig& cfg,
                                          const std::function<void(const CriterionResult&)>& progress = {});

// Findings that are not tied to one criterion: printed membership sets, the
// Ad conjugation ordering, and the alternate reading of the flagged row.
nlohmann::json extra_findings(const RunConfig& cfg);

// Deterministic report (no timings). ok = no criterion has status "fail".
struct SuiteReport {
  std::vector<CriterionResult> criteria;
  nlohmann::json extras;
  bool ok() const;
  nlohmann::json to_json(const RunConfig& cfg) const;
};

SuiteReport verify_all(const RunConfig& cfg, const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace symleib
