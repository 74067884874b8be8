#pragma once

#include <functional>
#include <string>
#include <vector>

#include "scengen/metrics.hpp"
#include "scengen/optimizers.hpp"

namespace scengen {

// Canonical report JSON: deterministic key order and number formatting, no
// wall-clock content. Identical campaigns serialize byte-identically.
std::string report_to_json(const CampaignReport& report);

// Measurement sidecar (wall time); kept separate from the canonical report.
std::string timing_to_json(const CampaignReport& report);

// Flat CSV of all evaluations for plotting: iteration, parameters,
// objectives, recorded metrics.
std::string evaluations_to_csv(const CampaignReport& report);

struct CampaignStats {
  std::size_t total = 0;
  std::size_t critical = 0;
  double r_critic = 0.0;
  double evals_per_critical = 0.0;  // +inf when nothing critical
};

// Classifies each evaluation's recorded metrics (d_min, v_d, n_collision)
// against the thresholds.
CampaignStats campaign_stats(const CampaignReport& report, const Thresholds& thresholds = {},
                             CriticalRule rule = CriticalRule::kCollisionOrNearMiss);

CampaignStats campaign_stats(const CampaignReport& report,
                             const std::function<bool(const Evaluation&)>& is_critical);

// Wall time per critical scenario, normalized so the fastest algorithm gets
// exactly 1.0. Algorithms without critical scenarios get +inf.
std::vector<double> relative_time_per_critical(const std::vector<CampaignStats>& stats,
                                               const std::vector<double>& wall_seconds);

// Mean / median helpers for the comparison table.
double mean_of(const std::vector<double>& values);
double median_of(std::vector<double> values);

}  // namespace scengen
