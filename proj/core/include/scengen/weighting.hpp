#pragma once

#include <string>
#include <vector>

namespace scengen {

// Optimization sense of a metric: benefit metrics push fitness up, cost
// metrics are negated during positivization and enter the scalar fitness
// with a negative sign.
enum class Direction { kBenefit, kCost };

struct MetricWeights {
  std::vector<std::string> names;
  std::vector<double> weights;  // non-negative, sum to 1
  std::vector<Direction> directions;

  std::size_t size() const { return weights.size(); }
};

// Entropy-based objective weighting over an m x n sample matrix (m scenarios,
// n metrics): positivize cost columns by negation, min-max normalize each
// column, form per-column sample proportions, compute normalized entropy
// E_j with 0*ln(0) := 0, and weight each metric by (1 - E_j) / sum(1 - E_k).
// Constant columns carry no information: E_j := 1, weight 0. Throws when all
// columns are constant or the matrix is degenerate (m < 2 or ragged rows).
MetricWeights entropy_weights(const std::vector<std::vector<double>>& samples,
                              const std::vector<Direction>& directions,
                              std::vector<std::string> names = {});

// Convex combination of subjective and objective weights (default 40%/60%),
// renormalized to sum 1. Metric names and directions must match.
MetricWeights combine_weights(const MetricWeights& subjective,
                              const MetricWeights& objective,
                              double subjective_ratio = 0.4);

}  // namespace scengen
