#include "scengen/weighting.hpp"

#include <algorithm>
#include <cmath>

#include "scengen/errors.hpp"

namespace scengen {

MetricWeights entropy_weights(const std::vector<std::vector<double>>& samples,
                              const std::vector<Direction>& directions,
                              std::vector<std::string> names) {
  const std::size_t m = samples.size();
  if (m < 2) throw Error("entropy weighting needs at least two samples");
  const std::size_t n = directions.size();
  if (n == 0) throw Error("entropy weighting needs at least one metric");
  for (const auto& row : samples) {
    if (row.size() != n) throw Error("sample matrix rows must all have one value per metric");
    for (double v : row) {
      if (!std::isfinite(v)) throw Error("sample matrix entries must be finite");
    }
  }
  if (names.empty()) {
    for (std::size_t j = 0; j < n; ++j) names.push_back("m" + std::to_string(j));
  }
  if (names.size() != n) throw Error("metric name count does not match direction count");

  std::vector<double> one_minus_entropy(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    // Positivization: cost metrics flip sign so larger is always better.
    std::vector<double> col(m);
    for (std::size_t i = 0; i < m; ++i) {
      col[i] = directions[j] == Direction::kCost ? -samples[i][j] : samples[i][j];
    }
    const auto [lo_it, hi_it] = std::minmax_element(col.begin(), col.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi - lo <= 0.0) {
      one_minus_entropy[j] = 0.0;  // constant column: entropy 1, weight 0
      continue;
    }
    double sum = 0.0;
    for (double& v : col) {
      v = (v - lo) / (hi - lo);
      sum += v;
    }
    double entropy = 0.0;
    for (double v : col) {
      const double p = v / sum;
      if (p > 0.0) entropy += p * std::log(p);
    }
    entropy *= -1.0 / std::log(static_cast<double>(m));
    one_minus_entropy[j] = 1.0 - entropy;
  }

  double total = 0.0;
  for (double v : one_minus_entropy) total += v;
  if (total <= 0.0) throw Error("all metric columns are constant; no information to weight");

  MetricWeights w;
  w.names = std::move(names);
  w.directions = directions;
  w.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) w.weights[j] = one_minus_entropy[j] / total;
  return w;
}

MetricWeights combine_weights(const MetricWeights& subjective,
                              const MetricWeights& objective,
                              double subjective_ratio) {
  if (subjective.names != objective.names) throw Error("weight metric sets differ");
  if (subjective.directions != objective.directions) {
    throw Error("weight metric directions differ");
  }
  if (subjective_ratio < 0.0 || subjective_ratio > 1.0) {
    throw Error("subjective ratio must lie in [0,1]");
  }
  MetricWeights out = subjective;
  double total = 0.0;
  for (std::size_t j = 0; j < out.weights.size(); ++j) {
    out.weights[j] = subjective_ratio * subjective.weights[j] +
                     (1.0 - subjective_ratio) * objective.weights[j];
    total += out.weights[j];
  }
  if (total <= 0.0) throw Error("combined weights sum to zero");
  for (double& v : out.weights) v /= total;
  return out;
}

}  // namespace scengen
