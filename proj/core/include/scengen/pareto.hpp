#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace scengen {

// A point in objective space. All Pareto utilities assume minimization of
// every objective; callers encode maximized quantities by negation.
struct ParetoPoint {
  std::vector<double> objectives;
  std::size_t payload = 0;  // caller-defined reference, e.g. an evaluation index
};

// True iff a is no worse than b in every objective and better in at least one.
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

// Fast non-dominated sorting. Returns fronts of indices into `points` by
// dominance depth; order within a front follows input order.
std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<ParetoPoint>& points);

// Indices of the mutually non-dominated subset, in input order.
std::vector<std::size_t> non_dominated_filter(const std::vector<ParetoPoint>& points);

// Crowding distance per front member. Boundary points (per objective extreme)
// get +infinity; interior points the sum of normalized neighbor gaps.
std::vector<double> crowding_distance(const std::vector<ParetoPoint>& front);

// Exact hypervolume for two objectives under minimization: the area dominated
// by the front within the box bounded by `reference`. Every point must weakly
// dominate the reference.
double hypervolume(const std::vector<ParetoPoint>& front,
                   const std::vector<double>& reference);

// Spread (non-uniformity) of a 2-objective front with at least three points:
//   (d_f + d_l + sum_i |d_i - mean|) / (d_f + d_l + (N-1) * mean)
// where d_i are consecutive Euclidean gaps along the front sorted by the
// first objective and d_f/d_l are the distances of the boundary points to
// the configured extremes (0 when the extremes default to the front's own).
double spread(const std::vector<ParetoPoint>& front,
              const std::optional<std::pair<std::vector<double>, std::vector<double>>>&
                  extremes = std::nullopt);

}  // namespace scengen
