#include "scengen/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "scengen/errors.hpp"
#include "scengen/numeric.hpp"

namespace scengen {

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw Error("objective dimensions differ");
  bool better = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) better = true;
  }
  return better;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<ParetoPoint>& points) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> fronts;
  if (n == 0) return fronts;

  std::vector<int> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> current;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(points[i].objectives, points[j].objectives)) {
        dominated_by[i].push_back(j);
        ++domination_count[j];
      } else if (dominates(points[j].objectives, points[i].objectives)) {
        dominated_by[j].push_back(i);
        ++domination_count[i];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (domination_count[i] == 0) current.push_back(i);
  }

  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated_by[i]) {
        if (--domination_count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());  // stable within-front input order
    current = std::move(next);
  }
  return fronts;
}

std::vector<std::size_t> non_dominated_filter(const std::vector<ParetoPoint>& points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j != i && dominates(points[j].objectives, points[i].objectives)) dominated = true;
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

std::vector<double> crowding_distance(const std::vector<ParetoPoint>& front) {
  const std::size_t n = front.size();
  if (n == 0) throw Error("crowding distance needs at least one point");
  const std::size_t k = front[0].objectives.size();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), kInf);
    return dist;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return front[a].objectives[m] < front[b].objectives[m];
    });
    const double lo = front[order.front()].objectives[m];
    const double hi = front[order.back()].objectives[m];
    dist[order.front()] = kInf;
    dist[order.back()] = kInf;
    if (hi - lo <= 0.0) continue;  // degenerate objective adds nothing
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (std::isinf(dist[order[i]])) continue;
      dist[order[i]] +=
          (front[order[i + 1]].objectives[m] - front[order[i - 1]].objectives[m]) / (hi - lo);
    }
  }
  return dist;
}

double hypervolume(const std::vector<ParetoPoint>& front,
                   const std::vector<double>& reference) {
  if (reference.size() != 2) throw Error("exact hypervolume supports 2 objectives");
  for (const ParetoPoint& p : front) {
    if (p.objectives.size() != 2) throw Error("exact hypervolume supports 2 objectives");
    if (p.objectives[0] > reference[0] || p.objectives[1] > reference[1]) {
      throw Error("front point does not dominate the reference point");
    }
  }
  if (front.empty()) return 0.0;

  // Deduplicate and keep the non-dominated subset, sorted by the first
  // objective; the second objective is then strictly decreasing.
  std::set<std::pair<double, double>> unique;
  for (const ParetoPoint& p : front) unique.insert({p.objectives[0], p.objectives[1]});

  // Ascending x with ties broken by y means a point is dominated exactly when
  // the staircase tail already reaches at least as low in y.
  std::vector<std::pair<double, double>> sweep;
  for (const auto& p : unique) {
    if (!sweep.empty() && sweep.back().second <= p.second) continue;
    sweep.push_back(p);
  }

  double hv = 0.0;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const double next_x = i + 1 < sweep.size() ? sweep[i + 1].first : reference[0];
    hv += (next_x - sweep[i].first) * (reference[1] - sweep[i].second);
  }
  return hv;
}

double spread(const std::vector<ParetoPoint>& front,
              const std::optional<std::pair<std::vector<double>, std::vector<double>>>&
                  extremes) {
  if (front.size() < 3) throw Error("spread needs at least three front points");
  for (const ParetoPoint& p : front) {
    if (p.objectives.size() != 2) throw Error("spread supports 2 objectives");
  }
  std::vector<std::pair<double, double>> pts;
  pts.reserve(front.size());
  for (const ParetoPoint& p : front) pts.push_back({p.objectives[0], p.objectives[1]});
  std::sort(pts.begin(), pts.end());

  const std::size_t n = pts.size();
  std::vector<double> gaps(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gaps[i] = std::hypot(pts[i + 1].first - pts[i].first, pts[i + 1].second - pts[i].second);
  }
  const double mean =
      std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());

  double d_first = 0.0, d_last = 0.0;
  if (extremes) {
    const auto& [lo, hi] = *extremes;
    if (lo.size() != 2 || hi.size() != 2) throw Error("spread extremes must be 2-D");
    d_first = std::hypot(pts.front().first - lo[0], pts.front().second - lo[1]);
    d_last = std::hypot(pts.back().first - hi[0], pts.back().second - hi[1]);
  }

  double deviation = 0.0;
  for (double g : gaps) deviation += std::fabs(g - mean);
  const double denom = d_first + d_last + static_cast<double>(n - 1) * mean;
  if (denom <= 0.0) return 0.0;  // all points coincide
  return (d_first + d_last + deviation) / denom;
}

}  // namespace scengen
