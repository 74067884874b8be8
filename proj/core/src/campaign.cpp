#include "scengen/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "scengen/numeric.hpp"

namespace scengen {

namespace {

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json();
}

}  // namespace

std::string report_to_json(const CampaignReport& report) {
  nlohmann::json doc;
  doc["algorithm"] = report.algorithm;
  doc["seed"] = report.seed;
  doc["budget"] = {{"iterations", report.budget.iterations},
                   {"population", report.budget.population}};
  doc["parameters"] = report.parameter_names;

  doc["evaluations"] = nlohmann::json::array();
  for (const Evaluation& e : report.evaluations) {
    nlohmann::json j;
    j["iteration"] = e.iteration;
    j["x"] = e.x.values;
    nlohmann::json objectives = nlohmann::json::array();
    for (double f : e.out.objectives) objectives.push_back(finite_or_null(f));
    j["objectives"] = std::move(objectives);
    nlohmann::json metrics = nlohmann::json::object();
    for (const auto& [name, value] : e.out.metrics) metrics[name] = finite_or_null(value);
    j["metrics"] = std::move(metrics);
    doc["evaluations"].push_back(std::move(j));
  }

  nlohmann::json best = nlohmann::json::array();
  for (double v : report.best_history) best.push_back(finite_or_null(v));
  doc["best_history"] = std::move(best);
  doc["best_index_history"] = report.best_index_history;
  doc["generation_fronts"] = report.generation_fronts;
  doc["final_population"] = report.final_population;
  nlohmann::json diagnostics = nlohmann::json::object();
  for (const auto& [name, value] : report.diagnostics) diagnostics[name] = finite_or_null(value);
  doc["diagnostics"] = std::move(diagnostics);
  nlohmann::json hv = nlohmann::json::array();
  for (double v : report.hv_history) hv.push_back(finite_or_null(v));
  doc["hv_history"] = std::move(hv);
  nlohmann::json spread_hist = nlohmann::json::array();
  for (double v : report.spread_history) {
    spread_hist.push_back(std::isnan(v) ? nlohmann::json() : finite_or_null(v));
  }
  doc["spread_history"] = std::move(spread_hist);
  return doc.dump(2);
}

std::string timing_to_json(const CampaignReport& report) {
  nlohmann::json doc;
  doc["algorithm"] = report.algorithm;
  doc["seed"] = report.seed;
  doc["wall_seconds"] = report.wall_seconds;
  return doc.dump(2);
}

std::string evaluations_to_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "iteration";
  for (const std::string& name : report.parameter_names) out << ",x_" << name;
  std::size_t arity = 0;
  std::vector<std::string> metric_names;
  if (!report.evaluations.empty()) {
    arity = report.evaluations.front().out.objectives.size();
    for (const auto& [name, _] : report.evaluations.front().out.metrics) {
      metric_names.push_back(name);
    }
  }
  for (std::size_t k = 0; k < arity; ++k) out << ",f" << k;
  for (const std::string& name : metric_names) out << ',' << name;
  out << '\n';

  auto num = [](double v) {
    if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
    if (std::isnan(v)) return std::string("nan");
    return format_exact(v);
  };
  for (const Evaluation& e : report.evaluations) {
    out << e.iteration;
    for (double x : e.x.values) out << ',' << num(x);
    for (double f : e.out.objectives) out << ',' << num(f);
    for (const std::string& name : metric_names) {
      auto it = e.out.metrics.find(name);
      out << ',' << (it == e.out.metrics.end() ? "nan" : num(it->second));
    }
    out << '\n';
  }
  return out.str();
}

CampaignStats campaign_stats(const CampaignReport& report,
                             const std::function<bool(const Evaluation&)>& is_critical) {
  CampaignStats stats;
  stats.total = report.evaluations.size();
  for (const Evaluation& e : report.evaluations) {
    if (is_critical(e)) ++stats.critical;
  }
  stats.r_critic = stats.total == 0
                       ? 0.0
                       : static_cast<double>(stats.critical) / static_cast<double>(stats.total);
  stats.evals_per_critical =
      stats.critical == 0 ? kInf
                          : static_cast<double>(stats.total) / static_cast<double>(stats.critical);
  return stats;
}

CampaignStats campaign_stats(const CampaignReport& report, const Thresholds& thresholds,
                             CriticalRule rule) {
  return campaign_stats(report, [&](const Evaluation& e) {
    MetricVector mv;
    auto metric = [&](const char* name, double fallback) {
      auto it = e.out.metrics.find(name);
      return it == e.out.metrics.end() ? fallback : it->second;
    };
    mv.n_collision = static_cast<int>(metric("n_collision", 0.0));
    mv.d_min = metric("d_min", kInf);
    mv.v_d = metric("v_d", 0.0);
    return classify_critical(mv, thresholds, rule);
  });
}

std::vector<double> relative_time_per_critical(const std::vector<CampaignStats>& stats,
                                               const std::vector<double>& wall_seconds) {
  if (stats.size() != wall_seconds.size()) {
    throw Error("stats and wall-time counts differ");
  }
  std::vector<double> per_critical(stats.size(), kInf);
  double fastest = kInf;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (stats[i].critical > 0) {
      per_critical[i] = wall_seconds[i] / static_cast<double>(stats[i].critical);
      fastest = std::min(fastest, per_critical[i]);
    }
  }
  if (!std::isfinite(fastest) || fastest <= 0.0) return per_critical;
  for (double& v : per_critical) v /= fastest;
  return per_critical;
}

double mean_of(const std::vector<double>& values) {
  if (values.empty()) return std::nan("");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double median_of(std::vector<double> values) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace scengen
