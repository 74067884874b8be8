#include "scengen/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "scengen/errors.hpp"
#include "scengen/numeric.hpp"

namespace scengen {

double MetricVector::value(const std::string& name) const {
  if (name == "r_red") return r_red ? 1.0 : 0.0;
  if (name == "n_collision") return static_cast<double>(n_collision);
  if (name == "ttc_min") return ttc_min;
  if (name == "d_min") return d_min;
  if (name == "v_d") return v_d;
  if (name == "l_offset") return l_offset;
  if (name == "a_change") return a_change;
  if (name == "n_brake") return static_cast<double>(n_brake);
  if (name == "iou" && iou) return *iou;
  if (name == "e_position" && e_position) return *e_position;
  if (name == "map" && map_score) return *map_score;
  throw Error("unknown or absent metric: '" + name + "'");
}

MetricVector compute_metrics(const SimulationTrace& trace) {
  if (trace.samples.empty()) throw Error("cannot compute metrics of an empty trace");

  MetricVector mv;
  mv.d_min = kInf;
  mv.ttc_min = kInf;
  mv.v_d = 0.0;

  double prev_gap = kInf;
  bool prev_pair_active = false;
  double prev_ego_accel = 0.0;
  bool have_prev_ego = false;

  for (const TraceSample& s : trace.samples) {
    const bool pair_active = s.ego.active && s.bv.active;
    if (pair_active) {
      if (s.gap < mv.d_min) {
        mv.d_min = s.gap;
        mv.v_d = s.ego.speed;
      }
      if (prev_pair_active) {
        const double closing = (prev_gap - s.gap) / trace.config.dt;
        if (closing > 1e-12) {
          mv.ttc_min = std::min(mv.ttc_min, s.gap / closing);
        }
      }
      prev_gap = s.gap;
    }
    prev_pair_active = pair_active;

    if (s.ego.active) {
      if (have_prev_ego) {
        mv.a_change = std::max(mv.a_change, std::fabs(s.ego.accel - prev_ego_accel));
      }
      prev_ego_accel = s.ego.accel;
      have_prev_ego = true;
      const Vec2 on_path = trace.ego_path.pose_at(s.ego.s).position;
      mv.l_offset = std::max(mv.l_offset, distance({s.ego.x, s.ego.y}, on_path));
    }
  }

  for (const TraceEvent& e : trace.events) {
    if (e.kind == "collision") ++mv.n_collision;
    if (e.kind == "sudden_brake") ++mv.n_brake;
    if (e.kind == "red_light_crossing" && e.actor == "ego") mv.r_red = true;
  }
  if (mv.n_collision > 0) {
    mv.d_min = 0.0;
  }
  return mv;
}

MetricWeights default_fitness_weights() {
  MetricWeights w;
  w.names = {"d_min", "v_d"};
  w.weights = {0.8297, 0.1703};
  w.directions = {Direction::kCost, Direction::kBenefit};
  return w;
}

double fitness(const MetricVector& mv, const MetricWeights& weights, FitnessForm form) {
  if (weights.names.size() != weights.weights.size() ||
      weights.names.size() != weights.directions.size() || weights.names.empty()) {
    throw Error("malformed metric weights");
  }
  double fit = 0.0;
  for (std::size_t j = 0; j < weights.names.size(); ++j) {
    const double x = mv.value(weights.names[j]);
    const double sign =
        (form == FitnessForm::kSigned && weights.directions[j] == Direction::kCost) ? -1.0
                                                                                    : 1.0;
    fit += sign * weights.weights[j] * x;
  }
  return fit;
}

bool classify_critical(const MetricVector& mv, const Thresholds& th, CriticalRule rule) {
  const bool collision = mv.n_collision > th.collision_min;
  const bool near_miss = mv.d_min < th.d_min_max && mv.v_d >= th.v_d_min;
  switch (rule) {
    case CriticalRule::kCollisionOrNearMiss: return collision || near_miss;
    case CriticalRule::kCollisionOnly: return collision;
    case CriticalRule::kNearMissOnly: return near_miss;
    case CriticalRule::kCollisionAndNearMiss: return collision && near_miss;
  }
  return false;
}

double iou(const Box& a, const Box& b) {
  if (a.area() <= 0.0 || b.area() <= 0.0) throw Error("iou needs positive-area boxes");
  const double ix = std::max(0.0, std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min));
  const double iy = std::max(0.0, std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min));
  const double inter = ix * iy;
  return inter / (a.area() + b.area() - inter);
}

double position_error(Vec2 detected, Vec2 ground_truth) {
  return distance(detected, ground_truth);
}

double mean_average_precision(const std::vector<Detection>& detections,
                              const std::vector<GroundTruthBox>& ground_truth,
                              double iou_threshold) {
  if (ground_truth.empty()) throw Error("mean average precision needs ground truth");

  std::set<std::string> classes;
  for (const GroundTruthBox& g : ground_truth) classes.insert(g.label);

  double ap_sum = 0.0;
  for (const std::string& cls : classes) {
    std::vector<std::size_t> gt_idx;
    for (std::size_t i = 0; i < ground_truth.size(); ++i) {
      if (ground_truth[i].label == cls) gt_idx.push_back(i);
    }
    std::vector<Detection> dets;
    for (const Detection& d : detections) {
      if (d.label == cls) dets.push_back(d);
    }
    std::stable_sort(dets.begin(), dets.end(), [](const Detection& a, const Detection& b) {
      return a.confidence > b.confidence;
    });

    std::vector<bool> matched(gt_idx.size(), false);
    std::vector<int> is_tp(dets.size(), 0);
    for (std::size_t k = 0; k < dets.size(); ++k) {
      double best = 0.0;
      std::size_t best_g = gt_idx.size();
      for (std::size_t g = 0; g < gt_idx.size(); ++g) {
        if (matched[g]) continue;
        const double overlap = iou(dets[k].box, ground_truth[gt_idx[g]].box);
        if (overlap > best) {
          best = overlap;
          best_g = g;
        }
      }
      if (best_g < gt_idx.size() && best >= iou_threshold) {
        matched[best_g] = true;
        is_tp[k] = 1;
      }
    }

    // All-point interpolated AP: area under the precision envelope.
    const double n_gt = static_cast<double>(gt_idx.size());
    std::vector<double> recall, precision;
    int tp = 0;
    for (std::size_t k = 0; k < dets.size(); ++k) {
      tp += is_tp[k];
      recall.push_back(tp / n_gt);
      precision.push_back(static_cast<double>(tp) / static_cast<double>(k + 1));
    }
    double ap = 0.0;
    double prev_recall = 0.0;
    for (std::size_t k = 0; k < recall.size(); ++k) {
      double envelope = 0.0;
      for (std::size_t m = k; m < precision.size(); ++m) {
        envelope = std::max(envelope, precision[m]);
      }
      ap += (recall[k] - prev_recall) * envelope;
      prev_recall = recall[k];
    }
    ap_sum += ap;
  }
  return ap_sum / static_cast<double>(classes.size());
}

namespace {

Box box_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw Error("box must be [x_min, y_min, x_max, y_max]");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

nlohmann::json parse_array(std::string_view text, const char* what) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string(what) + " JSON: " + e.what());
  }
  if (!doc.is_array()) throw Error(std::string(what) + " JSON must be an array");
  return doc;
}

}  // namespace

std::vector<Detection> detections_from_json_text(std::string_view text) {
  std::vector<Detection> out;
  for (const auto& item : parse_array(text, "detections")) {
    Detection d;
    d.label = item.at("class").get<std::string>();
    d.confidence = item.value("confidence", 1.0);
    d.box = box_from_json(item.at("box"));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<GroundTruthBox> ground_truth_from_json_text(std::string_view text) {
  std::vector<GroundTruthBox> out;
  for (const auto& item : parse_array(text, "ground truth")) {
    GroundTruthBox g;
    g.label = item.at("class").get<std::string>();
    g.box = box_from_json(item.at("box"));
    out.push_back(std::move(g));
  }
  return out;
}

void apply_perception_metrics(MetricVector& mv, const std::vector<Detection>& detections,
                              const std::vector<GroundTruthBox>& ground_truth,
                              double iou_threshold) {
  mv.map_score = mean_average_precision(detections, ground_truth, iou_threshold);

  // Greedy confidence-ordered matching within each class, same convention as
  // the precision-recall pass.
  std::vector<Detection> ordered = detections;
  std::stable_sort(ordered.begin(), ordered.end(), [](const Detection& a, const Detection& b) {
    return a.confidence > b.confidence;
  });
  std::vector<bool> matched(ground_truth.size(), false);
  double iou_sum = 0.0, err_sum = 0.0;
  int matches = 0;
  for (const Detection& det : ordered) {
    double best = 0.0;
    std::size_t best_g = ground_truth.size();
    for (std::size_t g = 0; g < ground_truth.size(); ++g) {
      if (matched[g] || ground_truth[g].label != det.label) continue;
      const double overlap = iou(det.box, ground_truth[g].box);
      if (overlap > best) {
        best = overlap;
        best_g = g;
      }
    }
    if (best_g < ground_truth.size() && best >= iou_threshold) {
      matched[best_g] = true;
      iou_sum += best;
      err_sum += position_error(det.box.center(), ground_truth[best_g].box.center());
      ++matches;
    }
  }
  if (matches > 0) {
    mv.iou = iou_sum / matches;
    mv.e_position = err_sum / matches;
  } else {
    mv.iou = 0.0;
    mv.e_position = std::nullopt;  // no matched pair to measure
  }
}

}  // namespace scengen
