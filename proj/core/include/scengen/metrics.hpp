#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scengen/geometry.hpp"
#include "scengen/simulator.hpp"
#include "scengen/weighting.hpp"

namespace scengen {

// Criticality metrics of one simulated scenario. ttc_min and d_min are +inf
// when the vehicles never close in / are never co-active. The perception
// fields stay empty unless detection data is supplied externally.
struct MetricVector {
  bool r_red = false;
  int n_collision = 0;
  double ttc_min = 0.0;  // s
  double d_min = 0.0;    // m
  double v_d = 0.0;      // m/s, ego speed at the earliest sample achieving d_min
  double l_offset = 0.0; // m, max ego deviation from its path centerline
  double a_change = 0.0; // m/s^2, max |accel step change| (ego)
  int n_brake = 0;
  std::optional<double> iou;
  std::optional<double> e_position;
  std::optional<double> map_score;

  double value(const std::string& name) const;  // lookup by metric name
};

MetricVector compute_metrics(const SimulationTrace& trace);

enum class FitnessForm {
  kSigned,       // cost metrics enter negatively: -w_dmin*d_min + w_vd*v_d
  kUnsignedSum,  // plain weighted sum: w_dmin*d_min + w_vd*v_d
};

// Scalar fitness from weighted metrics; larger means more critical under the
// signed form. Default weights: d_min 0.8297 (cost), v_d 0.1703 (benefit).
MetricWeights default_fitness_weights();
double fitness(const MetricVector& mv, const MetricWeights& weights,
               FitnessForm form = FitnessForm::kSigned);

struct Thresholds {
  int collision_min = 0;    // critical when n_collision > collision_min
  double d_min_max = 2.0;   // critical when d_min < d_min_max ...
  double v_d_min = 1.0;     // ... and v_d >= v_d_min
};

enum class CriticalRule {
  kCollisionOrNearMiss,   // n_collision > c OR (d_min < d AND v_d >= v)
  kCollisionOnly,
  kNearMissOnly,
  kCollisionAndNearMiss,
};

bool classify_critical(const MetricVector& mv, const Thresholds& th = {},
                       CriticalRule rule = CriticalRule::kCollisionOrNearMiss);

// Axis-aligned box for the perception metrics.
struct Box {
  double x_min = 0.0, y_min = 0.0, x_max = 0.0, y_max = 0.0;
  double area() const { return (x_max - x_min) * (y_max - y_min); }
  Vec2 center() const { return {(x_min + x_max) * 0.5, (y_min + y_max) * 0.5}; }
};

double iou(const Box& a, const Box& b);
double position_error(Vec2 detected, Vec2 ground_truth);

struct Detection {
  std::string label;
  double confidence = 1.0;
  Box box;
};
struct GroundTruthBox {
  std::string label;
  Box box;
};

// Mean average precision over the classes present in the ground truth:
// greedy confidence-ordered matching at the IoU threshold, all-point
// precision-recall interpolation per class.
double mean_average_precision(const std::vector<Detection>& detections,
                              const std::vector<GroundTruthBox>& ground_truth,
                              double iou_threshold = 0.5);

// Externally supplied detection data: a JSON array of
// {"class": ..., "confidence": ..., "box": [x_min, y_min, x_max, y_max]}.
// Ground-truth files use the same shape without the confidence field.
std::vector<Detection> detections_from_json_text(std::string_view text);
std::vector<GroundTruthBox> ground_truth_from_json_text(std::string_view text);

// Fills the perception fields of a metric vector from detection data: mean
// IoU and mean center deviation over greedily matched pairs, plus mAP.
void apply_perception_metrics(MetricVector& mv, const std::vector<Detection>& detections,
                              const std::vector<GroundTruthBox>& ground_truth,
                              double iou_threshold = 0.5);

}  // namespace scengen
