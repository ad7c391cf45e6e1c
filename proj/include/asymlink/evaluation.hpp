#pragma once

// Balanced link-prediction evaluation.
//
// A test set holds d existing edges (positives) and d absent pairs
// (negatives), all sharing at least one common neighbor in the original
// graph. Positives are removed from the graph before scoring unless holdout
// is disabled; publication counts are left untouched either way.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "asymlink/graph.hpp"
#include "asymlink/similarity.hpp"

namespace asymlink {

/// Unordered node pair stored with first < second.
using NodePair = std::pair<NodeId, NodeId>;

struct EvaluationSet {
  std::vector<NodePair> positives;
  std::vector<NodePair> negatives;
  std::size_t d = 0;
  std::uint64_t seed = 0;
};

struct QualifyingCounts {
  std::size_t positives = 0;  // edges with at least one common neighbor
  std::size_t negatives = 0;  // distinct non-adjacent pairs at distance 2
};

/// Counts both candidate pools. Enumerates every wedge, so it costs as much
/// as building a set.
QualifyingCounts count_qualifying(const CoauthorGraph& g);

/// Edges whose endpoints share a common neighbor, in edge id order.
std::vector<NodePair> qualifying_positives(const CoauthorGraph& g);

/// Default set size: min(10^4, qualifying positives / 2).
std::size_t default_set_size(const CoauthorGraph& g);

/// Samples d positives (uniform without replacement over qualifying edges)
/// and d negatives (reservoir sample over the distinct non-adjacent pairs at
/// distance 2, enumerated by increasing first node). Deterministic for a
/// given (graph, d, seed). Throws ConfigError when either pool holds fewer
/// than d pairs; the message reports both pool sizes.
EvaluationSet build_balanced_set(const CoauthorGraph& g, std::size_t d, std::uint64_t seed);

enum class Label : std::uint8_t { kPositive, kNegative };

struct LabeledScore {
  NodePair pair;
  Label label;
  double value;
};

struct HoldoutOptions {
  bool remove_positives = true;
  std::size_t threads = 1;
  MixWeights mix;
};

/// Graph the set is scored on: `g` minus the positives, or `g` itself.
CoauthorGraph training_graph(const CoauthorGraph& g, const EvaluationSet& set, bool remove_positives);

/// Positives first, then negatives, each in set order.
std::vector<LabeledScore> holdout_scores(const CoauthorGraph& g, const EvaluationSet& set,
                                         ScoreKind kind, const HoldoutOptions& options = {});

/// Scores every kind on one training graph. Result[k] is aligned with
/// holdout_scores() for kinds[k].
std::vector<std::vector<LabeledScore>> holdout_scores(const CoauthorGraph& g,
                                                      const EvaluationSet& set,
                                                      std::span<const ScoreKind> kinds,
                                                      const HoldoutOptions& options = {});

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
};

struct ThresholdMetrics {
  ConfusionMatrix matrix;
  double tpr = 0.0;
  double tnr = 0.0;
  double precision = 0.0;  // 1 when nothing is predicted
};

/// A pair is predicted to be linked when its score exceeds `threshold`.
ThresholdMetrics confusion_at_threshold(std::span<const LabeledScore> scores, double threshold);

struct CurveResult {
  std::vector<std::pair<double, double>> points;
  double area = 0.0;
};

/// ROC curve (fpr, tpr) swept over distinct scores from (0,0) to (1,1); area
/// is the rank statistic with ties credited 1/2. Throws std::invalid_argument
/// when a class is missing.
CurveResult roc_auc(std::span<const LabeledScore> scores);

/// Precision-recall points (recall, precision) after each distinct score;
/// area is average precision with tied scores resolved as one group. Throws
/// std::invalid_argument without positives.
CurveResult pr_auc(std::span<const LabeledScore> scores);

/// Trapezoidal area under a polyline.
double trapezoid_area(std::span<const std::pair<double, double>> points);

struct EvaluateOptions {
  std::optional<std::size_t> d;  // default_set_size() when unset
  std::vector<std::uint64_t> seeds{1};
  bool holdout = true;
  std::size_t threads = 1;
  MixWeights mix;
  /// Grid points for seed-averaged curves.
  std::size_t curve_grid = 101;
};

struct KindSummary {
  ScoreKind kind = ScoreKind::kCN;
  std::size_t d = 0;
  std::vector<double> auc;    // per seed
  std::vector<double> prauc;  // per seed
  double auc_mean = 0.0;
  double prauc_mean = 0.0;
  double auc_stderr = 0.0;
  double prauc_stderr = 0.0;
  std::vector<CurveResult> roc;  // per seed
  std::vector<CurveResult> pr;   // per seed
  CurveResult mean_roc;          // pointwise mean on an fpr grid
  CurveResult mean_pr;           // pointwise mean on a recall grid
};

/// Build set, hold out, score and summarize once per seed; one summary per
/// kind in input order.
std::vector<KindSummary> evaluate_all(const CoauthorGraph& g, std::span<const ScoreKind> kinds,
                                      const EvaluateOptions& options);

/// kind,auc,prauc,stderr_auc,stderr_prauc,d,seed_count
void write_summary_csv(std::ostream& out, std::span<const KindSummary> rows);

/// Two-column CSV with the given header (e.g. "fpr,tpr").
void write_curve_csv(std::ostream& out, const CurveResult& curve, const char* header);

/// i,j,label lines, positives first.
void write_evaluation_set(std::ostream& out, const EvaluationSet& set);

}  // namespace asymlink
