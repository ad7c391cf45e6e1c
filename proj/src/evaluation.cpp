#include "asymlink/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "asymlink/csv.hpp"
#include "asymlink/errors.hpp"
#include "asymlink/kernels.hpp"
#include "asymlink/parallel.hpp"
#include "asymlink/rng.hpp"

namespace asymlink {

namespace {

// Visits every distinct non-adjacent pair (i, j), i < j, with a common
// neighbor. Order: increasing i, then by first discovery through Γ(i)'s
// neighbors in increasing order.
template <class Visit>
void for_each_two_hop_pair(const CoauthorGraph& g, Visit&& visit) {
  const std::size_t n = g.node_count();
  std::vector<std::uint64_t> mark(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    const std::uint64_t neighbor_tag = 2 * static_cast<std::uint64_t>(i) + 1;
    const std::uint64_t seen_tag = neighbor_tag + 1;
    const auto nb_i = g.neighbors(i);
    for (NodeId z : nb_i) mark[z] = neighbor_tag;
    for (NodeId z : nb_i) {
      const auto nb_z = g.neighbors(z);
      for (auto it = std::upper_bound(nb_z.begin(), nb_z.end(), i); it != nb_z.end(); ++it) {
        const NodeId j = *it;
        if (mark[j] == neighbor_tag || mark[j] == seen_tag) continue;
        mark[j] = seen_tag;
        visit(i, j);
      }
    }
  }
}

std::vector<LabeledScore> label_pairs(const EvaluationSet& set) {
  std::vector<LabeledScore> out;
  out.reserve(set.positives.size() + set.negatives.size());
  for (const NodePair& p : set.positives) out.push_back({p, Label::kPositive, 0.0});
  for (const NodePair& p : set.negatives) out.push_back({p, Label::kNegative, 0.0});
  return out;
}

// Scores grouped into runs of equal value, in decreasing score order.
struct TieGroup {
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

std::vector<TieGroup> descending_tie_groups(std::span<const LabeledScore> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a].value > scores[b].value; });
  std::vector<TieGroup> groups;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const LabeledScore& s = scores[order[k]];
    if (std::isnan(s.value)) throw std::invalid_argument("NaN score");
    if (k == 0 || scores[order[k - 1]].value != s.value) groups.emplace_back();
    if (s.label == Label::kPositive) {
      ++groups.back().positives;
    } else {
      ++groups.back().negatives;
    }
  }
  return groups;
}

// y at x on a polyline with non-decreasing x; vertical runs resolve upward.
double interpolate_upper(std::span<const std::pair<double, double>> pts, double x) {
  const auto it = std::upper_bound(pts.begin(), pts.end(), x,
                                   [](double v, const auto& p) { return v < p.first; });
  if (it == pts.begin()) return pts.front().second;
  const auto& left = *(it - 1);
  if (it == pts.end()) return left.second;
  const auto& right = *it;
  const double t = (x - left.first) / (right.first - left.first);
  return left.second + t * (right.second - left.second);
}

// Precision at the first point whose recall reaches r.
double precision_at_recall(std::span<const std::pair<double, double>> pts, double r) {
  for (const auto& [recall, precision] : pts) {
    if (recall >= r) return precision;
  }
  return pts.back().second;
}

double mean(std::span<const double> xs) {
  return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double standard_error(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1)) / std::sqrt(static_cast<double>(xs.size()));
}

}  // namespace

std::vector<NodePair> qualifying_positives(const CoauthorGraph& g) {
  std::vector<NodePair> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeView view = g.edge(e);
    if (kernels::intersect_count(g.neighbors(view.u), g.neighbors(view.v)) > 0) {
      out.emplace_back(view.u, view.v);
    }
  }
  return out;
}

QualifyingCounts count_qualifying(const CoauthorGraph& g) {
  QualifyingCounts counts;
  counts.positives = qualifying_positives(g).size();
  for_each_two_hop_pair(g, [&](NodeId, NodeId) { ++counts.negatives; });
  return counts;
}

std::size_t default_set_size(const CoauthorGraph& g) {
  return std::min<std::size_t>(10000, qualifying_positives(g).size() / 2);
}

EvaluationSet build_balanced_set(const CoauthorGraph& g, std::size_t d, std::uint64_t seed) {
  EvaluationSet set;
  set.d = d;
  set.seed = seed;
  if (d == 0) return set;

  Rng rng(seed);
  std::vector<NodePair> pool = qualifying_positives(g);

  std::vector<NodePair> reservoir;
  reservoir.reserve(d);
  std::size_t seen = 0;
  // Negatives are enumerated even when positives fall short so the error can
  // report both pool sizes.
  Rng negative_rng(Rng::derive_seed(seed, 1));
  for_each_two_hop_pair(g, [&](NodeId i, NodeId j) {
    if (reservoir.size() < d) {
      reservoir.emplace_back(i, j);
    } else {
      const std::uint64_t slot = negative_rng.below(seen + 1);
      if (slot < d) reservoir[slot] = {i, j};
    }
    ++seen;
  });

  if (pool.size() < d || seen < d) {
    throw ConfigError("not enough qualifying pairs for d = " + std::to_string(d) + ": " +
                      std::to_string(pool.size()) + " edges and " + std::to_string(seen) +
                      " non-edges share a common neighbor");
  }

  // Partial Fisher-Yates.
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(rng.below(pool.size() - k));
    std::swap(pool[k], pool[pick]);
  }
  pool.resize(d);
  set.positives = std::move(pool);
  set.negatives = std::move(reservoir);
  return set;
}

CoauthorGraph training_graph(const CoauthorGraph& g, const EvaluationSet& set, bool remove_positives) {
  if (!remove_positives) return g;
  return remove_edges(g, set.positives);
}

std::vector<std::vector<LabeledScore>> holdout_scores(const CoauthorGraph& g,
                                                      const EvaluationSet& set,
                                                      std::span<const ScoreKind> kinds,
                                                      const HoldoutOptions& options) {
  const std::vector<LabeledScore> labeled = label_pairs(set);
  std::vector<std::vector<LabeledScore>> out(kinds.size(), labeled);
  if (labeled.empty() || kinds.empty()) return out;

  const CoauthorGraph train = training_graph(g, set, options.remove_positives);
  parallel_for(labeled.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> values(kinds.size());
    for (std::size_t p = begin; p < end; ++p) {
      const auto [i, j] = labeled[p].pair;
      score_kinds(train, i, j, kinds, values, options.mix);
      for (std::size_t k = 0; k < kinds.size(); ++k) out[k][p].value = values[k];
    }
  });
  return out;
}

std::vector<LabeledScore> holdout_scores(const CoauthorGraph& g, const EvaluationSet& set,
                                         ScoreKind kind, const HoldoutOptions& options) {
  const ScoreKind kinds[] = {kind};
  return std::move(holdout_scores(g, set, kinds, options).front());
}

ThresholdMetrics confusion_at_threshold(std::span<const LabeledScore> scores, double threshold) {
  ThresholdMetrics m;
  for (const LabeledScore& s : scores) {
    const bool predicted = s.value > threshold;
    if (s.label == Label::kPositive) {
      ++(predicted ? m.matrix.tp : m.matrix.fn);
    } else {
      ++(predicted ? m.matrix.fp : m.matrix.tn);
    }
  }
  const auto ratio = [](std::size_t num, std::size_t den, double empty) {
    return den == 0 ? empty : static_cast<double>(num) / static_cast<double>(den);
  };
  m.tpr = ratio(m.matrix.tp, m.matrix.tp + m.matrix.fn, 0.0);
  m.tnr = ratio(m.matrix.tn, m.matrix.tn + m.matrix.fp, 0.0);
  m.precision = ratio(m.matrix.tp, m.matrix.tp + m.matrix.fp, 1.0);
  return m;
}

CurveResult roc_auc(std::span<const LabeledScore> scores) {
  const std::vector<TieGroup> groups = descending_tie_groups(scores);
  std::size_t total_pos = 0, total_neg = 0;
  for (const TieGroup& t : groups) {
    total_pos += t.positives;
    total_neg += t.negatives;
  }
  if (total_pos == 0 || total_neg == 0) {
    throw std::invalid_argument("ROC needs at least one positive and one negative");
  }

  CurveResult curve;
  curve.points.emplace_back(0.0, 0.0);
  // Walking down the ranking, each positive outranks every negative not yet
  // seen and ties with the negatives in its own group.
  double wins = 0.0;
  std::size_t tp = 0, fp = 0;
  for (const TieGroup& t : groups) {
    wins += static_cast<double>(t.positives) *
            (static_cast<double>(total_neg - fp - t.negatives) + 0.5 * static_cast<double>(t.negatives));
    tp += t.positives;
    fp += t.negatives;
    curve.points.emplace_back(static_cast<double>(fp) / static_cast<double>(total_neg),
                              static_cast<double>(tp) / static_cast<double>(total_pos));
  }
  curve.area = wins / (static_cast<double>(total_pos) * static_cast<double>(total_neg));
  return curve;
}

CurveResult pr_auc(std::span<const LabeledScore> scores) {
  const std::vector<TieGroup> groups = descending_tie_groups(scores);
  std::size_t total_pos = 0;
  for (const TieGroup& t : groups) total_pos += t.positives;
  if (total_pos == 0) throw std::invalid_argument("precision-recall needs at least one positive");

  CurveResult curve;
  double sum = 0.0;
  std::size_t tp = 0, fp = 0;
  for (const TieGroup& t : groups) {
    tp += t.positives;
    fp += t.negatives;
    const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    sum += static_cast<double>(t.positives) * precision;
    curve.points.emplace_back(static_cast<double>(tp) / static_cast<double>(total_pos), precision);
  }
  curve.area = sum / static_cast<double>(total_pos);
  return curve;
}

double trapezoid_area(std::span<const std::pair<double, double>> points) {
  double area = 0.0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    area += (points[k].first - points[k - 1].first) * (points[k].second + points[k - 1].second) / 2.0;
  }
  return area;
}

std::vector<KindSummary> evaluate_all(const CoauthorGraph& g, std::span<const ScoreKind> kinds,
                                      const EvaluateOptions& options) {
  std::vector<KindSummary> rows(kinds.size());
  if (kinds.empty()) return rows;
  if (options.seeds.empty()) throw ConfigError("at least one seed is required");
  const std::size_t d = options.d ? *options.d : default_set_size(g);
  if (d == 0) throw ConfigError("evaluation set size d must be positive");

  for (std::size_t k = 0; k < kinds.size(); ++k) {
    rows[k].kind = kinds[k];
    rows[k].d = d;
  }

  HoldoutOptions holdout;
  holdout.remove_positives = options.holdout;
  holdout.threads = options.threads;
  holdout.mix = options.mix;
  for (std::uint64_t seed : options.seeds) {
    const EvaluationSet set = build_balanced_set(g, d, seed);
    const auto scored = holdout_scores(g, set, kinds, holdout);
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      CurveResult roc = roc_auc(scored[k]);
      CurveResult pr = pr_auc(scored[k]);
      rows[k].auc.push_back(roc.area);
      rows[k].prauc.push_back(pr.area);
      rows[k].roc.push_back(std::move(roc));
      rows[k].pr.push_back(std::move(pr));
    }
  }

  const std::size_t grid = std::max<std::size_t>(options.curve_grid, 2);
  for (KindSummary& row : rows) {
    row.auc_mean = mean(row.auc);
    row.prauc_mean = mean(row.prauc);
    row.auc_stderr = standard_error(row.auc);
    row.prauc_stderr = standard_error(row.prauc);
    for (std::size_t p = 0; p < grid; ++p) {
      const double x = static_cast<double>(p) / static_cast<double>(grid - 1);
      double tpr = 0.0, precision = 0.0;
      for (std::size_t s = 0; s < row.roc.size(); ++s) {
        tpr += interpolate_upper(row.roc[s].points, x);
        precision += precision_at_recall(row.pr[s].points, x);
      }
      row.mean_roc.points.emplace_back(x, tpr / static_cast<double>(row.roc.size()));
      row.mean_pr.points.emplace_back(x, precision / static_cast<double>(row.pr.size()));
    }
    row.mean_roc.area = row.auc_mean;
    row.mean_pr.area = row.prauc_mean;
  }
  return rows;
}

void write_summary_csv(std::ostream& out, std::span<const KindSummary> rows) {
  out << "kind,auc,prauc,stderr_auc,stderr_prauc,d,seed_count\n";
  for (const KindSummary& r : rows) {
    out << score_token(r.kind) << ',' << format_real(r.auc_mean) << ',' << format_real(r.prauc_mean)
        << ',' << format_real(r.auc_stderr) << ',' << format_real(r.prauc_stderr) << ',' << r.d
        << ',' << r.auc.size() << '\n';
  }
}

void write_curve_csv(std::ostream& out, const CurveResult& curve, const char* header) {
  out << header << '\n';
  for (const auto& [x, y] : curve.points) out << format_real(x) << ',' << format_real(y) << '\n';
}

void write_evaluation_set(std::ostream& out, const EvaluationSet& set) {
  out << "i,j,label\n";
  for (const auto& [i, j] : set.positives) out << i << ',' << j << ",P\n";
  for (const auto& [i, j] : set.negatives) out << i << ',' << j << ",N\n";
}

}  // namespace asymlink
