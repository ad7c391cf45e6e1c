#pragma once

// Log-binned distributions, tie-strength versus overlap relations and
// power-law fits on binned data.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "asymlink/graph.hpp"

namespace asymlink {

/// Logarithmic bins [lo, hi) anchored at powers of ten: bin m covers
/// [10^(m/b), 10^((m+1)/b)) for b bins per decade. Empty bins inside the
/// covered range are kept with count 0.
struct BinnedSeries {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<double> x_rep;   // geometric mean of the bounds
  std::vector<double> y_mean;  // density, or mean y for relations
  std::vector<std::size_t> count;

  std::size_t size() const { return lo.size(); }
  bool occupied(std::size_t k) const { return count[k] > 0; }
};

/// Density estimate: count / (bin width * total), so the bins integrate to 1.
/// Throws std::invalid_argument on empty input, non-positive values or
/// bins_per_decade == 0.
BinnedSeries log_binned_distribution(std::span<const double> values, std::size_t bins_per_decade = 10);

/// Bins x logarithmically and averages y within each bin.
BinnedSeries log_binned_mean(std::span<const std::pair<double, double>> xy,
                             std::size_t bins_per_decade = 10);

enum class TieStrength { kW, kWStar, kV };
enum class Overlap { kO, kQ };

/// Pairs studied in the weight-topology analysis: (w, O), (w*, O), (v, Q).
bool is_paper_combination(TieStrength x, Overlap y);

/// One (x, y) per undirected edge when both quantities are symmetric, and one
/// per direction (pairing v_ij or w_ij with Q_ij or O_ij) otherwise.
std::vector<std::pair<double, double>> relation_observations(const CoauthorGraph& g, TieStrength x,
                                                             Overlap y, std::size_t threads = 1);

struct RelationSeries {
  BinnedSeries series;
  std::size_t observations = 0;
  bool paper_combination = true;
};

/// Throws std::invalid_argument on a graph without edges.
RelationSeries weight_overlap_relation(const CoauthorGraph& g, TieStrength x, Overlap y,
                                       std::size_t bins_per_decade = 10, std::size_t threads = 1);

struct FitOptions {
  std::size_t min_count = 10;
  std::optional<double> x_min;
  std::optional<double> x_max;
};

struct PowerLawFit {
  double beta = 0.0;
  double intercept = 0.0;  // log10 scale
  double r2 = 0.0;
  std::size_t n_points = 0;
};

/// Least squares of log10(y_mean) on log10(x_rep) over bins with
/// count >= min_count, y_mean > 0 and x_rep within [x_min, x_max]. Throws
/// std::invalid_argument with fewer than 3 usable bins.
PowerLawFit fit_power_law_exponent(const BinnedSeries& series, const FitOptions& options = {});

/// (x_rep, y_mean) of bins with count >= min_count, in bin order.
std::vector<std::pair<double, double>> well_sampled_points(const BinnedSeries& series,
                                                           std::size_t min_count);

/// Number of sign changes in the discrete slope of `points`; zero slopes are
/// skipped.
std::size_t slope_sign_changes(std::span<const std::pair<double, double>> points);

void write_distribution_csv(std::ostream& out, const BinnedSeries& s);  // x,density,count
void write_relation_csv(std::ostream& out, const BinnedSeries& s);      // x,y_mean,count
void write_fit_csv(std::ostream& out, const PowerLawFit& fit);           // beta,intercept,r2,n_points

}  // namespace asymlink
