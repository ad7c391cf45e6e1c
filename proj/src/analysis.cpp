#include "asymlink/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "asymlink/csv.hpp"
#include "asymlink/metrics.hpp"
#include "asymlink/parallel.hpp"

namespace asymlink {

namespace {

// Guards values that sit exactly on a bin edge against log10 rounding down.
constexpr double kEdgeSlack = 1e-9;

long bin_index(double x, std::size_t per_decade) {
  return static_cast<long>(std::floor(std::log10(x) * static_cast<double>(per_decade) + kEdgeSlack));
}

double bin_edge(long index, std::size_t per_decade) {
  return std::pow(10.0, static_cast<double>(index) / static_cast<double>(per_decade));
}

BinnedSeries empty_bins(long first, long last, std::size_t per_decade) {
  BinnedSeries s;
  for (long m = first; m <= last; ++m) {
    s.lo.push_back(bin_edge(m, per_decade));
    s.hi.push_back(bin_edge(m + 1, per_decade));
    s.x_rep.push_back(std::pow(10.0, (static_cast<double>(m) + 0.5) / static_cast<double>(per_decade)));
    s.y_mean.push_back(0.0);
    s.count.push_back(0);
  }
  return s;
}

void check_binning(std::size_t size, std::size_t per_decade) {
  if (size == 0) throw std::invalid_argument("cannot bin an empty sample");
  if (per_decade == 0) throw std::invalid_argument("bins_per_decade must be positive");
}

double overlap_value(const EdgeObservation& o, Overlap y) {
  return y == Overlap::kO ? o.overlap : o.asymmetric_overlap;
}

double strength_value(const EdgeObservation& o, TieStrength x) {
  switch (x) {
    case TieStrength::kW:
      return o.weight;
    case TieStrength::kWStar:
      return o.newman_weight;
    case TieStrength::kV:
      return o.asymmetric_weight;
  }
  return 0.0;
}

}  // namespace

BinnedSeries log_binned_distribution(std::span<const double> values, std::size_t bins_per_decade) {
  check_binning(values.size(), bins_per_decade);
  long first = 0, last = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] > 0.0)) throw std::invalid_argument("log binning needs positive values");
    const long m = bin_index(values[k], bins_per_decade);
    first = k == 0 ? m : std::min(first, m);
    last = k == 0 ? m : std::max(last, m);
  }
  BinnedSeries s = empty_bins(first, last, bins_per_decade);
  for (double v : values) ++s.count[static_cast<std::size_t>(bin_index(v, bins_per_decade) - first)];
  const double total = static_cast<double>(values.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    s.y_mean[k] = static_cast<double>(s.count[k]) / ((s.hi[k] - s.lo[k]) * total);
  }
  return s;
}

BinnedSeries log_binned_mean(std::span<const std::pair<double, double>> xy, std::size_t bins_per_decade) {
  check_binning(xy.size(), bins_per_decade);
  long first = 0, last = 0;
  for (std::size_t k = 0; k < xy.size(); ++k) {
    if (!(xy[k].first > 0.0)) throw std::invalid_argument("log binning needs positive x values");
    const long m = bin_index(xy[k].first, bins_per_decade);
    first = k == 0 ? m : std::min(first, m);
    last = k == 0 ? m : std::max(last, m);
  }
  BinnedSeries s = empty_bins(first, last, bins_per_decade);
  std::vector<double> sums(s.size(), 0.0);
  for (const auto& [x, y] : xy) {
    const auto k = static_cast<std::size_t>(bin_index(x, bins_per_decade) - first);
    ++s.count[k];
    sums[k] += y;
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s.count[k] > 0) s.y_mean[k] = sums[k] / static_cast<double>(s.count[k]);
  }
  return s;
}

bool is_paper_combination(TieStrength x, Overlap y) {
  return (x == TieStrength::kV) == (y == Overlap::kQ);
}

std::vector<std::pair<double, double>> relation_observations(const CoauthorGraph& g, TieStrength x,
                                                             Overlap y, std::size_t threads) {
  const std::vector<EdgeObservation> obs = directed_edge_observations(g, threads);
  const bool directed = x == TieStrength::kV || y == Overlap::kQ;
  std::vector<std::pair<double, double>> out;
  out.reserve(directed ? obs.size() : obs.size() / 2);
  for (std::size_t k = 0; k < obs.size(); k += directed ? 1 : 2) {
    out.emplace_back(strength_value(obs[k], x), overlap_value(obs[k], y));
  }
  return out;
}

RelationSeries weight_overlap_relation(const CoauthorGraph& g, TieStrength x, Overlap y,
                                       std::size_t bins_per_decade, std::size_t threads) {
  if (g.edge_count() == 0) throw std::invalid_argument("relation needs at least one edge");
  const auto xy = relation_observations(g, x, y, threads);
  return RelationSeries{log_binned_mean(xy, bins_per_decade), xy.size(), is_paper_combination(x, y)};
}

PowerLawFit fit_power_law_exponent(const BinnedSeries& series, const FitOptions& options) {
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < series.size(); ++k) {
    if (series.count[k] < options.min_count || !(series.y_mean[k] > 0.0)) continue;
    if (options.x_min && series.x_rep[k] < *options.x_min) continue;
    if (options.x_max && series.x_rep[k] > *options.x_max) continue;
    lx.push_back(std::log10(series.x_rep[k]));
    ly.push_back(std::log10(series.y_mean[k]));
  }
  if (lx.size() < 3) throw std::invalid_argument("power-law fit needs at least 3 usable bins");

  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    mx += lx[k];
    my += ly[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
    syy += (ly[k] - my) * (ly[k] - my);
  }
  PowerLawFit fit;
  fit.beta = sxy / sxx;
  fit.intercept = my - fit.beta * mx;
  fit.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.n_points = lx.size();
  return fit;
}

std::vector<std::pair<double, double>> well_sampled_points(const BinnedSeries& series,
                                                           std::size_t min_count) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < series.size(); ++k) {
    if (series.count[k] >= min_count && series.count[k] > 0) {
      out.emplace_back(series.x_rep[k], series.y_mean[k]);
    }
  }
  return out;
}

std::size_t slope_sign_changes(std::span<const std::pair<double, double>> points) {
  std::size_t changes = 0;
  int previous = 0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double dy = points[k].second - points[k - 1].second;
    const int sign = (dy > 0) - (dy < 0);
    if (sign == 0) continue;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

void write_distribution_csv(std::ostream& out, const BinnedSeries& s) {
  out << "x,density,count\n";
  for (std::size_t k = 0; k < s.size(); ++k) {
    out << format_real(s.x_rep[k]) << ',' << format_real(s.y_mean[k]) << ',' << s.count[k] << '\n';
  }
}

void write_relation_csv(std::ostream& out, const BinnedSeries& s) {
  out << "x,y_mean,count\n";
  for (std::size_t k = 0; k < s.size(); ++k) {
    out << format_real(s.x_rep[k]) << ',' << format_real(s.y_mean[k]) << ',' << s.count[k] << '\n';
  }
}

void write_fit_csv(std::ostream& out, const PowerLawFit& fit) {
  out << "beta,intercept,r2,n_points\n";
  out << format_real(fit.beta) << ',' << format_real(fit.intercept) << ',' << format_real(fit.r2) << ','
      << fit.n_points << '\n';
}

}  // namespace asymlink
