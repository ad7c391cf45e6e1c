#include "asymlink/metrics.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "asymlink/csv.hpp"
#include "asymlink/kernels.hpp"
#include "asymlink/parallel.hpp"

namespace asymlink {

namespace {

EdgeId require_edge(const CoauthorGraph& g, NodeId i, NodeId j) {
  const auto e = g.find_edge(i, j);
  if (!e) {
    throw std::invalid_argument("(" + std::to_string(i) + ", " + std::to_string(j) +
                                ") is not an edge");
  }
  return *e;
}

double ratio_or_zero(double num, double den) { return den > 0.0 ? num / den : 0.0; }

struct EdgeCounts {
  double k_i;
  double k_j;
  double n;
};

EdgeCounts counts(const CoauthorGraph& g, NodeId i, NodeId j) {
  require_edge(g, i, j);
  return {static_cast<double>(g.degree(i)), static_cast<double>(g.degree(j)),
          static_cast<double>(kernels::intersect_count(g.neighbors(i), g.neighbors(j)))};
}

}  // namespace

double symmetric_overlap(const CoauthorGraph& g, NodeId i, NodeId j) {
  const auto [k_i, k_j, n] = counts(g, i, j);
  return ratio_or_zero(n, (k_i - 1) + (k_j - 1) - n);
}

double asymmetric_overlap(const CoauthorGraph& g, NodeId i, NodeId j) {
  const auto [k_i, k_j, n] = counts(g, i, j);
  return ratio_or_zero(n, k_i - 1);
}

double newman_tie_strength(const CoauthorGraph& g, NodeId i, NodeId j) {
  return g.edge(require_edge(g, i, j)).newman_weight;
}

double asymmetric_tie_strength(const CoauthorGraph& g, NodeId i, NodeId j) {
  const EdgeView e = g.edge(require_edge(g, i, j));
  if (g.publications(i) == 0) {
    throw std::logic_error("node " + std::to_string(i) + " has an edge but no publications");
  }
  return static_cast<double>(e.weight) / static_cast<double>(g.publications(i));
}

double edge_clustering(const CoauthorGraph& g, NodeId i, NodeId j) {
  const auto [k_i, k_j, n] = counts(g, i, j);
  return ratio_or_zero(n, std::min(k_i - 1, k_j - 1));
}

EdgeObservation observe_edge(const CoauthorGraph& g, NodeId i, NodeId j) {
  const EdgeView e = g.edge(require_edge(g, i, j));
  EdgeObservation o;
  o.i = i;
  o.j = j;
  o.k_i = g.degree(i);
  o.k_j = g.degree(j);
  o.n = static_cast<std::uint32_t>(kernels::intersect_count(g.neighbors(i), g.neighbors(j)));
  const double k_i = o.k_i, k_j = o.k_j, n = o.n;
  o.overlap = ratio_or_zero(n, (k_i - 1) + (k_j - 1) - n);
  o.asymmetric_overlap = ratio_or_zero(n, k_i - 1);
  o.weight = e.weight;
  o.newman_weight = e.newman_weight;
  if (g.publications(i) == 0) {
    throw std::logic_error("node " + std::to_string(i) + " has an edge but no publications");
  }
  o.asymmetric_weight = static_cast<double>(e.weight) / g.publications(i);
  return o;
}

std::vector<EdgeObservation> directed_edge_observations(const CoauthorGraph& g,
                                                        std::size_t threads) {
  std::vector<EdgeObservation> out(2 * g.edge_count());
  parallel_for(g.edge_count(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e) {
      const EdgeView view = g.edge(static_cast<EdgeId>(e));
      out[2 * e] = observe_edge(g, view.u, view.v);
      out[2 * e + 1] = observe_edge(g, view.v, view.u);
    }
  });
  return out;
}

void write_edge_metrics_csv(std::ostream& out, const std::vector<EdgeObservation>& rows) {
  out << "i,j,k_i,k_j,n,O,Q,w,w_star,v\n";
  for (const EdgeObservation& o : rows) {
    out << o.i << ',' << o.j << ',' << o.k_i << ',' << o.k_j << ',' << o.n << ','
        << format_real(o.overlap) << ',' << format_real(o.asymmetric_overlap) << ','
        << format_real(o.weight) << ',' << format_real(o.newman_weight) << ','
        << format_real(o.asymmetric_weight) << '\n';
  }
}

}  // namespace asymlink
