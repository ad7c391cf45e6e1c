#pragma once

// Local edge metrics. All of them are defined on existing edges; asking for a
// non-adjacent pair throws std::invalid_argument. Degenerate denominators
// (k - 1 == 0) only occur together with n == 0 and yield 0.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "asymlink/graph.hpp"

namespace asymlink {

/// Metrics of the edge (i, j) seen from i. O, w, w_star and C do not depend
/// on direction; Q and v do.
struct EdgeObservation {
  NodeId i = 0;
  NodeId j = 0;
  std::uint32_t k_i = 0;
  std::uint32_t k_j = 0;
  std::uint32_t n = 0;
  double overlap = 0.0;             // O_ij
  double asymmetric_overlap = 0.0;  // Q_ij
  double weight = 0.0;              // w_ij
  double newman_weight = 0.0;       // w*_ij
  double asymmetric_weight = 0.0;   // v_ij
};

/// O_ij = n / ((k_i - 1) + (k_j - 1) - n)
double symmetric_overlap(const CoauthorGraph& g, NodeId i, NodeId j);

/// Q_ij = n / (k_i - 1)
double asymmetric_overlap(const CoauthorGraph& g, NodeId i, NodeId j);

/// w*_ij = sum over joint papers of 1 / (l - 1)
double newman_tie_strength(const CoauthorGraph& g, NodeId i, NodeId j);

/// v_ij = w_ij / p_i. Throws std::logic_error when p_i == 0.
double asymmetric_tie_strength(const CoauthorGraph& g, NodeId i, NodeId j);

/// C_ij = n / min(k_i - 1, k_j - 1)
double edge_clustering(const CoauthorGraph& g, NodeId i, NodeId j);

EdgeObservation observe_edge(const CoauthorGraph& g, NodeId i, NodeId j);

/// Two observations per edge, (u, v) then (v, u), in edge id order.
std::vector<EdgeObservation> directed_edge_observations(const CoauthorGraph& g,
                                                        std::size_t threads = 1);

/// CSV with header i,j,k_i,k_j,n,O,Q,w,w_star,v.
void write_edge_metrics_csv(std::ostream& out, const std::vector<EdgeObservation>& rows);

}  // namespace asymlink
