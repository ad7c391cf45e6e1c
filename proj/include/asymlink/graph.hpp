#pragma once

// Weighted undirected coauthorship graph.
//
// Storage is compressed sparse rows: one contiguous, strictly increasing
// neighbor array per node, with the joint-paper count of every adjacency slot
// alongside it. Edge payloads (the sizes of the joint papers) live in a
// separate per-edge table addressed by EdgeId. The graph is immutable once
// built and safe to share between threads.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace asymlink {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// One publication. Author names are matched by exact string equality.
struct PaperRecord {
  std::string paper_id;
  std::vector<std::string> authors;
};

/// Undirected edge with its joint-paper sizes, used to assemble graphs.
struct EdgeRecord {
  NodeId u = 0;
  NodeId v = 0;
  std::vector<std::uint32_t> paper_sizes;  // one entry per joint paper, each >= 2
};

/// Read-only view of one edge.
struct EdgeView {
  NodeId u;  // u < v
  NodeId v;
  std::uint32_t weight;                       // w: number of joint papers
  std::span<const std::uint32_t> paper_sizes;  // sorted ascending, |sizes| == w
  double newman_weight;                        // w*: sum of 1/(l-1)
};

class CoauthorGraph {
 public:
  CoauthorGraph() = default;

  /// Assembles a graph from edge records. Records for the same unordered pair
  /// are merged (their paper sizes concatenated). Throws std::invalid_argument
  /// on self-loops, out-of-range ids or paper sizes below 2.
  static CoauthorGraph from_edges(std::size_t node_count, std::vector<EdgeRecord> edges,
                                  std::vector<std::uint32_t> publications = {},
                                  std::vector<std::string> names = {});

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_u_.size(); }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {neighbors_.data() + offsets_[i], neighbors_.data() + offsets_[i + 1]};
  }
  /// Joint-paper counts aligned with neighbors(i).
  std::span<const std::uint32_t> weights(NodeId i) const {
    return {weights_.data() + offsets_[i], weights_.data() + offsets_[i + 1]};
  }
  /// Edge ids aligned with neighbors(i).
  std::span<const EdgeId> incident_edges(NodeId i) const {
    return {edge_of_slot_.data() + offsets_[i], edge_of_slot_.data() + offsets_[i + 1]};
  }

  std::uint32_t degree(NodeId i) const {
    return static_cast<std::uint32_t>(offsets_[i + 1] - offsets_[i]);
  }
  std::uint64_t strength(NodeId i) const { return strength_[i]; }
  std::uint32_t publications(NodeId i) const { return publications_[i]; }
  std::span<const std::uint32_t> publications() const { return publications_; }

  bool has_names() const { return !names_.empty(); }
  const std::string& name(NodeId i) const { return names_.at(i); }
  std::span<const std::string> names() const { return names_; }

  EdgeView edge(EdgeId e) const;

  /// Position of j inside neighbors(i), if adjacent.
  std::optional<std::size_t> slot_of(NodeId i, NodeId j) const;
  std::optional<EdgeId> find_edge(NodeId i, NodeId j) const;
  bool adjacent(NodeId i, NodeId j) const { return slot_of(i, j).has_value(); }

  /// Throws std::out_of_range unless i < node_count().
  void check_node(NodeId i) const;

  /// Edge records equivalent to this graph (u < v, ordered by u then v).
  std::vector<EdgeRecord> edge_records() const;

 private:
  friend class GraphAssembler;

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<std::uint32_t> weights_;
  std::vector<EdgeId> edge_of_slot_;

  std::vector<NodeId> edge_u_;
  std::vector<NodeId> edge_v_;
  std::vector<std::size_t> size_offsets_;
  std::vector<std::uint32_t> paper_sizes_;
  std::vector<double> newman_;

  std::vector<std::uint64_t> strength_;
  std::vector<std::uint32_t> publications_;
  std::vector<std::string> names_;
};

/// Coauthorship projection of a paper list. Nodes are numbered by first
/// appearance of the author; duplicate names inside one author list count
/// once. Every paper raises p_i of its authors by one, and every unordered
/// author pair gains one joint paper of size l.
CoauthorGraph build_from_papers(std::span<const PaperRecord> papers);

/// Same construction for author lists that are already node ids in
/// [0, node_count). Lists must be duplicate-free.
CoauthorGraph build_from_author_lists(std::size_t node_count,
                                      std::span<const std::vector<NodeId>> papers);

/// |Γ(i) ∩ Γ(j)|. Requires i != j; throws on invalid ids.
std::size_t common_neighbors(const CoauthorGraph& g, NodeId i, NodeId j);

/// Induced subgraph on the largest connected component, nodes re-indexed in
/// increasing original order. On equal sizes the component holding the
/// smallest original id wins. `original_ids`, when given, receives the
/// original id of every new node.
CoauthorGraph largest_component(const CoauthorGraph& g,
                                std::vector<NodeId>* original_ids = nullptr);

/// Copy of `g` without the listed edges. Publication counts are unchanged.
/// Pairs that are not edges are ignored.
CoauthorGraph remove_edges(const CoauthorGraph& g,
                           std::span<const std::pair<NodeId, NodeId>> pairs);

}  // namespace asymlink
