#include "asymlink/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "asymlink/kernels.hpp"

namespace asymlink {

namespace {

struct JointPaper {
  NodeId u;
  NodeId v;
  std::uint32_t size;

  friend bool operator<(const JointPaper& a, const JointPaper& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.size < b.size;
  }
};

}  // namespace

// Shared by every construction path: `papers` holds one entry per (pair, joint
// paper) with u < v.
class GraphAssembler {
 public:
  static CoauthorGraph assemble(std::size_t node_count, std::vector<JointPaper> papers,
                                std::vector<std::uint32_t> publications,
                                std::vector<std::string> names) {
    std::sort(papers.begin(), papers.end());

    CoauthorGraph g;
    if (publications.empty()) publications.assign(node_count, 0);
    if (publications.size() != node_count) {
      throw std::invalid_argument("publication table size does not match node count");
    }
    if (!names.empty() && names.size() != node_count) {
      throw std::invalid_argument("name table size does not match node count");
    }
    g.publications_ = std::move(publications);
    g.names_ = std::move(names);

    std::vector<std::size_t> degree(node_count, 0);
    g.size_offsets_.push_back(0);
    for (std::size_t k = 0; k < papers.size();) {
      const JointPaper& first = papers[k];
      std::size_t end = k;
      double newman = 0.0;
      while (end < papers.size() && papers[end].u == first.u && papers[end].v == first.v) {
        g.paper_sizes_.push_back(papers[end].size);
        newman += 1.0 / static_cast<double>(papers[end].size - 1);
        ++end;
      }
      g.edge_u_.push_back(first.u);
      g.edge_v_.push_back(first.v);
      g.size_offsets_.push_back(g.paper_sizes_.size());
      g.newman_.push_back(newman);
      ++degree[first.u];
      ++degree[first.v];
      k = end;
    }

    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
    const std::size_t slots = g.offsets_[node_count];
    g.neighbors_.resize(slots);
    g.weights_.resize(slots);
    g.edge_of_slot_.resize(slots);

    // Edges are sorted by (u, v), so every node first receives its smaller
    // neighbors in increasing order and then its larger ones.
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId e = 0; e < g.edge_u_.size(); ++e) {
      const NodeId u = g.edge_u_[e];
      const NodeId v = g.edge_v_[e];
      const auto w = static_cast<std::uint32_t>(g.size_offsets_[e + 1] - g.size_offsets_[e]);
      std::size_t su = cursor[u]++;
      g.neighbors_[su] = v;
      g.weights_[su] = w;
      g.edge_of_slot_[su] = e;
      std::size_t sv = cursor[v]++;
      g.neighbors_[sv] = u;
      g.weights_[sv] = w;
      g.edge_of_slot_[sv] = e;
    }

    g.strength_.assign(node_count, 0);
    for (std::size_t i = 0; i < node_count; ++i) {
      std::uint64_t s = 0;
      for (std::size_t k = g.offsets_[i]; k < g.offsets_[i + 1]; ++k) s += g.weights_[k];
      g.strength_[i] = s;
    }
    return g;
  }
};

namespace {

void check_pair(std::size_t node_count, NodeId u, NodeId v) {
  if (u >= node_count || v >= node_count) {
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                std::to_string(v));
  }
  if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
}

}  // namespace

CoauthorGraph CoauthorGraph::from_edges(std::size_t node_count, std::vector<EdgeRecord> edges,
                                        std::vector<std::uint32_t> publications,
                                        std::vector<std::string> names) {
  std::vector<JointPaper> papers;
  for (const EdgeRecord& e : edges) {
    check_pair(node_count, e.u, e.v);
    if (e.paper_sizes.empty()) throw std::invalid_argument("edge without joint papers");
    const NodeId u = std::min(e.u, e.v);
    const NodeId v = std::max(e.u, e.v);
    for (std::uint32_t l : e.paper_sizes) {
      if (l < 2) throw std::invalid_argument("joint paper with fewer than 2 authors");
      papers.push_back({u, v, l});
    }
  }
  return GraphAssembler::assemble(node_count, std::move(papers), std::move(publications),
                                  std::move(names));
}

EdgeView CoauthorGraph::edge(EdgeId e) const {
  const std::size_t lo = size_offsets_.at(e);
  const std::size_t hi = size_offsets_[e + 1];
  return EdgeView{edge_u_[e], edge_v_[e], static_cast<std::uint32_t>(hi - lo),
                  std::span<const std::uint32_t>(paper_sizes_.data() + lo, hi - lo),
                  newman_[e]};
}

std::optional<std::size_t> CoauthorGraph::slot_of(NodeId i, NodeId j) const {
  const auto nb = neighbors(i);
  const auto it = std::lower_bound(nb.begin(), nb.end(), j);
  if (it == nb.end() || *it != j) return std::nullopt;
  return static_cast<std::size_t>(it - nb.begin());
}

std::optional<EdgeId> CoauthorGraph::find_edge(NodeId i, NodeId j) const {
  check_node(i);
  check_node(j);
  const auto slot = slot_of(i, j);
  if (!slot) return std::nullopt;
  return edge_of_slot_[offsets_[i] + *slot];
}

void CoauthorGraph::check_node(NodeId i) const {
  if (i >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(i) + " out of range (" +
                            std::to_string(node_count()) + " nodes)");
  }
}

std::vector<EdgeRecord> CoauthorGraph::edge_records() const {
  std::vector<EdgeRecord> out;
  out.reserve(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const EdgeView view = edge(e);
    out.push_back({view.u, view.v, {view.paper_sizes.begin(), view.paper_sizes.end()}});
  }
  return out;
}

namespace {

CoauthorGraph project_author_lists(std::size_t node_count,
                                   std::span<const std::vector<NodeId>> papers,
                                   std::vector<std::string> names) {
  std::vector<std::uint32_t> publications(node_count, 0);
  std::vector<JointPaper> joint;
  for (const auto& authors : papers) {
    const auto l = static_cast<std::uint32_t>(authors.size());
    for (std::size_t a = 0; a < authors.size(); ++a) {
      if (authors[a] >= node_count) throw std::invalid_argument("author id out of range");
      ++publications[authors[a]];
      for (std::size_t b = a + 1; b < authors.size(); ++b) {
        check_pair(node_count, authors[a], authors[b]);
        joint.push_back({std::min(authors[a], authors[b]), std::max(authors[a], authors[b]), l});
      }
    }
  }
  return GraphAssembler::assemble(node_count, std::move(joint), std::move(publications),
                                  std::move(names));
}

}  // namespace

CoauthorGraph build_from_author_lists(std::size_t node_count,
                                      std::span<const std::vector<NodeId>> papers) {
  return project_author_lists(node_count, papers, {});
}

CoauthorGraph build_from_papers(std::span<const PaperRecord> papers) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> names;
  std::vector<std::vector<NodeId>> lists;
  lists.reserve(papers.size());
  for (const PaperRecord& paper : papers) {
    std::vector<NodeId> authors;
    for (const std::string& name : paper.authors) {
      auto [it, inserted] = index.try_emplace(name, static_cast<NodeId>(names.size()));
      if (inserted) names.push_back(name);
      if (std::find(authors.begin(), authors.end(), it->second) == authors.end()) {
        authors.push_back(it->second);
      }
    }
    lists.push_back(std::move(authors));
  }
  const std::size_t n = names.size();
  return project_author_lists(n, lists, std::move(names));
}

std::size_t common_neighbors(const CoauthorGraph& g, NodeId i, NodeId j) {
  g.check_node(i);
  g.check_node(j);
  if (i == j) throw std::invalid_argument("common_neighbors requires two distinct nodes");
  return kernels::intersect_count(g.neighbors(i), g.neighbors(j));
}

CoauthorGraph largest_component(const CoauthorGraph& g, std::vector<NodeId>* original_ids) {
  const std::size_t n = g.node_count();
  constexpr NodeId kUnseen = static_cast<NodeId>(-1);
  std::vector<NodeId> component(n, kUnseen);
  std::vector<NodeId> queue;
  NodeId best = kUnseen;
  std::size_t best_size = 0;
  NodeId next_label = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (component[root] != kUnseen) continue;
    const NodeId label = next_label++;
    queue.assign(1, root);
    component[root] = label;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId nb : g.neighbors(queue[head])) {
        if (component[nb] == kUnseen) {
          component[nb] = label;
          queue.push_back(nb);
        }
      }
    }
    // Strict comparison keeps the earliest (smallest-root) component on ties.
    if (queue.size() > best_size) {
      best_size = queue.size();
      best = label;
    }
  }

  std::vector<NodeId> new_id(n, kUnseen);
  std::vector<NodeId> kept;
  kept.reserve(best_size);
  for (NodeId i = 0; i < n; ++i) {
    if (component[i] == best) {
      new_id[i] = static_cast<NodeId>(kept.size());
      kept.push_back(i);
    }
  }

  std::vector<EdgeRecord> edges;
  std::vector<std::uint32_t> pubs;
  std::vector<std::string> names;
  pubs.reserve(kept.size());
  for (NodeId old : kept) {
    pubs.push_back(g.publications(old));
    if (g.has_names()) names.push_back(g.name(old));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeView view = g.edge(e);
    if (component[view.u] != best) continue;
    edges.push_back(
        {new_id[view.u], new_id[view.v], {view.paper_sizes.begin(), view.paper_sizes.end()}});
  }
  if (original_ids != nullptr) *original_ids = kept;
  return CoauthorGraph::from_edges(kept.size(), std::move(edges), std::move(pubs),
                                   std::move(names));
}

CoauthorGraph remove_edges(const CoauthorGraph& g,
                           std::span<const std::pair<NodeId, NodeId>> pairs) {
  std::vector<bool> drop(g.edge_count(), false);
  for (const auto& [i, j] : pairs) {
    if (const auto e = g.find_edge(i, j)) drop[*e] = true;
  }
  std::vector<EdgeRecord> edges;
  edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (drop[e]) continue;
    const EdgeView view = g.edge(e);
    edges.push_back({view.u, view.v, {view.paper_sizes.begin(), view.paper_sizes.end()}});
  }
  std::vector<std::uint32_t> pubs(g.publications().begin(), g.publications().end());
  std::vector<std::string> names(g.names().begin(), g.names().end());
  return CoauthorGraph::from_edges(g.node_count(), std::move(edges), std::move(pubs),
                                   std::move(names));
}

}  // namespace asymlink
