#pragma once

// Shared fixtures: the four-paper toy network, random paper lists and a
// brute-force reference built directly from papers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "asymlink/graph.hpp"
#include "asymlink/rng.hpp"
#include "asymlink/similarity.hpp"

namespace asymlink::testing {

// P1{a,b,z} P2{b,c} P3{z,c} P4{a,z}; ids a=0 b=1 z=2 c=3.
inline constexpr NodeId kA = 0, kB = 1, kZ = 2, kC = 3;

inline std::vector<PaperRecord> toy_papers() {
  return {{"P1", {"a", "b", "z"}}, {"P2", {"b", "c"}}, {"P3", {"z", "c"}}, {"P4", {"a", "z"}}};
}

inline CoauthorGraph toy_graph() { return build_from_papers(toy_papers()); }

/// Random author lists over `nodes` ids. Sizes are 1..max_size, so some
/// papers are single-author and some nodes stay isolated.
inline std::vector<std::vector<NodeId>> random_author_lists(Rng& rng, std::size_t nodes, std::size_t papers,
                                                            std::size_t max_size) {
  std::vector<std::vector<NodeId>> out;
  for (std::size_t p = 0; p < papers; ++p) {
    const std::size_t size = 1 + rng.below(max_size);
    std::vector<NodeId> authors;
    while (authors.size() < std::min(size, nodes)) {
      const auto a = static_cast<NodeId>(rng.below(nodes));
      if (std::find(authors.begin(), authors.end(), a) == authors.end()) authors.push_back(a);
    }
    out.push_back(std::move(authors));
  }
  return out;
}

/// Graph rebuilt from papers with plain containers. Neighbor lists keep
/// insertion order and are never sorted.
struct Reference {
  std::size_t n = 0;
  std::vector<std::vector<NodeId>> adj;
  std::map<std::pair<NodeId, NodeId>, std::vector<std::uint32_t>> sizes;  // key (min, max)
  std::vector<std::uint32_t> pubs;

  static Reference from_papers(std::size_t n, const std::vector<std::vector<NodeId>>& papers) {
    Reference r;
    r.n = n;
    r.adj.resize(n);
    r.pubs.assign(n, 0);
    for (const auto& authors : papers) {
      for (NodeId a : authors) ++r.pubs[a];
      for (std::size_t x = 0; x < authors.size(); ++x) {
        for (std::size_t y = x + 1; y < authors.size(); ++y) {
          const auto key = std::minmax(authors[x], authors[y]);
          auto& list = r.sizes[{key.first, key.second}];
          if (list.empty()) {
            r.adj[authors[x]].push_back(authors[y]);
            r.adj[authors[y]].push_back(authors[x]);
          }
          list.push_back(static_cast<std::uint32_t>(authors.size()));
        }
      }
    }
    return r;
  }

  bool adjacent(NodeId a, NodeId b) const {
    for (NodeId x : adj[a]) {
      if (x == b) return true;
    }
    return false;
  }
  double w(NodeId a, NodeId b) const {
    const auto key = std::minmax(a, b);
    const auto it = sizes.find({key.first, key.second});
    return it == sizes.end() ? 0.0 : static_cast<double>(it->second.size());
  }
  double k(NodeId a) const { return static_cast<double>(adj[a].size()); }
  double s(NodeId a) const {
    double total = 0;
    for (NodeId x : adj[a]) total += w(a, x);
    return total;
  }
  double p(NodeId a) const { return std::max(1.0, static_cast<double>(pubs[a])); }

  /// Common neighbors by nested scan, returned in ascending id order.
  std::vector<NodeId> common(NodeId a, NodeId b) const {
    std::vector<NodeId> out;
    for (NodeId x : adj[a]) {
      for (NodeId y : adj[b]) {
        if (x == y) out.push_back(x);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  double n_of(NodeId a, NodeId b) const { return static_cast<double>(common(a, b).size()); }

  double score(NodeId i, NodeId j, ScoreKind kind) const {
    const auto cn = common(i, j);
    if (cn.empty()) return 0.0;
    const double n = static_cast<double>(cn.size());
    const double ki = k(i), kj = k(j);
    const auto qa_log = [](double deg) { return std::log(std::max(deg, 2.0)); };
    double wcn = 0, ra = 0, aa = 0, wra = 0, at1 = 0, at2 = 0, at3 = 0, wat1 = 0, wat2 = 0, wat3 = 0;
    for (NodeId z : cn) {
      const double wzi = w(z, i), wzj = w(z, j), kz = k(z);
      const double niz = n_of(i, z), njz = n_of(j, z);
      wcn += wzi + wzj;
      ra += 1.0 / kz;
      aa += 1.0 / std::log(kz);
      wra += (wzi + wzj) / s(z);
      at1 += (niz + njz) / (kz - 1);
      at2 += (ki > 1 ? niz / (ki - 1) : 0.0) + (kj > 1 ? njz / (kj - 1) : 0.0);
      at3 += (ki > 1 ? niz / (ki - 1) : 0.0) + njz / (kz - 1);
      wat1 += (wzi + wzj) / p(z);
      wat2 += wzi / p(i) + wzj / p(j);
      wat3 += wzi / p(i) + wzj / p(z);
    }
    const double qq = n / ki + n / kj;
    const double qa = n / qa_log(ki) + n / qa_log(kj);
    switch (kind) {
      case ScoreKind::kCN: return n;
      case ScoreKind::kWCN: return wcn;
      case ScoreKind::kJC: return n / (ki + kj - n);
      case ScoreKind::kQQ: return qq;
      case ScoreKind::kQA: return qa;
      case ScoreKind::kRA: return ra;
      case ScoreKind::kAA: return aa;
      case ScoreKind::kWRA: return wra;
      case ScoreKind::kAT1: return at1;
      case ScoreKind::kAT2: return at2;
      case ScoreKind::kAT3: return at3;
      case ScoreKind::kWAT1: return wat1;
      case ScoreKind::kWAT2: return wat2;
      case ScoreKind::kWAT3: return wat3;
      case ScoreKind::kMix1: return wat1 + qq;
      case ScoreKind::kMix2: return wat1 + qa;
    }
    return -1.0;
  }
};

inline bool is_log_based(ScoreKind kind) {
  return kind == ScoreKind::kQA || kind == ScoreKind::kAA || kind == ScoreKind::kMix2;
}

inline bool is_directional(ScoreKind kind) {
  return kind == ScoreKind::kAT3 || kind == ScoreKind::kWAT3;
}

inline double relative_gap(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

}  // namespace asymlink::testing
