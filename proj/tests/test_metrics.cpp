#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "asymlink/metrics.hpp"
#include "support.hpp"

using namespace asymlink;
using namespace asymlink::testing;

namespace {

// Edge (0,1) with k_0 = 2, k_1 = 5 and one common neighbor (node 2).
CoauthorGraph asymmetric_pair() {
  const std::vector<std::vector<NodeId>> lists{{0, 1, 2}, {1, 3}, {1, 4}};
  return build_from_author_lists(5, lists);
}

}  // namespace

TEST(Metrics, AsymmetricPairConfiguration) {
  const CoauthorGraph g = asymmetric_pair();
  ASSERT_EQ(g.degree(0), 2u);
  ASSERT_EQ(g.degree(1), 4u);
  // Give node 1 a fifth neighbor.
  const std::vector<std::vector<NodeId>> lists{{0, 1, 2}, {1, 3}, {1, 4}, {1, 5}};
  const CoauthorGraph h = build_from_author_lists(6, lists);
  ASSERT_EQ(h.degree(1), 5u);
  EXPECT_DOUBLE_EQ(symmetric_overlap(h, 0, 1), 0.25);
  EXPECT_DOUBLE_EQ(asymmetric_overlap(h, 0, 1), 1.0);
  EXPECT_DOUBLE_EQ(asymmetric_overlap(h, 1, 0), 0.25);
  EXPECT_DOUBLE_EQ(edge_clustering(h, 0, 1), 1.0);
  // p_0 = 1 and w_01 = 1, while node 1 has four papers.
  EXPECT_DOUBLE_EQ(asymmetric_tie_strength(h, 0, 1), 1.0);
  EXPECT_LT(asymmetric_tie_strength(h, 1, 0), asymmetric_tie_strength(h, 0, 1));
}

TEST(Metrics, ToyNetworkValues) {
  const CoauthorGraph g = toy_graph();
  EXPECT_EQ(symmetric_overlap(g, kA, kB), 0.5);
  EXPECT_EQ(asymmetric_overlap(g, kA, kB), 1.0);
  EXPECT_EQ(asymmetric_overlap(g, kB, kA), 0.5);
  EXPECT_EQ(newman_tie_strength(g, kA, kZ), 1.5);
  EXPECT_EQ(asymmetric_tie_strength(g, kA, kZ), 1.0);
  EXPECT_EQ(asymmetric_tie_strength(g, kZ, kA), 2.0 / 3.0);
  EXPECT_EQ(edge_clustering(g, kA, kB), 1.0);
  EXPECT_EQ(newman_tie_strength(g, kB, kC), 1.0);
  EXPECT_EQ(newman_tie_strength(g, kA, kB), 0.5);
}

TEST(Metrics, DegenerateDenominators) {
  const std::vector<std::vector<NodeId>> dyad{{0, 1}};
  const CoauthorGraph g = build_from_author_lists(2, dyad);
  EXPECT_EQ(symmetric_overlap(g, 0, 1), 0.0);
  EXPECT_EQ(asymmetric_overlap(g, 0, 1), 0.0);
  EXPECT_EQ(edge_clustering(g, 0, 1), 0.0);
  // pendant end of a longer path
  const std::vector<std::vector<NodeId>> path{{0, 1}, {1, 2}};
  const CoauthorGraph p = build_from_author_lists(3, path);
  EXPECT_EQ(asymmetric_overlap(p, 0, 1), 0.0);
  EXPECT_EQ(edge_clustering(p, 0, 1), 0.0);
}

TEST(Metrics, NonEdgeThrows) {
  const CoauthorGraph g = toy_graph();
  EXPECT_THROW(symmetric_overlap(g, kA, kC), std::invalid_argument);
  EXPECT_THROW(asymmetric_overlap(g, kA, kC), std::invalid_argument);
  EXPECT_THROW(newman_tie_strength(g, kA, kC), std::invalid_argument);
  EXPECT_THROW(asymmetric_tie_strength(g, kA, kC), std::invalid_argument);
  EXPECT_THROW(edge_clustering(g, kA, kC), std::invalid_argument);
}

TEST(Metrics, ZeroPublicationsWithEdgeIsInconsistent) {
  const CoauthorGraph g = CoauthorGraph::from_edges(2, {{0, 1, {2}}}, {0, 1});
  EXPECT_THROW(asymmetric_tie_strength(g, 0, 1), std::logic_error);
}

TEST(Metrics, InvariantsOnRandomGraphs) {
  Rng rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 5 + rng.below(40);
    const auto lists = random_author_lists(rng, n, 20 + rng.below(60), 6);
    const CoauthorGraph g = build_from_author_lists(n, lists);
    const Reference ref = Reference::from_papers(n, lists);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const EdgeView v = g.edge(e);
      const NodeId i = v.u, j = v.v;
      const double o = symmetric_overlap(g, i, j);
      const double qij = asymmetric_overlap(g, i, j), qji = asymmetric_overlap(g, j, i);
      const double c = edge_clustering(g, i, j);
      ASSERT_EQ(o, symmetric_overlap(g, j, i));
      ASSERT_EQ(c, edge_clustering(g, j, i));
      if (g.degree(i) == g.degree(j)) ASSERT_EQ(qij, qji);
      ASSERT_EQ(std::max(qij, qji), c);
      ASSERT_GE(o, 0.0);
      ASSERT_LE(o, 1.0);
      ASSERT_LE(qij, 1.0);
      if (ref.n_of(i, j) >= 1) ASSERT_LE(o, std::min(qij, qji));
      // reference values from the plain rebuild
      const double n_ij = ref.n_of(i, j);
      const double den = (ref.k(i) - 1) + (ref.k(j) - 1) - n_ij;
      ASSERT_EQ(o, den > 0 ? n_ij / den : 0.0);
      ASSERT_EQ(qij, ref.k(i) > 1 ? n_ij / (ref.k(i) - 1) : 0.0);

      const double w = v.weight;
      const double ws = newman_tie_strength(g, i, j);
      const std::uint32_t l_max = *std::max_element(v.paper_sizes.begin(), v.paper_sizes.end());
      ASSERT_LE(w / (l_max - 1.0), ws + 1e-12);
      ASSERT_LE(ws, w);
      ASSERT_NEAR(asymmetric_tie_strength(g, i, j) * g.publications(i), w, 1e-12 * w);
      ASSERT_EQ(newman_tie_strength(g, j, i), ws);
    }
  }
}

TEST(Metrics, DirectedObservationsAndCsv) {
  const CoauthorGraph g = toy_graph();
  const auto rows = directed_edge_observations(g, 2);
  ASSERT_EQ(rows.size(), 2 * g.edge_count());
  EXPECT_EQ(rows[0].i, kA);
  EXPECT_EQ(rows[0].j, kB);
  EXPECT_EQ(rows[1].i, kB);
  EXPECT_EQ(rows[1].j, kA);
  EXPECT_EQ(rows[1].asymmetric_overlap, 0.5);
  std::ostringstream out;
  write_edge_metrics_csv(out, rows);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "i,j,k_i,k_j,n,O,Q,w,w_star,v");
  EXPECT_NE(text.find("\n2,0,3,2,1,0.5,0.5,2,1.5,0.6666666666666666\n"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11);

  const auto serial = directed_edge_observations(g, 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    EXPECT_EQ(rows[r].i, serial[r].i);
    EXPECT_EQ(rows[r].asymmetric_weight, serial[r].asymmetric_weight);
  }
}
