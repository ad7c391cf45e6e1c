#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "asymlink/kernels.hpp"
#include "asymlink/similarity.hpp"
#include "support.hpp"

using namespace asymlink;
using namespace asymlink::testing;

namespace {

std::uint64_t bits(double x) {
  std::uint64_t b;
  std::memcpy(&b, &x, sizeof b);
  return b;
}

}  // namespace

TEST(Similarity, ToyPairValues) {
  const CoauthorGraph g = toy_graph();
  auto s = [&](ScoreKind kind) { return score(g, kA, kC, kind); };
  EXPECT_EQ(s(ScoreKind::kCN), 2.0);
  EXPECT_EQ(s(ScoreKind::kWCN), 5.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kJC), 1.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kQQ), 2.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kRA), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kAA), 2.0 / std::log(3.0));
  EXPECT_DOUBLE_EQ(s(ScoreKind::kQA), 4.0 / std::log(2.0));
  EXPECT_DOUBLE_EQ(s(ScoreKind::kWRA), 17.0 / 12.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kAT1), 2.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kAT2), 4.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kAT3), 3.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kWAT1), 2.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kWAT2), 2.5);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kWAT3), 7.0 / 3.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kMix1), 4.0);
  EXPECT_DOUBLE_EQ(s(ScoreKind::kMix2), 2.0 + 4.0 / std::log(2.0));
}

TEST(Similarity, ToyPairMatchesReferenceBitwise) {
  const CoauthorGraph g = toy_graph();
  const Reference ref = Reference::from_papers(4, {{0, 1, 2}, {1, 3}, {2, 3}, {0, 2}});
  for (ScoreKind kind : all_score_kinds()) {
    EXPECT_EQ(bits(score(g, kA, kC, kind)), bits(ref.score(kA, kC, kind))) << score_token(kind);
  }
}

TEST(Similarity, MatchesReferenceOnRandomGraphs) {
  Rng rng(51);
  const kernels::Isa original = kernels::active_isa();
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 6 + rng.below(60);
    const auto lists = random_author_lists(rng, n, 10 + rng.below(100), 6);
    const CoauthorGraph g = build_from_author_lists(n, lists);
    const Reference ref = Reference::from_papers(n, lists);
    kernels::set_active_isa(rep % 2 ? kernels::Isa::kAvx2 : kernels::Isa::kScalar);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        const ScoreVector all = score_all(g, i, j);
        for (std::size_t k = 0; k < kScoreKindCount; ++k) {
          const ScoreKind kind = all_score_kinds()[k];
          const double expected = ref.score(i, j, kind);
          const double got = score(g, i, j, kind);
          ASSERT_EQ(bits(all[k]), bits(got)) << score_token(kind);
          if (is_log_based(kind)) {
            ASSERT_LE(relative_gap(got, expected), 1e-12) << score_token(kind) << " " << i << "," << j;
          } else {
            ASSERT_EQ(got, expected) << score_token(kind) << " " << i << "," << j;
          }
        }
      }
    }
  }
  kernels::set_active_isa(original);
}

TEST(Similarity, SymmetricExceptDirectionalKinds) {
  Rng rng(52);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 6 + rng.below(40);
    const CoauthorGraph g = build_from_author_lists(n, random_author_lists(rng, n, 30 + rng.below(60), 5));
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        const ScoreVector ij = score_all(g, i, j), ji = score_all(g, j, i);
        for (std::size_t k = 0; k < kScoreKindCount; ++k) {
          const ScoreKind kind = all_score_kinds()[k];
          if (is_directional(kind)) continue;
          ASSERT_EQ(ij[k], ji[k]) << score_token(kind);
        }
        const auto at = [&](ScoreKind kind) { return static_cast<std::size_t>(kind); };
        ASSERT_NEAR(ij[at(ScoreKind::kAT3)] + ji[at(ScoreKind::kAT3)],
                    ij[at(ScoreKind::kAT1)] + ij[at(ScoreKind::kAT2)], 1e-9);
        ASSERT_NEAR(ij[at(ScoreKind::kWAT3)] + ji[at(ScoreKind::kWAT3)],
                    ij[at(ScoreKind::kWAT1)] + ij[at(ScoreKind::kWAT2)], 1e-9);
      }
    }
  }
}

TEST(Similarity, DirectionalKindsDifferOnToy) {
  const CoauthorGraph g = toy_graph();
  EXPECT_DOUBLE_EQ(score(g, kC, kA, ScoreKind::kAT3), 3.0);
  EXPECT_NE(score(g, kB, kZ, ScoreKind::kWAT3), score(g, kZ, kB, ScoreKind::kWAT3));
}

TEST(Similarity, ZeroWithoutCommonNeighbors) {
  Rng rng(53);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 10 + rng.below(30);
    const CoauthorGraph g = build_from_author_lists(n, random_author_lists(rng, n, 15, 4));
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        if (common_neighbors(g, i, j) > 0) continue;
        for (double v : score_all(g, i, j)) ASSERT_EQ(v, 0.0);
      }
    }
  }
}

TEST(Similarity, OrderingAndMixIdentities) {
  Rng rng(54);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 6 + rng.below(40);
    const CoauthorGraph g = build_from_author_lists(n, random_author_lists(rng, n, 40, 6));
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        const auto v = score_all(g, i, j);
        const auto at = [&](ScoreKind kind) { return v[static_cast<std::size_t>(kind)]; };
        ASSERT_GE(at(ScoreKind::kAA), at(ScoreKind::kRA));
        ASSERT_GE(at(ScoreKind::kWCN), 2 * at(ScoreKind::kCN));
        ASSERT_LE(at(ScoreKind::kJC), 1.0);
        ASSERT_GE(at(ScoreKind::kJC), 0.0);
        ASSERT_EQ(at(ScoreKind::kMix1), at(ScoreKind::kWAT1) + at(ScoreKind::kQQ));
        ASSERT_EQ(at(ScoreKind::kMix2), at(ScoreKind::kWAT1) + at(ScoreKind::kQA));
        for (double x : v) ASSERT_TRUE(std::isfinite(x));
      }
    }
  }
}

TEST(Similarity, MixWeightsScaleTerms) {
  const CoauthorGraph g = toy_graph();
  const MixWeights mix{2.0, 0.5, 3.0};
  EXPECT_DOUBLE_EQ(score(g, kA, kC, ScoreKind::kMix1, mix), 2.0 * 2.0 + 0.5 * 2.0);
  EXPECT_DOUBLE_EQ(score(g, kA, kC, ScoreKind::kMix2, mix), 2.0 * 2.0 + 3.0 * 4.0 / std::log(2.0));
}

TEST(Similarity, AddingCommonNeighborRaisesCountScores) {
  Rng rng(55);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 8 + rng.below(20);
    auto lists = random_author_lists(rng, n, 20, 4);
    const CoauthorGraph before = build_from_author_lists(n + 1, lists);
    const NodeId i = static_cast<NodeId>(rng.below(n));
    NodeId j = static_cast<NodeId>(rng.below(n));
    if (i == j) j = (j + 1) % n;
    const auto fresh = static_cast<NodeId>(n);
    lists.push_back({i, fresh});
    lists.push_back({fresh, j});
    const CoauthorGraph after = build_from_author_lists(n + 1, lists);
    EXPECT_EQ(score(after, i, j, ScoreKind::kCN), score(before, i, j, ScoreKind::kCN) + 1);
    EXPECT_GT(score(after, i, j, ScoreKind::kWCN), score(before, i, j, ScoreKind::kWCN));
    EXPECT_GT(score(after, i, j, ScoreKind::kRA), score(before, i, j, ScoreKind::kRA));
    EXPECT_GT(score(after, i, j, ScoreKind::kAA), score(before, i, j, ScoreKind::kAA));
    EXPECT_GT(score(after, i, j, ScoreKind::kWAT1), score(before, i, j, ScoreKind::kWAT1));
  }
}

TEST(Similarity, BatchEqualsSequential) {
  Rng rng(56);
  const std::size_t n = 200;
  const CoauthorGraph g = build_from_author_lists(n, random_author_lists(rng, n, 600, 5));
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (int t = 0; t < 3000; ++t) {
    const auto i = static_cast<NodeId>(rng.below(n));
    const auto j = static_cast<NodeId>(rng.below(n));
    if (i != j) pairs.emplace_back(i, j);
  }
  for (ScoreKind kind : all_score_kinds()) {
    const auto batch = score_batch(g, pairs, kind, 4);
    ASSERT_EQ(batch.size(), pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      ASSERT_EQ(batch[p].i, pairs[p].first);
      ASSERT_EQ(batch[p].j, pairs[p].second);
      ASSERT_EQ(bits(batch[p].value), bits(score(g, pairs[p].first, pairs[p].second, kind)));
    }
  }
}

TEST(Similarity, ToyBatch) {
  const CoauthorGraph g = toy_graph();
  const std::vector<std::pair<NodeId, NodeId>> pairs{{kA, kC}, {kA, kB}};
  const auto out = score_batch(g, pairs, ScoreKind::kRA);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_DOUBLE_EQ(out[0].value, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(out[1].value, 1.0 / 3.0);
  EXPECT_EQ(out[1].kind, ScoreKind::kRA);
}

TEST(Similarity, PendantFocalNodeContributesZero) {
  // 0 has the single neighbor 2, which 1 also knows.
  const std::vector<std::vector<NodeId>> lists{{0, 2}, {1, 2}, {1, 3}, {2, 3}};
  const CoauthorGraph g = build_from_author_lists(4, lists);
  ASSERT_EQ(g.degree(0), 1u);
  // z = 2: n_02 = 0 so the focal term of 0 vanishes; n_12 / (k_1 - 1) = 1.
  EXPECT_EQ(score(g, 0, 1, ScoreKind::kAT2), 1.0);
  EXPECT_EQ(score(g, 0, 1, ScoreKind::kAT3), 0.5);
  EXPECT_EQ(score(g, 0, 1, ScoreKind::kQA), 1.0 / std::log(2.0) + 1.0 / std::log(2.0));
}

TEST(Similarity, ScoreKindsSubsetMatchesScoreAll) {
  const CoauthorGraph g = toy_graph();
  const std::vector<ScoreKind> subset{ScoreKind::kQA, ScoreKind::kJC};
  std::vector<double> out(2);
  score_kinds(g, kB, kZ, subset, out);
  const auto all = score_all(g, kB, kZ);
  EXPECT_EQ(out[0], all[static_cast<std::size_t>(ScoreKind::kQA)]);
  EXPECT_EQ(out[1], all[static_cast<std::size_t>(ScoreKind::kJC)]);
}

TEST(Similarity, RejectsBadPairs) {
  const CoauthorGraph g = toy_graph();
  EXPECT_THROW(score(g, kA, kA, ScoreKind::kRA), std::invalid_argument);
  EXPECT_THROW(score(g, kA, 17, ScoreKind::kRA), std::out_of_range);
}

TEST(Similarity, TokensRoundTrip) {
  EXPECT_EQ(all_score_kinds().size(), kScoreKindCount);
  for (ScoreKind kind : all_score_kinds()) EXPECT_EQ(parse_score_token(score_token(kind)), kind);
  EXPECT_EQ(parse_score_token("wat3"), ScoreKind::kWAT3);
  EXPECT_FALSE(parse_score_token("WAT3").has_value());
  EXPECT_FALSE(parse_score_token("").has_value());
  EXPECT_NE(score_token_list().find("mix2"), std::string::npos);
}
