#pragma once

// Local similarity scores for link prediction.
//
// Every score is a sum over the common neighbors z of the pair (i, j), so all
// of them vanish when the pair has no common neighbor. Degrees, weights,
// strengths and publication counts are read from the graph passed in; the
// caller decides whether held-out edges have been removed from it.
//
//   cn   n_ij                          wcn  sum (w_zi + w_zj)
//   jc   n / (k_i + k_j - n)           qq   n/k_i + n/k_j
//   qa   n/ln k_i + n/ln k_j           ra   sum 1/k_z
//   aa   sum 1/ln k_z                  wra  sum (w_zi + w_zj)/s_z
//   at1  sum (n_zi + n_zj)/(k_z - 1)   wat1 sum (w_zi + w_zj)/p_z
//   at2  sum n_iz/(k_i-1) + n_jz/(k_j-1)
//   wat2 sum w_iz/p_i + w_jz/p_j
//   at3  sum n_iz/(k_i-1) + n_zj/(k_z-1)
//   wat3 sum w_iz/p_i + w_zj/p_z
//   mix1 wat1 + qq                     mix2 wat1 + qa
//
// n_xy inside the AT family is the common-neighbor count of the edge (x, y)
// in the supplied graph. In qa a degree of 1 is treated as 2 so the term stays
// finite.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asymlink/graph.hpp"

namespace asymlink {

enum class ScoreKind : std::uint8_t {
  kCN,
  kWCN,
  kJC,
  kQQ,
  kQA,
  kRA,
  kAA,
  kWRA,
  kAT1,
  kAT2,
  kAT3,
  kWAT1,
  kWAT2,
  kWAT3,
  kMix1,
  kMix2,
};

inline constexpr std::size_t kScoreKindCount = 16;

using ScoreVector = std::array<double, kScoreKindCount>;

/// All kinds in declaration order.
std::span<const ScoreKind> all_score_kinds();

/// Lowercase CLI/CSV token ("cn", "wat1", "mix2", ...).
std::string_view score_token(ScoreKind kind);
std::optional<ScoreKind> parse_score_token(std::string_view token);

/// Comma-separated list of every valid token.
std::string score_token_list();

/// Coefficients of the two combined scores. Unit weights give
/// mix1 = wat1 + qq and mix2 = wat1 + qa.
struct MixWeights {
  double wat1 = 1.0;
  double qq = 1.0;
  double qa = 1.0;
};

struct ScoredPair {
  NodeId i = 0;
  NodeId j = 0;
  ScoreKind kind = ScoreKind::kCN;
  double value = 0.0;
};

/// Score of one pair. Requires i != j; throws on invalid ids.
double score(const CoauthorGraph& g, NodeId i, NodeId j, ScoreKind kind,
             const MixWeights& mix = {});

/// Every kind for one pair from a single neighborhood intersection. Entry k
/// belongs to all_score_kinds()[k].
ScoreVector score_all(const CoauthorGraph& g, NodeId i, NodeId j, const MixWeights& mix = {});

/// Scores `kinds` for one pair into out[0..kinds.size()). Skips the per-neighbor
/// intersections when no AT-family score is requested.
void score_kinds(const CoauthorGraph& g, NodeId i, NodeId j, std::span<const ScoreKind> kinds,
                 std::span<double> out, const MixWeights& mix = {});

/// Elementwise score() over `pairs`, parallel, output in input order.
std::vector<ScoredPair> score_batch(const CoauthorGraph& g,
                                    std::span<const std::pair<NodeId, NodeId>> pairs,
                                    ScoreKind kind, std::size_t threads = 1,
                                    const MixWeights& mix = {});

}  // namespace asymlink
