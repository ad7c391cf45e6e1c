#include "asymlink/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asymlink/kernels.hpp"
#include "asymlink/parallel.hpp"

namespace asymlink {

namespace {

constexpr std::array<ScoreKind, kScoreKindCount> kAllKinds = {
    ScoreKind::kCN,   ScoreKind::kWCN,  ScoreKind::kJC,   ScoreKind::kQQ,
    ScoreKind::kQA,   ScoreKind::kRA,   ScoreKind::kAA,   ScoreKind::kWRA,
    ScoreKind::kAT1,  ScoreKind::kAT2,  ScoreKind::kAT3,  ScoreKind::kWAT1,
    ScoreKind::kWAT2, ScoreKind::kWAT3, ScoreKind::kMix1, ScoreKind::kMix2,
};

constexpr std::array<std::string_view, kScoreKindCount> kTokens = {
    "cn", "wcn", "jc", "qq", "qa", "ra", "aa", "wra",
    "at1", "at2", "at3", "wat1", "wat2", "wat3", "mix1", "mix2",
};

bool is_at_family(ScoreKind kind) {
  return kind == ScoreKind::kAT1 || kind == ScoreKind::kAT2 || kind == ScoreKind::kAT3;
}

double ratio_or_zero(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// Natural log with degree 1 lifted to 2.
double clamped_log_degree(std::uint32_t k) { return std::log(static_cast<double>(std::max(k, 2u))); }

// Publication count used as a denominator. Graphs assembled from bare edge
// lists may carry p = 0; those nodes are treated as having one paper.
double publication_denominator(const CoauthorGraph& g, NodeId i) {
  return static_cast<double>(std::max(g.publications(i), 1u));
}

struct PairSums {
  std::size_t n = 0;
  double wcn = 0, ra = 0, aa = 0, wra = 0;
  double at1 = 0, at2 = 0, at3 = 0;
  double wat1 = 0, wat2 = 0, wat3 = 0;
};

struct Scratch {
  std::vector<std::uint32_t> pos_i;
  std::vector<std::uint32_t> pos_j;
};

PairSums accumulate(const CoauthorGraph& g, NodeId i, NodeId j, bool with_triads) {
  g.check_node(i);
  g.check_node(j);
  if (i == j) throw std::invalid_argument("similarity scores require two distinct nodes");

  thread_local Scratch scratch;
  const auto nb_i = g.neighbors(i);
  const auto nb_j = g.neighbors(j);
  const std::size_t cap = std::min(nb_i.size(), nb_j.size());
  if (scratch.pos_i.size() < cap) {
    scratch.pos_i.resize(cap);
    scratch.pos_j.resize(cap);
  }

  PairSums s;
  s.n = kernels::intersect_positions(nb_i, nb_j, scratch.pos_i.data(), scratch.pos_j.data());
  if (s.n == 0) return s;

  const auto w_i = g.weights(i);
  const auto w_j = g.weights(j);
  const double k_i = g.degree(i);
  const double k_j = g.degree(j);
  const double p_i = publication_denominator(g, i);
  const double p_j = publication_denominator(g, j);

  for (std::size_t t = 0; t < s.n; ++t) {
    const NodeId z = nb_i[scratch.pos_i[t]];
    const std::uint32_t w_zi = w_i[scratch.pos_i[t]];
    const std::uint32_t w_zj = w_j[scratch.pos_j[t]];
    const std::uint32_t k_z = g.degree(z);
    const double pair_weight = static_cast<double>(w_zi + w_zj);
    const double p_z = publication_denominator(g, z);

    s.wcn += pair_weight;
    s.ra += 1.0 / static_cast<double>(k_z);
    s.aa += 1.0 / std::log(static_cast<double>(k_z));
    s.wra += pair_weight / static_cast<double>(g.strength(z));
    s.wat1 += pair_weight / p_z;
    s.wat2 += static_cast<double>(w_zi) / p_i + static_cast<double>(w_zj) / p_j;
    s.wat3 += static_cast<double>(w_zi) / p_i + static_cast<double>(w_zj) / p_z;

    if (with_triads) {
      const auto nb_z = g.neighbors(z);
      const double n_iz = static_cast<double>(kernels::intersect_count(nb_i, nb_z));
      const double n_jz = static_cast<double>(kernels::intersect_count(nb_j, nb_z));
      // k_z >= 2 for any common neighbor. A pendant focal node (k = 1) has
      // n_iz = 0, so its term is 0.
      s.at1 += (n_iz + n_jz) / static_cast<double>(k_z - 1);
      s.at2 += ratio_or_zero(n_iz, k_i - 1) + ratio_or_zero(n_jz, k_j - 1);
      s.at3 += ratio_or_zero(n_iz, k_i - 1) + n_jz / static_cast<double>(k_z - 1);
    }
  }
  return s;
}

double select(const CoauthorGraph& g, NodeId i, NodeId j, const PairSums& s, ScoreKind kind,
              const MixWeights& mix) {
  if (s.n == 0) return 0.0;
  const double n = static_cast<double>(s.n);
  const double k_i = g.degree(i);
  const double k_j = g.degree(j);
  const auto qq = [&] { return n / k_i + n / k_j; };
  const auto qa = [&] { return n / clamped_log_degree(g.degree(i)) + n / clamped_log_degree(g.degree(j)); };
  switch (kind) {
    case ScoreKind::kCN:
      return n;
    case ScoreKind::kWCN:
      return s.wcn;
    case ScoreKind::kJC:
      return n / (k_i + k_j - n);
    case ScoreKind::kQQ:
      return qq();
    case ScoreKind::kQA:
      return qa();
    case ScoreKind::kRA:
      return s.ra;
    case ScoreKind::kAA:
      return s.aa;
    case ScoreKind::kWRA:
      return s.wra;
    case ScoreKind::kAT1:
      return s.at1;
    case ScoreKind::kAT2:
      return s.at2;
    case ScoreKind::kAT3:
      return s.at3;
    case ScoreKind::kWAT1:
      return s.wat1;
    case ScoreKind::kWAT2:
      return s.wat2;
    case ScoreKind::kWAT3:
      return s.wat3;
    case ScoreKind::kMix1:
      return mix.wat1 * s.wat1 + mix.qq * qq();
    case ScoreKind::kMix2:
      return mix.wat1 * s.wat1 + mix.qa * qa();
  }
  throw std::logic_error("unhandled score kind");
}

}  // namespace

std::span<const ScoreKind> all_score_kinds() { return kAllKinds; }

std::string_view score_token(ScoreKind kind) { return kTokens[static_cast<std::size_t>(kind)]; }

std::optional<ScoreKind> parse_score_token(std::string_view token) {
  for (std::size_t k = 0; k < kScoreKindCount; ++k) {
    if (kTokens[k] == token) return kAllKinds[k];
  }
  return std::nullopt;
}

std::string score_token_list() {
  std::string out;
  for (std::string_view t : kTokens) {
    if (!out.empty()) out += ',';
    out += t;
  }
  return out;
}

double score(const CoauthorGraph& g, NodeId i, NodeId j, ScoreKind kind, const MixWeights& mix) {
  return select(g, i, j, accumulate(g, i, j, is_at_family(kind)), kind, mix);
}

ScoreVector score_all(const CoauthorGraph& g, NodeId i, NodeId j, const MixWeights& mix) {
  const PairSums s = accumulate(g, i, j, true);
  ScoreVector out{};
  for (std::size_t k = 0; k < kScoreKindCount; ++k) out[k] = select(g, i, j, s, kAllKinds[k], mix);
  return out;
}

void score_kinds(const CoauthorGraph& g, NodeId i, NodeId j, std::span<const ScoreKind> kinds,
                 std::span<double> out, const MixWeights& mix) {
  if (out.size() < kinds.size()) throw std::invalid_argument("score_kinds: output too small");
  const bool triads = std::any_of(kinds.begin(), kinds.end(), is_at_family);
  const PairSums s = accumulate(g, i, j, triads);
  for (std::size_t k = 0; k < kinds.size(); ++k) out[k] = select(g, i, j, s, kinds[k], mix);
}

std::vector<ScoredPair> score_batch(const CoauthorGraph& g,
                                    std::span<const std::pair<NodeId, NodeId>> pairs,
                                    ScoreKind kind, std::size_t threads, const MixWeights& mix) {
  std::vector<ScoredPair> out(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const auto [i, j] = pairs[p];
      out[p] = ScoredPair{i, j, kind, score(g, i, j, kind, mix)};
    }
  });
  return out;
}

}  // namespace asymlink
