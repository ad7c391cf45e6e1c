#pragma once

// Growth model of scientific collaboration built from research groups.
//
// A group is one leader plus up to G active students. Each step:
//   1. every group publishes one internal paper with probability c, written
//      by its leader and l - 1 of its students;
//   2. every group makes alpha attempts, each succeeding with probability c,
//      to publish with its fixed partner group: both leaders plus l - 2
//      students drawn from the two groups' combined pool;
//   3. students whose activity period exceeds G leave the group; with
//      probability f they found a new group (with a randomly chosen partner),
//      otherwise they stop publishing. Every group then gains a new student.
// Students are picked preferentially by activity period, with weight age + 1.
// The run starts from one group with one student and stops at the first step
// boundary where the node or step target is reached.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "asymlink/graph.hpp"
#include "asymlink/ingest.hpp"
#include "asymlink/rng.hpp"

namespace asymlink {

struct ModelConfig {
  double c = 0.4;
  std::uint32_t alpha = 3;
  double f = 0.2;
  std::uint32_t G = 7;
  SizePmf size_pmf;
  /// Stop once the node count reaches this value (checked after step 3).
  std::optional<std::size_t> stop_nodes = 10000;
  /// Stop after this many steps. Whichever target is hit first ends the run.
  std::optional<std::size_t> stop_steps;
  std::uint64_t seed = 1;
  /// Run alpha attempts per group rather than per partnered pair.
  bool intergroup_per_group = false;

  /// Throws ConfigError on out-of-range parameters, an empty PMF or a missing
  /// stop condition.
  void validate() const;
};

struct ModelOutput {
  CoauthorGraph graph;
  std::vector<std::vector<NodeId>> papers;  // author ids of every generated paper
  std::size_t steps = 0;
  std::size_t groups = 0;
};

ModelOutput simulate(const ModelConfig& config);

enum class PaperKind { kIntra, kInter };

/// Samples an author count from `pmf` restricted to [1, G + 1] (intra) or
/// [2, 2(G + 1)] (inter) and renormalized. Throws ConfigError when the
/// restricted range carries no mass.
std::uint32_t draw_coauthor_count(const SizePmf& pmf, PaperKind kind, std::uint32_t G, Rng& rng);

struct StudentSlot {
  NodeId id = 0;
  std::uint32_t age = 0;  // steps of activity so far
};

/// Draws min(count, |pool|) distinct students without replacement, each draw
/// proportional to age + 1. Returned in draw order.
std::vector<NodeId> select_students(std::span<const StudentSlot> pool, std::size_t count, Rng& rng);

}  // namespace asymlink
