#include "asymlink/collab_model.hpp"

#include <algorithm>
#include <string>

#include "asymlink/errors.hpp"

namespace asymlink {

namespace {

struct Group {
  NodeId leader;
  std::vector<StudentSlot> students;
  std::optional<std::size_t> partner;
};

// Inverse-CDF sampler over a PMF restricted to [lo, hi].
class SizeSampler {
 public:
  SizeSampler(const SizePmf& pmf, std::uint32_t lo, std::uint32_t hi) : lo_(lo) {
    double total = 0.0;
    for (std::uint32_t l = lo; l <= hi; ++l) {
      total += pmf.probability(l);
      cdf_.push_back(total);
    }
    if (!(total > 0.0)) {
      throw ConfigError("size distribution has no mass in [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    for (double& x : cdf_) x /= total;
  }

  std::uint32_t draw(Rng& rng) const {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    // u < 1 = cdf_.back() up to rounding; clamp to the last admissible size.
    const auto idx = std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1);
    return lo_ + static_cast<std::uint32_t>(idx);
  }

 private:
  std::uint32_t lo_;
  std::vector<double> cdf_;
};

SizeSampler make_sampler(const SizePmf& pmf, PaperKind kind, std::uint32_t G) {
  if (pmf.empty()) throw ConfigError("size distribution is empty");
  return kind == PaperKind::kIntra ? SizeSampler(pmf, 1, G + 1) : SizeSampler(pmf, 2, 2 * (G + 1));
}

}  // namespace

void ModelConfig::validate() const {
  if (!(c >= 0.0 && c <= 1.0)) throw ConfigError("c must lie in [0, 1]");
  if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("f must lie in [0, 1]");
  if (G < 1) throw ConfigError("G must be at least 1");
  if (size_pmf.empty()) throw ConfigError("size distribution is empty");
  if (!stop_nodes && !stop_steps) throw ConfigError("no stop condition (nodes or steps)");
}

std::uint32_t draw_coauthor_count(const SizePmf& pmf, PaperKind kind, std::uint32_t G, Rng& rng) {
  return make_sampler(pmf, kind, G).draw(rng);
}

std::vector<NodeId> select_students(std::span<const StudentSlot> pool, std::size_t count, Rng& rng) {
  std::vector<StudentSlot> left(pool.begin(), pool.end());
  std::vector<NodeId> chosen;
  count = std::min(count, left.size());
  chosen.reserve(count);
  while (chosen.size() < count) {
    double total = 0.0;
    for (const StudentSlot& s : left) total += static_cast<double>(s.age) + 1.0;
    double target = rng.uniform() * total;
    std::size_t pick = left.size() - 1;
    for (std::size_t k = 0; k < left.size(); ++k) {
      target -= static_cast<double>(left[k].age) + 1.0;
      if (target < 0.0) {
        pick = k;
        break;
      }
    }
    chosen.push_back(left[pick].id);
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return chosen;
}

ModelOutput simulate(const ModelConfig& config) {
  config.validate();
  const SizeSampler intra = make_sampler(config.size_pmf, PaperKind::kIntra, config.G);
  const SizeSampler inter = make_sampler(config.size_pmf, PaperKind::kInter, config.G);
  Rng rng(config.seed);

  NodeId next_node = 0;
  std::vector<Group> groups;
  std::vector<std::vector<NodeId>> papers;

  // A new student's activity period includes the step in which it joins, so
  // at most G students are active at any publication stage.
  groups.push_back(Group{next_node++, {}, std::nullopt});
  groups[0].students.push_back({next_node++, 1});

  auto reached = [&](std::size_t steps) {
    if (config.stop_nodes && next_node >= *config.stop_nodes) return true;
    if (config.stop_steps && steps >= *config.stop_steps) return true;
    return false;
  };

  std::size_t steps = 0;
  std::vector<StudentSlot> pool;
  while (!reached(steps)) {
    ++steps;

    // (1) intra-group papers
    for (Group& g : groups) {
      if (!rng.bernoulli(config.c)) continue;
      const std::uint32_t l = intra.draw(rng);
      std::vector<NodeId> authors{g.leader};
      for (NodeId s : select_students(g.students, l - 1, rng)) authors.push_back(s);
      papers.push_back(std::move(authors));
    }

    // (2) inter-group papers with the fixed partner
    const std::size_t group_count = groups.size();
    for (std::size_t gi = 0; gi < group_count; ++gi) {
      const Group& g = groups[gi];
      if (!g.partner) continue;
      const std::size_t pi = *g.partner;
      // A mutually partnered pair is handled once, by its earlier group.
      if (!config.intergroup_per_group && groups[pi].partner == gi && pi < gi) continue;
      const Group& h = groups[pi];
      for (std::uint32_t attempt = 0; attempt < config.alpha; ++attempt) {
        if (!rng.bernoulli(config.c)) continue;
        const std::uint32_t l = inter.draw(rng);
        pool.assign(g.students.begin(), g.students.end());
        pool.insert(pool.end(), h.students.begin(), h.students.end());
        std::vector<NodeId> authors{g.leader, h.leader};
        for (NodeId s : select_students(pool, l - 2, rng)) authors.push_back(s);
        papers.push_back(std::move(authors));
      }
    }

    // (3) resource update
    for (std::size_t gi = 0; gi < group_count; ++gi) {
      std::vector<StudentSlot> current = std::move(groups[gi].students);
      std::vector<StudentSlot> staying;
      for (StudentSlot s : current) {
        ++s.age;
        if (s.age <= config.G) {
          staying.push_back(s);
        } else if (rng.bernoulli(config.f)) {
          const std::size_t others = groups.size();
          const auto partner = static_cast<std::size_t>(rng.below(others));
          groups.push_back(Group{s.id, {}, partner});
          // Only the initial group can still be without a partner.
          if (!groups[0].partner) groups[0].partner = groups.size() - 1;
        }
      }
      groups[gi].students = std::move(staying);
    }
    for (Group& g : groups) g.students.push_back({next_node++, 1});
  }

  ModelOutput out;
  out.graph = build_from_author_lists(next_node, papers);
  out.papers = std::move(papers);
  out.steps = steps;
  out.groups = groups.size();
  return out;
}

}  // namespace asymlink
