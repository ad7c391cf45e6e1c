#pragma once

// Text formats for papers, paper-size distributions and graphs. All formats
// are UTF-8, tab separated, with '\n' line endings.
//
//   papers, TSV        paper_id \t name1;name2;...
//   papers, BIPARTITE  paper_id \t name            (one author per line)
//   size PMF           l \t probability
//   graph nodes        i \t name \t p_i            (nodes.tsv)
//   graph edges        i \t j \t w \t l1,l2,...    (edges.tsv, i < j)

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "asymlink/graph.hpp"

namespace asymlink {

enum class PaperFormat { kTsv, kBipartite };

std::optional<PaperFormat> parse_paper_format(std::string_view token);

struct ParseOptions {
  /// Papers with more (deduplicated) authors than this are dropped.
  std::optional<std::size_t> max_authors;
};

/// Parses a paper stream. Author lists are deduplicated keeping the first
/// occurrence. Blank lines are skipped. Throws ParseError (with line number)
/// on a missing tab, an empty paper id or name, or a repeated paper id in
/// TSV mode. BIPARTITE records come out in order of first appearance.
std::vector<PaperRecord> parse_papers(std::istream& in, PaperFormat format,
                                      const ParseOptions& options = {});

void write_papers_tsv(std::ostream& out, std::span<const PaperRecord> papers);

/// Probability mass over the number of authors per paper, l >= 1.
class SizePmf {
 public:
  SizePmf() = default;

  /// mass[l] is the (unnormalized, non-negative) weight of size l; mass[0]
  /// must be 0. Normalizes; throws ConfigError when the total is 0.
  explicit SizePmf(std::vector<double> mass);

  double probability(std::uint32_t l) const { return l < mass_.size() ? mass_[l] : 0.0; }
  std::uint32_t max_size() const { return mass_.empty() ? 0 : static_cast<std::uint32_t>(mass_.size() - 1); }
  bool empty() const { return mass_.empty(); }
  std::span<const double> mass() const { return mass_; }

 private:
  std::vector<double> mass_;
};

/// Exact distribution of author counts. Throws std::invalid_argument on an
/// empty paper list.
SizePmf coauthor_size_distribution(std::span<const PaperRecord> papers);

void write_pmf(std::ostream& out, const SizePmf& pmf);

/// Reads `l \t probability` lines and renormalizes.
SizePmf read_pmf(std::istream& in);

/// Author-count distribution shaped after a large computer-science
/// bibliography: mode at l = 2..3 and a tail that leaves under one per mille
/// of papers above 16 authors.
SizePmf builtin_cs_size_pmf();

void write_graph(std::ostream& nodes, std::ostream& edges, const CoauthorGraph& g);
CoauthorGraph read_graph(std::istream& nodes, std::istream& edges);

/// nodes.tsv and edges.tsv inside `dir` (created if needed).
void save_graph(const std::filesystem::path& dir, const CoauthorGraph& g);
CoauthorGraph load_graph(const std::filesystem::path& dir);

}  // namespace asymlink
