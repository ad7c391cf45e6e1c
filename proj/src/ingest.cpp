#include "asymlink/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "asymlink/csv.hpp"
#include "asymlink/errors.hpp"

namespace asymlink {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

template <class T>
T parse_number(std::string_view text, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

// from_chars for double is not available in every standard library we target.
double parse_real(std::string_view text, std::size_t line, const char* what) {
  const std::string copy(text);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + copy + "'");
  }
  return value;
}

void push_unique(std::vector<std::string>& authors, std::string_view name) {
  if (std::find(authors.begin(), authors.end(), name) == authors.end()) {
    authors.emplace_back(name);
  }
}

void check_field(std::string_view value, std::size_t line, const char* what) {
  if (value.empty()) throw ParseError(line, std::string("empty ") + what);
}

}  // namespace

std::optional<PaperFormat> parse_paper_format(std::string_view token) {
  if (token == "tsv") return PaperFormat::kTsv;
  if (token == "bipartite") return PaperFormat::kBipartite;
  return std::nullopt;
}

std::vector<PaperRecord> parse_papers(std::istream& in, PaperFormat format,
                                      const ParseOptions& options) {
  std::vector<PaperRecord> papers;
  std::unordered_map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "missing tab separator");
    const std::string_view id(line.data(), tab);
    const std::string_view rest = std::string_view(line).substr(tab + 1);
    check_field(id, line_no, "paper id");

    if (format == PaperFormat::kTsv) {
      if (index.contains(std::string(id))) {
        throw ParseError(line_no, "duplicate paper id '" + std::string(id) + "'");
      }
      PaperRecord record{std::string(id), {}};
      for (std::string_view name : split(rest, ';')) {
        check_field(name, line_no, "author name");
        push_unique(record.authors, name);
      }
      index.emplace(record.paper_id, papers.size());
      papers.push_back(std::move(record));
    } else {
      if (rest.find('\t') != std::string_view::npos) {
        throw ParseError(line_no, "expected exactly two fields");
      }
      check_field(rest, line_no, "author name");
      auto [it, inserted] = index.try_emplace(std::string(id), papers.size());
      if (inserted) papers.push_back(PaperRecord{std::string(id), {}});
      push_unique(papers[it->second].authors, rest);
    }
  }

  if (options.max_authors) {
    std::erase_if(papers, [&](const PaperRecord& p) { return p.authors.size() > *options.max_authors; });
  }
  return papers;
}

void write_papers_tsv(std::ostream& out, std::span<const PaperRecord> papers) {
  for (const PaperRecord& p : papers) {
    out << p.paper_id << '\t';
    for (std::size_t a = 0; a < p.authors.size(); ++a) {
      if (a > 0) out << ';';
      out << p.authors[a];
    }
    out << '\n';
  }
}

SizePmf::SizePmf(std::vector<double> mass) : mass_(std::move(mass)) {
  if (!mass_.empty() && mass_[0] != 0.0) throw ConfigError("size distribution has mass at l = 0");
  for (double m : mass_) {
    if (!(m >= 0.0)) throw ConfigError("size distribution has a negative or NaN mass");
  }
  while (!mass_.empty() && mass_.back() == 0.0) mass_.pop_back();
  const double total = std::accumulate(mass_.begin(), mass_.end(), 0.0);
  if (!(total > 0.0)) throw ConfigError("size distribution is empty");
  for (double& m : mass_) m /= total;
}

SizePmf coauthor_size_distribution(std::span<const PaperRecord> papers) {
  if (papers.empty()) throw std::invalid_argument("no papers to build a size distribution from");
  std::vector<double> counts;
  for (const PaperRecord& p : papers) {
    const std::size_t l = p.authors.size();
    if (l == 0) continue;
    if (counts.size() <= l) counts.resize(l + 1, 0.0);
    counts[l] += 1.0;
  }
  return SizePmf(std::move(counts));
}

void write_pmf(std::ostream& out, const SizePmf& pmf) {
  const auto mass = pmf.mass();
  for (std::size_t l = 1; l < mass.size(); ++l) {
    if (mass[l] > 0.0) out << l << '\t' << format_real(mass[l]) << '\n';
  }
}

SizePmf read_pmf(std::istream& in) {
  std::vector<double> mass;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2) throw ParseError(line_no, "expected 'l<TAB>probability'");
    const auto l = parse_number<std::uint32_t>(fields[0], line_no, "size");
    if (l == 0) throw ParseError(line_no, "size must be at least 1");
    const double p = parse_real(fields[1], line_no, "probability");
    if (!(p >= 0.0)) throw ParseError(line_no, "negative probability");
    if (mass.size() <= l) mass.resize(l + 1, 0.0);
    mass[l] += p;
  }
  return SizePmf(std::move(mass));
}

SizePmf builtin_cs_size_pmf() {
  // Mass for l = 1..16, then a geometric tail over 17..30 holding 6e-4.
  std::vector<double> mass = {0.0,    0.12,   0.26,   0.25,   0.17,   0.09,
                              0.048,  0.025,  0.014,  0.008,  0.005,  0.0032,
                              0.0022, 0.0015, 0.0011, 0.0008, 0.0006};
  double tail = 0.0;
  std::vector<double> shape;
  for (int l = 17; l <= 30; ++l) {
    shape.push_back(std::pow(0.8, l - 17));
    tail += shape.back();
  }
  for (double s : shape) mass.push_back(6e-4 * s / tail);
  return SizePmf(std::move(mass));
}

void write_graph(std::ostream& nodes, std::ostream& edges, const CoauthorGraph& g) {
  for (NodeId i = 0; i < g.node_count(); ++i) {
    nodes << i << '\t';
    if (g.has_names()) {
      const std::string& name = g.name(i);
      if (name.find_first_of("\t\n") != std::string::npos) {
        throw std::invalid_argument("author name contains a tab or newline: " + name);
      }
      nodes << name;
    }
    nodes << '\t' << g.publications(i) << '\n';
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeView view = g.edge(e);
    edges << view.u << '\t' << view.v << '\t' << view.weight << '\t';
    for (std::size_t k = 0; k < view.paper_sizes.size(); ++k) {
      if (k > 0) edges << ',';
      edges << view.paper_sizes[k];
    }
    edges << '\n';
  }
}

CoauthorGraph read_graph(std::istream& nodes, std::istream& edges) {
  std::vector<std::string> names;
  std::vector<std::uint32_t> pubs;
  bool any_name = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(nodes, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3) throw ParseError(line_no, "node line needs 3 fields");
    const auto id = parse_number<std::uint32_t>(fields[0], line_no, "node id");
    if (id != pubs.size()) throw ParseError(line_no, "node ids must be 0..N-1 in order");
    names.emplace_back(fields[1]);
    any_name = any_name || !fields[1].empty();
    pubs.push_back(parse_number<std::uint32_t>(fields[2], line_no, "publication count"));
  }
  if (!any_name) names.clear();

  std::vector<EdgeRecord> records;
  line_no = 0;
  while (std::getline(edges, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 4) throw ParseError(line_no, "edge line needs 4 fields");
    EdgeRecord r;
    r.u = parse_number<NodeId>(fields[0], line_no, "node id");
    r.v = parse_number<NodeId>(fields[1], line_no, "node id");
    const auto w = parse_number<std::uint32_t>(fields[2], line_no, "weight");
    for (std::string_view l : split(fields[3], ',')) {
      r.paper_sizes.push_back(parse_number<std::uint32_t>(l, line_no, "paper size"));
    }
    if (r.paper_sizes.size() != w) throw ParseError(line_no, "weight does not match paper-size count");
    if (r.u >= pubs.size() || r.v >= pubs.size() || r.u == r.v) {
      throw ParseError(line_no, "edge endpoints invalid");
    }
    if (*std::min_element(r.paper_sizes.begin(), r.paper_sizes.end()) < 2) {
      throw ParseError(line_no, "paper size below 2");
    }
    records.push_back(std::move(r));
  }
  const std::size_t node_count = pubs.size();
  return CoauthorGraph::from_edges(node_count, std::move(records), std::move(pubs), std::move(names));
}

void save_graph(const std::filesystem::path& dir, const CoauthorGraph& g) {
  std::filesystem::create_directories(dir);
  std::ofstream nodes(dir / "nodes.tsv", std::ios::binary);
  std::ofstream edges(dir / "edges.tsv", std::ios::binary);
  if (!nodes || !edges) throw std::runtime_error("cannot write graph files in " + dir.string());
  write_graph(nodes, edges, g);
  if (!nodes.flush() || !edges.flush()) throw std::runtime_error("write failed in " + dir.string());
}

CoauthorGraph load_graph(const std::filesystem::path& dir) {
  std::ifstream nodes(dir / "nodes.tsv", std::ios::binary);
  std::ifstream edges(dir / "edges.tsv", std::ios::binary);
  if (!nodes || !edges) {
    throw ConfigError("graph directory " + dir.string() + " lacks nodes.tsv/edges.tsv");
  }
  return read_graph(nodes, edges);
}

}  // namespace asymlink
