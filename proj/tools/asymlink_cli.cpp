// asymlink: command-line front end.
//
//   asymlink ingest   --input papers.tsv [--format tsv|bipartite] [--lcc] --out DIR
//   asymlink simulate [--c --alpha --f --G --stop-nodes ...] --out DIR
//   asymlink predict  --graph DIR [--scores jc,aa] [--d N] [--seeds 1..5] --out DIR
//   asymlink analyze  --graph DIR --which distributions|relations|qv-relation --out DIR
//   asymlink metrics  --graph DIR --out DIR
//
// Every subcommand accepts --config FILE (key = value lines or a JSON object)
// and writes run.json, which can be passed back as --config.
// Exit status: 0 success, 2 usage or configuration error, 1 runtime error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "asymlink/analysis.hpp"
#include "asymlink/collab_model.hpp"
#include "asymlink/csv.hpp"
#include "asymlink/errors.hpp"
#include "asymlink/evaluation.hpp"
#include "asymlink/graph.hpp"
#include "asymlink/ingest.hpp"
#include "asymlink/kernels.hpp"
#include "asymlink/metrics.hpp"
#include "asymlink/parallel.hpp"
#include "asymlink/similarity.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

// Reads `key = value` lines (# comments, optional quotes) or a JSON object.
// Keys starting with '_' and the "subcommand" key are ignored.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw asymlink::ConfigError("cannot read config file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::pair<std::string, std::string>> items;
  auto keep = [](const std::string& key) { return !key.empty() && key[0] != '_' && key != "subcommand"; };

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw asymlink::ConfigError(path + ": " + e.what());
    }
    for (const auto& [key, value] : doc.items()) {
      if (!keep(key)) continue;
      items.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
    }
    return items;
  }

  auto trim = [](std::string v) {
    const auto lo = v.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return std::string();
    const auto hi = v.find_last_not_of(" \t\r");
    return v.substr(lo, hi - lo + 1);
  };
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw asymlink::ParseError(line_no, path + ": expected key = value");
    const std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    if (keep(key)) items.emplace_back(key, value);
  }
  return items;
}

// Turns `SUB ... --config FILE ...` into `SUB --key value ... ...` so that
// options given on the command line come later and take precedence.
std::vector<std::string> expand_config(const CLI::App& app, int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  if (args.size() < 2) return args;
  const CLI::App* sub = nullptr;
  for (const CLI::App* candidate : app.get_subcommands({})) {
    if (candidate->get_name() == args[1]) sub = candidate;
  }
  if (sub == nullptr) return args;

  std::string path;
  std::vector<std::string> rest;
  for (std::size_t k = 2; k < args.size(); ++k) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw asymlink::ConfigError("--config needs a file name");
      path = args[++k];
    } else if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
    } else {
      rest.push_back(args[k]);
    }
  }
  std::vector<std::string> out{args[0], args[1]};
  if (!path.empty()) {
    for (auto [key, value] : read_config_file(path)) {
      for (char& ch : key) {
        if (ch == '_') ch = '-';
      }
      const CLI::Option* opt = sub->get_option_no_throw("--" + key);
      if (opt == nullptr || key == "help") {
        throw asymlink::ConfigError("unknown key '" + key + "' in " + path);
      }
      if (opt->get_expected_max() == 0 || opt->get_type_size_max() == 0) {
        if (value == "true" || value == "1") out.push_back("--" + key);
        else if (value != "false" && value != "0") {
          throw asymlink::ConfigError("flag '" + key + "' expects true or false in " + path);
        }
        continue;
      }
      out.push_back("--" + key);
      out.push_back(value);
    }
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

struct Common {
  std::string out;
  std::size_t threads = 0;
};

std::size_t resolve_threads(std::size_t requested) {
  return requested > 0 ? requested : asymlink::default_thread_count();
}

void add_common(CLI::App* sub, Common& common, bool needs_out = true) {
  sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->add_option("--config", "Option values from a key = value or JSON file")->type_name("FILE");
  auto* out = sub->add_option("--out", common.out, "Output directory");
  if (needs_out) out->required();
  sub->add_option("--threads", common.threads,
                  "Worker threads (default: ASYMLINK_THREADS, then all cores)");
}

fs::path prepare_out(const Common& common) {
  fs::path dir(common.out);
  fs::create_directories(dir);
  return dir;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Echo of every option of `sub` as given or defaulted, plus `resolved`.
void write_run_json(const fs::path& dir, const CLI::App* sub, json resolved) {
  json doc;
  doc["subcommand"] = sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help" || name == "config") continue;
    if (opt->count() > 0) {
      doc[name] = opt->results().back();
    } else if (opt->get_expected_max() == 0 || opt->get_type_size_max() == 0) {
      doc[name] = "false";
    } else if (!opt->get_default_str().empty()) {
      doc[name] = opt->get_default_str();
    }
  }
  doc["_resolved"] = std::move(resolved);
  std::ofstream out = open_out(dir / "run.json");
  out << doc.dump(2) << '\n';
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  auto parse_one = [&](const std::string& token) -> std::uint64_t {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw asymlink::ConfigError("invalid seed '" + token + "'");
    return value;
  };
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      seeds.push_back(parse_one(token));
      continue;
    }
    const std::uint64_t lo = parse_one(token.substr(0, dots));
    const std::uint64_t hi = parse_one(token.substr(dots + 2));
    if (hi < lo) throw asymlink::ConfigError("empty seed range '" + token + "'");
    if (hi - lo >= 100000) throw asymlink::ConfigError("seed range too long '" + token + "'");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw asymlink::ConfigError("no seeds given");
  return seeds;
}

std::vector<asymlink::ScoreKind> parse_score_list(const std::string& text) {
  if (text == "all") {
    const auto all = asymlink::all_score_kinds();
    return {all.begin(), all.end()};
  }
  std::vector<asymlink::ScoreKind> kinds;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto kind = asymlink::parse_score_token(token);
    if (!kind) {
      throw asymlink::ConfigError("unknown score '" + token + "'; valid scores: " +
                                  asymlink::score_token_list());
    }
    kinds.push_back(*kind);
  }
  if (kinds.empty()) throw asymlink::ConfigError("no scores given; valid scores: " + asymlink::score_token_list());
  return kinds;
}

asymlink::CoauthorGraph load_input_graph(const std::string& dir) {
  if (!fs::is_directory(dir)) throw asymlink::ConfigError("graph directory not found: " + dir);
  return asymlink::load_graph(dir);
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  Common common;
  std::string input;
  std::string format = "tsv";
  bool lcc = false;
  std::optional<std::size_t> max_authors;
};

int run_ingest(const IngestArgs& a, const CLI::App* sub) {
  const auto format = asymlink::parse_paper_format(a.format);
  if (!format) throw asymlink::ConfigError("unknown format '" + a.format + "' (tsv, bipartite)");
  std::ifstream in(a.input, std::ios::binary);
  if (!in) throw asymlink::ConfigError("cannot read " + a.input);
  const auto papers = asymlink::parse_papers(in, *format, {a.max_authors});

  asymlink::CoauthorGraph full = asymlink::build_from_papers(papers);
  const std::size_t all_nodes = full.node_count();
  asymlink::CoauthorGraph graph = a.lcc ? asymlink::largest_component(full) : std::move(full);
  const double fraction =
      all_nodes == 0 ? 0.0 : static_cast<double>(graph.node_count()) / static_cast<double>(all_nodes);

  const fs::path dir = prepare_out(a.common);
  asymlink::save_graph(dir, graph);
  {
    std::ofstream out = open_out(dir / "papers.tsv");
    asymlink::write_papers_tsv(out, papers);
  }
  if (!papers.empty()) {
    std::ofstream out = open_out(dir / "size_pmf.tsv");
    asymlink::write_pmf(out, asymlink::coauthor_size_distribution(papers));
  }

  std::ostringstream stats;
  stats << graph.node_count() << " nodes, " << graph.edge_count() << " edges, lcc fraction "
        << asymlink::format_real(fraction);
  std::cout << stats.str() << '\n';
  {
    std::ofstream out = open_out(dir / "stats.txt");
    out << stats.str() << '\n';
  }
  write_run_json(dir, sub,
                 {{"papers", papers.size()},
                  {"authors", all_nodes},
                  {"nodes", graph.node_count()},
                  {"edges", graph.edge_count()},
                  {"lcc_fraction", fraction}});
  return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  Common common;
  double c = 0.4;
  std::uint32_t alpha = 3;
  double f = 0.2;
  std::uint32_t G = 7;
  std::string size_pmf;
  std::size_t stop_nodes = 10000;
  std::size_t stop_steps = 0;
  std::uint64_t seed = 1;
  bool intergroup_per_group = false;
  std::size_t realizations = 1;
};

void write_model_output(const fs::path& dir, const asymlink::ModelOutput& run) {
  asymlink::save_graph(dir, run.graph);
  std::ofstream out = open_out(dir / "papers.tsv");
  for (std::size_t k = 0; k < run.papers.size(); ++k) {
    out << 'm' << k << '\t';
    for (std::size_t a = 0; a < run.papers[k].size(); ++a) {
      if (a > 0) out << ';';
      out << run.papers[k][a];
    }
    out << '\n';
  }
}

int run_simulate(const SimulateArgs& a, const CLI::App* sub) {
  asymlink::ModelConfig config;
  config.c = a.c;
  config.alpha = a.alpha;
  config.f = a.f;
  config.G = a.G;
  if (a.size_pmf.empty()) {
    config.size_pmf = asymlink::builtin_cs_size_pmf();
  } else {
    std::ifstream in(a.size_pmf, std::ios::binary);
    if (!in) throw asymlink::ConfigError("cannot read " + a.size_pmf);
    config.size_pmf = asymlink::read_pmf(in);
  }
  config.stop_nodes = a.stop_nodes > 0 ? std::optional<std::size_t>(a.stop_nodes) : std::nullopt;
  config.stop_steps = a.stop_steps > 0 ? std::optional<std::size_t>(a.stop_steps) : std::nullopt;
  config.intergroup_per_group = a.intergroup_per_group;
  if (a.realizations == 0) throw asymlink::ConfigError("--realizations must be at least 1");
  config.seed = a.seed;
  config.validate();

  const fs::path dir = prepare_out(a.common);
  json runs = json::array();
  // Realizations are independent and run side by side.
  std::vector<asymlink::ModelOutput> outputs(a.realizations);
  asymlink::parallel_for(a.realizations, resolve_threads(a.common.threads),
                         [&](std::size_t begin, std::size_t end) {
                           for (std::size_t r = begin; r < end; ++r) {
                             asymlink::ModelConfig own = config;
                             own.seed = a.seed + r;
                             outputs[r] = asymlink::simulate(own);
                           }
                         });
  for (std::size_t r = 0; r < a.realizations; ++r) {
    config.seed = a.seed + r;
    const asymlink::ModelOutput& run = outputs[r];
    const fs::path target = a.realizations == 1 ? dir : dir / ("r" + std::to_string(r));
    write_model_output(target, run);
    std::cout << "seed " << config.seed << ": " << run.graph.node_count() << " nodes, "
              << run.graph.edge_count() << " edges, " << run.papers.size() << " papers, "
              << run.steps << " steps\n";
    runs.push_back({{"seed", config.seed},
                    {"dir", target.lexically_relative(dir).string()},
                    {"nodes", run.graph.node_count()},
                    {"edges", run.graph.edge_count()},
                    {"papers", run.papers.size()},
                    {"steps", run.steps},
                    {"groups", run.groups}});
  }
  write_run_json(dir, sub, {{"runs", runs}});
  return 0;
}

// ---------------------------------------------------------------- predict

struct PredictArgs {
  Common common;
  std::string graph;
  std::string scores = "all";
  std::optional<std::size_t> d;
  std::string seeds = "1";
  bool no_holdout = false;
  bool lcc = false;
  double mix_wat1 = 1.0;
  double mix_qq = 1.0;
  double mix_qa = 1.0;
  std::size_t curve_grid = 101;
};

int run_predict(const PredictArgs& a, const CLI::App* sub) {
  const auto kinds = parse_score_list(a.scores);
  const auto seeds = parse_seed_list(a.seeds);
  if (a.d && *a.d == 0) throw asymlink::ConfigError("--d must be positive");
  if (a.curve_grid < 2) throw asymlink::ConfigError("--curve-grid must be at least 2");
  asymlink::CoauthorGraph graph = load_input_graph(a.graph);
  if (a.lcc) graph = asymlink::largest_component(graph);

  asymlink::EvaluateOptions options;
  options.d = a.d;
  options.seeds = seeds;
  options.holdout = !a.no_holdout;
  options.threads = resolve_threads(a.common.threads);
  options.mix = {a.mix_wat1, a.mix_qq, a.mix_qa};
  options.curve_grid = a.curve_grid;
  if (!options.d) {
    options.d = asymlink::default_set_size(graph);
    if (*options.d == 0) throw asymlink::ConfigError("graph has too few qualifying edges for evaluation");
  }

  const fs::path dir = prepare_out(a.common);
  const auto summaries = asymlink::evaluate_all(graph, kinds, options);
  {
    std::ofstream out = open_out(dir / "summary.csv");
    asymlink::write_summary_csv(out, summaries);
  }
  for (const auto& s : summaries) {
    const fs::path kdir = dir / std::string(asymlink::score_token(s.kind));
    fs::create_directories(kdir);
    std::ofstream roc = open_out(kdir / "roc.csv");
    asymlink::write_curve_csv(roc, s.mean_roc, "fpr,tpr");
    std::ofstream pr = open_out(kdir / "pr.csv");
    asymlink::write_curve_csv(pr, s.mean_pr, "recall,precision");
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      const std::string suffix = "_seed" + std::to_string(seeds[k]) + ".csv";
      std::ofstream r = open_out(kdir / ("roc" + suffix));
      asymlink::write_curve_csv(r, s.roc[k], "fpr,tpr");
      std::ofstream p = open_out(kdir / ("pr" + suffix));
      asymlink::write_curve_csv(p, s.pr[k], "recall,precision");
    }
    std::cout << asymlink::score_token(s.kind) << " auc " << asymlink::format_real(s.auc_mean)
              << " prauc " << asymlink::format_real(s.prauc_mean) << '\n';
  }
  fs::create_directories(dir / "sets");
  for (std::uint64_t seed : seeds) {
    const auto set = asymlink::build_balanced_set(graph, *options.d, seed);
    std::ofstream out = open_out(dir / "sets" / ("seed" + std::to_string(seed) + ".csv"));
    asymlink::write_evaluation_set(out, set);
  }
  write_run_json(dir, sub,
                 {{"d", *options.d},
                  {"seeds", seeds},
                  {"threads", options.threads},
                  {"nodes", graph.node_count()},
                  {"edges", graph.edge_count()},
                  {"kernel", asymlink::kernels::isa_name(asymlink::kernels::active_isa())}});
  return 0;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  Common common;
  std::string graph;
  std::string which = "distributions";
  std::string papers;
  std::size_t bins_per_decade = 10;
  std::size_t min_count = 10;
  std::optional<double> v_min;
  std::optional<double> v_max;
};

int run_analyze(const AnalyzeArgs& a, const CLI::App* sub) {
  if (a.which != "distributions" && a.which != "relations" && a.which != "qv-relation") {
    throw asymlink::ConfigError("unknown --which '" + a.which + "' (distributions, relations, qv-relation)");
  }
  if (a.bins_per_decade == 0) throw asymlink::ConfigError("--bins-per-decade must be positive");
  const asymlink::CoauthorGraph g = load_input_graph(a.graph);
  const std::size_t threads = resolve_threads(a.common.threads);
  const fs::path dir = prepare_out(a.common);
  json resolved = {{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"threads", threads}};

  auto binned = [&](const std::string& name, const std::vector<double>& values) {
    std::vector<double> positive;
    for (double v : values) {
      if (v > 0.0) positive.push_back(v);
    }
    std::ofstream out = open_out(dir / ("dist_" + name + ".csv"));
    if (positive.empty()) {
      out << "x,density,count\n";
    } else {
      asymlink::write_distribution_csv(out, asymlink::log_binned_distribution(positive, a.bins_per_decade));
    }
  };

  if (a.which == "distributions") {
    fs::path papers_path = a.papers.empty() ? fs::path(a.graph) / "papers.tsv" : fs::path(a.papers);
    if (fs::exists(papers_path)) {
      std::ifstream in(papers_path, std::ios::binary);
      std::vector<double> sizes;
      for (const auto& p : asymlink::parse_papers(in, asymlink::PaperFormat::kTsv)) {
        sizes.push_back(static_cast<double>(p.authors.size()));
      }
      binned("l", sizes);
      resolved["papers"] = papers_path.string();
    } else if (!a.papers.empty()) {
      throw asymlink::ConfigError("papers file not found: " + a.papers);
    }
    std::vector<double> p, k, s, w, v;
    for (asymlink::NodeId i = 0; i < g.node_count(); ++i) {
      p.push_back(g.publications(i));
      k.push_back(g.degree(i));
      s.push_back(static_cast<double>(g.strength(i)));
    }
    for (const auto& o : asymlink::directed_edge_observations(g, threads)) {
      if (o.i < o.j) w.push_back(o.weight);
      v.push_back(o.asymmetric_weight);
    }
    binned("p", p);
    binned("k", k);
    binned("s", s);
    binned("w", w);
    binned("v", v);
  } else {
    if (g.edge_count() == 0) throw asymlink::ConfigError("graph has no edges");
    struct Combo {
      asymlink::TieStrength x;
      asymlink::Overlap y;
      const char* name;
    };
    std::vector<Combo> combos;
    if (a.which == "relations") {
      combos = {{asymlink::TieStrength::kW, asymlink::Overlap::kO, "w_O"},
                {asymlink::TieStrength::kWStar, asymlink::Overlap::kO, "wstar_O"},
                {asymlink::TieStrength::kV, asymlink::Overlap::kQ, "v_Q"}};
    } else {
      combos = {{asymlink::TieStrength::kV, asymlink::Overlap::kQ, "v_Q"}};
    }
    for (const Combo& combo : combos) {
      const auto rel = asymlink::weight_overlap_relation(g, combo.x, combo.y, a.bins_per_decade, threads);
      std::ofstream out = open_out(dir / (std::string("relation_") + combo.name + ".csv"));
      asymlink::write_relation_csv(out, rel.series);
      if (combo.x == asymlink::TieStrength::kV) {
        asymlink::FitOptions fit_options{a.min_count, a.v_min, a.v_max};
        const auto fit = asymlink::fit_power_law_exponent(rel.series, fit_options);
        std::ofstream fit_out = open_out(dir / "fit.csv");
        asymlink::write_fit_csv(fit_out, fit);
        std::cout << "beta " << asymlink::format_real(fit.beta) << " r2 " << asymlink::format_real(fit.r2)
                  << " bins " << fit.n_points << '\n';
        resolved["beta"] = fit.beta;
      }
    }
  }
  write_run_json(dir, sub, resolved);
  return 0;
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  Common common;
  std::string graph;
};

int run_metrics(const MetricsArgs& a, const CLI::App* sub) {
  const asymlink::CoauthorGraph g = load_input_graph(a.graph);
  const std::size_t threads = resolve_threads(a.common.threads);
  const fs::path dir = prepare_out(a.common);
  const auto rows = asymlink::directed_edge_observations(g, threads);
  std::ofstream out = open_out(dir / "edge_metrics.csv");
  asymlink::write_edge_metrics_csv(out, rows);
  write_run_json(dir, sub, {{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"threads", threads}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coauthorship networks with asymmetric tie metrics and link prediction"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build a coauthorship graph from paper records");
  add_common(ingest_cmd, ingest.common);
  ingest_cmd->add_option("--input,-i", ingest.input, "Paper file")->required();
  ingest_cmd->add_option("--format", ingest.format, "tsv or bipartite")->capture_default_str();
  ingest_cmd->add_flag("--lcc", ingest.lcc, "Keep only the largest connected component");
  ingest_cmd->add_option("--max-authors", ingest.max_authors, "Drop papers with more authors");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Grow a model coauthorship network");
  add_common(sim_cmd, sim.common);
  sim_cmd->add_option("--c", sim.c, "Publication probability")->capture_default_str();
  sim_cmd->add_option("--alpha", sim.alpha, "Inter-group attempts per step")->capture_default_str();
  sim_cmd->add_option("--f", sim.f, "Probability a leaving student founds a group")->capture_default_str();
  sim_cmd->add_option("--G", sim.G, "Student activity period")->capture_default_str();
  sim_cmd->add_option("--size-pmf", sim.size_pmf, "Author-count distribution file (l<TAB>p)");
  sim_cmd->add_option("--stop-nodes", sim.stop_nodes, "Node target (0: none)")->capture_default_str();
  sim_cmd->add_option("--stop-steps", sim.stop_steps, "Step target (0: none)")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Seed of the first realization")->capture_default_str();
  sim_cmd->add_flag("--intergroup-per-group", sim.intergroup_per_group,
                    "Run inter-group attempts per group instead of per pair");
  sim_cmd->add_option("--realizations", sim.realizations, "Number of runs (seeds seed, seed+1, ...)")
      ->capture_default_str();

  PredictArgs pred;
  auto* pred_cmd = app.add_subcommand("predict", "Evaluate similarity scores on balanced test sets");
  add_common(pred_cmd, pred.common);
  pred_cmd->add_option("--graph", pred.graph, "Graph directory (nodes.tsv, edges.tsv)")->required();
  pred_cmd->add_option("--scores", pred.scores, "Comma-separated score tokens or 'all'")->capture_default_str();
  pred_cmd->add_option("--d", pred.d, "Positives (and negatives) per set");
  pred_cmd->add_option("--seeds", pred.seeds, "Seeds, e.g. 1..5 or 1,4,9")->capture_default_str();
  pred_cmd->add_flag("--no-holdout", pred.no_holdout, "Score positives without removing them");
  pred_cmd->add_flag("--lcc", pred.lcc, "Evaluate on the largest connected component");
  pred_cmd->add_option("--mix-wat1", pred.mix_wat1, "Weight of wat1 in mix1/mix2")->capture_default_str();
  pred_cmd->add_option("--mix-qq", pred.mix_qq, "Weight of qq in mix1")->capture_default_str();
  pred_cmd->add_option("--mix-qa", pred.mix_qa, "Weight of qa in mix2")->capture_default_str();
  pred_cmd->add_option("--curve-grid", pred.curve_grid, "Grid points of seed-averaged curves")
      ->capture_default_str();

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "Distributions and tie-strength/overlap relations");
  add_common(an_cmd, an.common);
  an_cmd->add_option("--graph", an.graph, "Graph directory")->required();
  an_cmd->add_option("--which", an.which, "distributions, relations or qv-relation")->capture_default_str();
  an_cmd->add_option("--papers", an.papers, "Paper TSV for P(l) (default: <graph>/papers.tsv if present)");
  an_cmd->add_option("--bins-per-decade", an.bins_per_decade, "Logarithmic bins per decade")
      ->capture_default_str();
  an_cmd->add_option("--min-count", an.min_count, "Minimum samples per bin used in the fit")
      ->capture_default_str();
  an_cmd->add_option("--v-min", an.v_min, "Lower end of the fit range");
  an_cmd->add_option("--v-max", an.v_max, "Upper end of the fit range");

  MetricsArgs met;
  auto* met_cmd = app.add_subcommand("metrics", "Per-edge overlap and tie-strength table");
  add_common(met_cmd, met.common);
  met_cmd->add_option("--graph", met.graph, "Graph directory")->required();

  std::vector<std::string> args;
  try {
    args = expand_config(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*ingest_cmd) return run_ingest(ingest, ingest_cmd);
    if (*sim_cmd) return run_simulate(sim, sim_cmd);
    if (*pred_cmd) return run_predict(pred, pred_cmd);
    if (*an_cmd) return run_analyze(an, an_cmd);
    if (*met_cmd) return run_metrics(met, met_cmd);
  } catch (const asymlink::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const asymlink::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}
