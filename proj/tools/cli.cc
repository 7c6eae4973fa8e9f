// Copyright 2026 The commdet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "commdet/baselines.h"
#include "commdet/caa.h"
#include "commdet/clique.h"
#include "commdet/errors.h"
#include "commdet/generators.h"
#include "commdet/graph.h"
#include "commdet/graph_io.h"
#include "commdet/hashtags.h"
#include "commdet/metrics.h"
#include "commdet/parallel.h"
#include "commdet/report.h"

namespace commdet::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Sha256File(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  EVP_MD_CTX* md = EVP_MD_CTX_new();
  EVP_DigestInit_ex(md, EVP_sha256(), nullptr);
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    EVP_DigestUpdate(md, buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(md, digest, &length);
  EVP_MD_CTX_free(md);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xf];
  }
  return hex;
}

void WriteJsonFile(const json& value, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << value.dump(2) << '\n';
}

void WriteTextFile(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << text;
}

double RoundThreshold(double value) { return std::round(value * 1e9) / 1e9; }

std::vector<double> ParseGrid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("bad grid value '" + item + "'");
    }
    grid.push_back(RoundThreshold(value));
  }
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

std::vector<double> RangeGrid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start) {
    throw std::invalid_argument("grid range needs step > 0 and stop >= start");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double value = RoundThreshold(start + i * step);
    if (value > stop + 1e-12) break;
    grid.push_back(value);
  }
  return grid;
}

// Everything a subcommand records about itself in its manifest.
struct Run {
  std::string subcommand;
  fs::path output_dir;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  // Detectors write their run summary here, including DNF status.
  std::optional<std::string> summary_path;

  std::string Output(const std::string& name) {
    std::string path = (output_dir / name).string();
    outputs.push_back(path);
    return path;
  }
  const std::string& Input(const std::string& path) {
    inputs.push_back(path);
    return path;
  }
};

struct Common {
  std::uint64_t seed = 0;
  int threads = std::max(1u, std::thread::hardware_concurrency());
  double timeout_secs = 0.0;
  std::string output_dir = ".";
};

Graph LoadGraphVerbose(Run& run, const std::string& path, std::ostream& out) {
  BuildStats stats;
  Graph g = LoadGraph(run.Input(path), &stats);
  out << "graph: nodes=" << g.num_nodes() << " edges=" << g.num_edges()
      << " duplicate_edges_dropped=" << stats.duplicate_edges
      << " self_loops_dropped=" << stats.self_loops << '\n';
  return g;
}

json HistogramJson(const std::map<int, std::size_t>& histogram) {
  json result = json::object();
  for (auto [rounds, count] : histogram) result[std::to_string(rounds)] = count;
  return result;
}

double MeanSize(const std::vector<Community>& communities) {
  if (communities.empty()) return 0.0;
  double total = 0.0;
  for (const Community& c : communities) total += static_cast<double>(c.size());
  return total / static_cast<double>(communities.size());
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Overlapping community detection and evaluation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "Seed for every random choice");
  app.add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--timeout-secs", common.timeout_secs,
                 "Wall-clock budget; 0 disables")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--output-dir", common.output_dir, "Directory for outputs");

  Run run;
  std::function<void(const RunContext&)> action;
  auto bind = [&](CLI::App* sub, std::function<void(const RunContext&)> fn) {
    sub->callback([&run, &action, sub, fn = std::move(fn)] {
      run.subcommand = sub->get_name();
      action = fn;
    });
  };

  // mutualize
  std::string mutual_input;
  std::string mutual_output = "mutual.tsv";
  auto* mutualize = app.add_subcommand(
      "mutualize", "Derive the mutual undirected graph of a directed edge list");
  mutualize->add_option("--input,-i", mutual_input, "Directed edge list")
      ->required();
  mutualize->add_option("--output", mutual_output, "Output edge-list name");
  bind(mutualize, [&](const RunContext&) {
    const DirectedEdgeList directed =
        LoadDirectedEdgeList(run.Input(mutual_input));
    BuildStats stats;
    const Graph g = Mutualize(directed, &stats);
    WriteEdgeList(g, run.Output(mutual_output));
    out << "mutualize: arcs=" << stats.input_edges
        << " duplicate_arcs_dropped=" << stats.duplicate_edges
        << " self_loops_dropped=" << stats.self_loops
        << " isolated_nodes_removed=" << stats.isolated_nodes_removed
        << " nodes=" << g.num_nodes() << " edges=" << g.num_edges() << '\n';
  });

  // generate
  PlantedPartitionParams planted;
  std::string generate_output = "graph.tsv";
  std::string blocks_output = "blocks.tsv";
  auto* generate =
      app.add_subcommand("generate", "Generate a planted-partition graph");
  generate->add_option("--blocks", planted.blocks)->required();
  generate->add_option("--block-size", planted.block_size)->required();
  generate->add_option("--p-in", planted.p_in)->required();
  generate->add_option("--p-out", planted.p_out)->required();
  generate->add_option("--output", generate_output, "Edge-list name");
  generate->add_option("--blocks-output", blocks_output,
                       "Node-to-block table name");
  bind(generate, [&](const RunContext&) {
    planted.seed = common.seed;
    const Graph g = PlantedPartition(planted);
    WriteEdgeList(g, run.Output(generate_output));
    std::ofstream blocks(run.Output(blocks_output), std::ios::binary);
    std::size_t isolated = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      blocks << g.id(v) << '\t' << PlantedBlockOf(v, planted.block_size)
             << '\n';
      if (g.degree(v) == 0) ++isolated;
    }
    out << "generate: nodes=" << g.num_nodes() << " edges=" << g.num_edges()
        << " isolated_nodes=" << isolated
        << " (isolated nodes are absent from the edge list)\n";
  });

  // caa
  std::string graph_path;
  CaaParams caa_params;
  std::uint64_t clique_cap = RunContext{}.clique_cap;
  std::string caa_output = "caa.cover";
  auto* caa = app.add_subcommand("caa", "Clique augmentation communities");
  caa->add_option("--graph,-g", graph_path, "Undirected edge list")
      ->required();
  caa->add_option("--min-clique-size", caa_params.min_clique_size)
      ->capture_default_str();
  caa->add_option("--overlapping-threshold", caa_params.overlapping_threshold)
      ->capture_default_str();
  caa->add_option("--growing-threshold", caa_params.growing_threshold)
      ->capture_default_str();
  caa->add_option("--max-rounds", caa_params.max_rounds,
                  "Growth rounds per seed (default unbounded)");
  caa->add_option("--max-cliques", clique_cap, "Maximal clique cap")
      ->capture_default_str();
  caa->add_option("--output", caa_output, "Cover file name");
  bind(caa, [&](const RunContext& ctx) {
    caa_params.Validate();
    const Graph g = LoadGraphVerbose(run, graph_path, out);
    run.summary_path = run.Output("caa.summary.json");
    const auto start = std::chrono::steady_clock::now();
    RunContext capped = ctx;
    capped.clique_cap = clique_cap;
    const CaaResult result = RunCaa(g, caa_params, capped);
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    WriteCover(g, result.cover, run.Output(caa_output));
    WriteJsonFile({{"status", "ok"},
                   {"maximal_cliques", result.stats.maximal_cliques},
                   {"seeds", result.stats.seeds},
                   {"communities", result.cover.size()},
                   {"duplicates_merged", result.stats.duplicates_merged},
                   {"rounds_histogram",
                    HistogramJson(result.stats.rounds_histogram)},
                   {"wall_seconds", seconds}},
                  *run.summary_path);
    out << "caa: maximal_cliques=" << result.stats.maximal_cliques
        << " seeds=" << result.stats.seeds
        << " communities=" << result.cover.size()
        << " duplicates_merged=" << result.stats.duplicates_merged
        << " wall_seconds=" << FormatDouble(seconds) << '\n';
  });

  // lp
  LpParams lp_params;
  std::string lp_output = "lp.cover";
  auto* lp = app.add_subcommand("lp", "Label propagation communities");
  lp->add_option("--graph,-g", graph_path, "Undirected edge list")->required();
  lp->add_option("--max-iterations", lp_params.max_iterations)
      ->capture_default_str();
  lp->add_option("--output", lp_output, "Cover file name");
  bind(lp, [&](const RunContext& ctx) {
    const Graph g = LoadGraphVerbose(run, graph_path, out);
    run.summary_path = run.Output("lp.summary.json");
    lp_params.seed = common.seed;
    const LpResult result = LabelPropagation(g, lp_params, ctx);
    WriteCover(g, result.cover, run.Output(lp_output));
    WriteJsonFile({{"status", "ok"},
                   {"sweeps", result.sweeps},
                   {"converged", result.converged},
                   {"communities", result.cover.size()}},
                  *run.summary_path);
    out << "lp: sweeps=" << result.sweeps
        << " converged=" << (result.converged ? "yes" : "no")
        << " communities=" << result.cover.size() << '\n';
  });

  // cpm
  CpmParams cpm_params;
  std::uint64_t kclique_cap = RunContext{}.clique_cap;
  std::string cpm_output = "cpm.cover";
  auto* cpm = app.add_subcommand("cpm", "Clique percolation communities");
  cpm->add_option("--graph,-g", graph_path, "Undirected edge list")
      ->required();
  cpm->add_option("--k", cpm_params.k, "Clique size (>= 3)")->required();
  cpm->add_option("--max-kcliques", kclique_cap, "k-clique cap")
      ->capture_default_str();
  cpm->add_option("--output", cpm_output, "Cover file name");
  bind(cpm, [&](const RunContext& ctx) {
    const Graph g = LoadGraphVerbose(run, graph_path, out);
    run.summary_path = run.Output("cpm.summary.json");
    RunContext capped = ctx;
    capped.clique_cap = kclique_cap;
    const Cover cover = CliquePercolation(g, cpm_params, capped);
    WriteCover(g, cover, run.Output(cpm_output));
    WriteJsonFile({{"status", "ok"}, {"communities", cover.size()}},
                  *run.summary_path);
    out << "cpm: communities=" << cover.size() << '\n';
  });

  // metrics
  std::vector<std::string> cover_args;
  std::string bands_text = SizeBands().ToString();
  auto* metrics = app.add_subcommand("metrics", "Evaluate one or more covers");
  metrics->add_option("--graph,-g", graph_path, "Undirected edge list")
      ->required();
  metrics
      ->add_option("--cover,-c", cover_args,
                   "Cover file, optionally LABEL=PATH; repeatable")
      ->required();
  metrics->add_option("--bands", bands_text, "Size bands, e.g. 1-3,4-9,10+")
      ->capture_default_str();
  bind(metrics, [&](const RunContext& ctx) {
    const SizeBands bands = SizeBands::Parse(bands_text);
    const Graph g = LoadGraphVerbose(run, graph_path, out);
    std::vector<LabeledReport> reports;
    json covers = json::array();
    for (const std::string& arg : cover_args) {
      const std::size_t eq = arg.find('=');
      std::string label;
      std::string path;
      if (eq == std::string::npos) {
        path = arg;
        label = fs::path(arg).stem().string();
      } else {
        label = arg.substr(0, eq);
        path = arg.substr(eq + 1);
      }
      const Cover cover = LoadCover(g, run.Input(path));
      MetricsReport report = Evaluate(g, cover, bands, ctx);
      covers.push_back({{"label", label}, {"report", ToJson(report)}});
      reports.emplace_back(label, std::move(report));
    }
    WriteJsonFile({{"bands", bands.ToString()}, {"covers", covers}},
                  run.Output("metrics.json"));
    std::ofstream csv(run.Output("metrics.csv"), std::ios::binary);
    WriteBandCsv(reports, csv);
    std::ostringstream table;
    WriteMetricsTable(reports, table);
    WriteTextFile(table.str(), run.Output("metrics.txt"));
    out << table.str();
  });

  // sweep
  std::string sweep_kind;
  std::string grid_text;
  std::optional<double> grid_start;
  std::optional<double> grid_stop;
  std::optional<double> grid_step;
  std::optional<int> sweep_min_size;
  std::string sweep_bands_text = SizeBands().ToString();
  auto* sweep = app.add_subcommand(
      "sweep", "Threshold sweeps: community sizes vs growing threshold, or "
               "kept cliques vs overlapping threshold");
  sweep->add_option("--graph,-g", graph_path, "Undirected edge list")
      ->required();
  sweep->add_option("--sweep", sweep_kind, "growing | overlapping")
      ->required()
      ->check(CLI::IsMember({"growing", "overlapping"}));
  sweep->add_option("--grid", grid_text, "Comma-separated threshold values");
  sweep->add_option("--grid-start", grid_start);
  sweep->add_option("--grid-stop", grid_stop);
  sweep->add_option("--grid-step", grid_step);
  sweep->add_option("--min-clique-size", sweep_min_size,
                    "Clique floor (default 3 growing, 15 overlapping)");
  sweep->add_option("--max-cliques", clique_cap, "Maximal clique cap")
      ->capture_default_str();
  sweep->add_option("--bands", sweep_bands_text, "Size bands")
      ->capture_default_str();
  bind(sweep, [&](const RunContext& ctx) {
    const bool growing = sweep_kind == "growing";
    std::vector<double> grid;
    if (!grid_text.empty()) {
      grid = ParseGrid(grid_text);
    } else if (grid_start || grid_stop || grid_step) {
      grid = RangeGrid(grid_start.value_or(0.0), grid_stop.value_or(1.0),
                       grid_step.value_or(0.1));
    } else {
      grid = growing ? std::vector<double>{0.5, 0.7, 0.9}
                     : RangeGrid(0.0, 1.0, 0.1);
    }
    const int min_size = sweep_min_size.value_or(growing ? 3 : 15);
    const SizeBands bands = SizeBands::Parse(sweep_bands_text);
    const Graph g = LoadGraphVerbose(run, graph_path, out);
    RunContext capped = ctx;
    capped.clique_cap = clique_cap;
    const CliqueSet cliques = EnumerateMaximalCliques(g, min_size, capped);

    if (growing) {
      const CliqueSet seeds = FilterOverlapping(cliques, 0.0);
      std::ofstream csv(run.Output("sweep_growing.csv"), std::ios::binary);
      csv << "growing_threshold,band,count,percentage\n";
      json rows = json::array();
      for (double t : grid) {
        const Cover cover = GrowSeeds(g, seeds.cliques, t,
                                      CaaParams::kUnboundedRounds, ctx);
        const SizeHistogram h = ComputeSizeHistogram(cover, bands);
        for (std::size_t b = 0; b < bands.size(); ++b) {
          csv << FormatDouble(t) << ',' << bands.bands()[b].Label() << ','
              << h.counts[b] << ',' << FormatDouble(h.percentages[b]) << '\n';
        }
        rows.push_back({{"growing_threshold", t},
                        {"seeds", seeds.cliques.size()},
                        {"communities", cover.size()},
                        {"mean_seed_size", MeanSize(seeds.cliques)},
                        {"mean_size", MeanSize(cover)}});
        out << "growing_threshold=" << FormatDouble(t)
            << " communities=" << cover.size()
            << " mean_size=" << FormatDouble(MeanSize(cover)) << '\n';
      }
      WriteJsonFile({{"min_clique_size", min_size},
                     {"overlapping_threshold", 0.0},
                     {"maximal_cliques", cliques.cliques.size()},
                     {"rows", rows}},
                    run.Output("sweep_growing.json"));
    } else {
      std::ofstream csv(run.Output("sweep_overlapping.csv"), std::ios::binary);
      csv << "overlapping_threshold,min_clique_size,maximal_cliques,"
             "kept_cliques\n";
      for (double t : grid) {
        const CliqueSet kept = FilterOverlapping(cliques, t);
        csv << FormatDouble(t) << ',' << min_size << ','
            << cliques.cliques.size() << ',' << kept.cliques.size() << '\n';
        out << "overlapping_threshold=" << FormatDouble(t)
            << " kept_cliques=" << kept.cliques.size() << '\n';
      }
    }
  });

  // hashtag-report
  std::string cover_path;
  std::string hashtag_path;
  std::size_t size_lo = 10;
  std::size_t size_hi = 150;
  std::size_t sample_count = 50;
  std::size_t top_k = 10;
  std::size_t top_community = 20;
  std::size_t users_shown = 3;
  bool preserve_case = false;
  auto* hashtag = app.add_subcommand(
      "hashtag-report", "Hashtag themes of sampled communities");
  hashtag->add_option("--graph,-g", graph_path, "Undirected edge list")
      ->required();
  hashtag->add_option("--cover,-c", cover_path, "Cover file")->required();
  hashtag->add_option("--hashtags", hashtag_path, "user<TAB>tag<TAB>count")
      ->required();
  hashtag->add_option("--size-lo", size_lo)->capture_default_str();
  hashtag->add_option("--size-hi", size_hi)->capture_default_str();
  hashtag->add_option("--count", sample_count, "Communities to sample")
      ->capture_default_str();
  hashtag->add_option("--top-k", top_k, "Tags per user")->capture_default_str();
  hashtag->add_option("--top-community", top_community, "Tags per community")
      ->capture_default_str();
  hashtag->add_option("--users-shown", users_shown,
                      "Users listed per community in the digest")
      ->capture_default_str();
  hashtag->add_flag("--preserve-case", preserve_case,
                    "Do not fold hashtag case");
  bind(hashtag, [&](const RunContext&) {
    const Graph g = LoadGraphVerbose(run, graph_path, out);
    const Cover cover = LoadCover(g, run.Input(cover_path));
    const HashtagTable table =
        LoadHashtags(run.Input(hashtag_path), preserve_case);
    const Cover sample =
        SampleCommunities(cover, size_lo, size_hi, sample_count, common.seed);

    json communities = json::array();
    std::ostringstream digest;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const Community& c = sample[i];
      const CommunityTheme theme =
          ComputeCommunityTheme(g, c, table, top_k, top_community);
      std::vector<std::string> ids;
      for (NodeId v : c) ids.push_back(g.id(v));
      std::sort(ids.begin(), ids.end());

      json users = json::array();
      digest << "Community " << i + 1 << " (size " << c.size()
             << ", members with hashtags " << theme.members_with_data << ")\n";
      std::size_t shown = 0;
      for (const std::string& id : ids) {
        if (shown == users_shown) break;
        const auto top = UserTopK(table, id, top_k);
        if (top.empty()) continue;
        ++shown;
        json tags = json::array();
        digest << "  User " << id << ":";
        for (std::size_t t = 0; t < top.size(); ++t) {
          tags.push_back({{"tag", "#" + top[t].tag}, {"count", top[t].count}});
          digest << (t == 0 ? " " : ", ") << '#' << top[t].tag << ' '
                 << top[t].count;
        }
        digest << '\n';
        users.push_back({{"user", id}, {"top_tags", tags}});
      }
      digest << "  Community:";
      for (std::size_t t = 0; t < theme.top_tags.size(); ++t) {
        digest << (t == 0 ? " " : ", ") << '#' << theme.top_tags[t].tag << ' '
               << theme.top_tags[t].count;
      }
      digest << "\n  mean pairwise Jaccard: "
             << (theme.mean_pairwise_jaccard
                     ? FormatDouble(*theme.mean_pairwise_jaccard)
                     : std::string("n/a"))
             << ", top tag penetration: "
             << (theme.top_tag_penetration
                     ? FormatDouble(*theme.top_tag_penetration)
                     : std::string("n/a"))
             << "\n\n";
      json entry = ToJson(theme);
      entry["members"] = ids;
      entry["users"] = users;
      communities.push_back(std::move(entry));
    }
    WriteJsonFile({{"size_lo", size_lo},
                   {"size_hi", size_hi},
                   {"requested", sample_count},
                   {"sampled", sample.size()},
                   {"preserve_case", preserve_case},
                   {"communities", communities}},
                  run.Output("hashtag_report.json"));
    WriteTextFile(digest.str(), run.Output("hashtag_report.txt"));
    out << "hashtag-report: sampled=" << sample.size() << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  run.output_dir = common.output_dir;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  std::string message;
  try {
    fs::create_directories(run.output_dir);
    action(RunContext::WithTimeout(common.timeout_secs, common.threads));
  } catch (const ResourceError& e) {
    code = kExitResource;
    message = e.what();
  } catch (const std::invalid_argument& e) {
    code = kExitUsage;
    message = e.what();
  } catch (const std::exception& e) {
    code = kExitInput;
    message = e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (code != kExitOk) err << run.subcommand << ": error: " << message << '\n';

  try {
    if (code == kExitResource && run.summary_path) {
      WriteJsonFile({{"status", "DNF"}, {"reason", message}},
                    *run.summary_path);
    }
    json params = json::object();
    params["seed"] = common.seed;
    params["threads"] = common.threads;
    params["timeout_secs"] = common.timeout_secs;
    params["output_dir"] = common.output_dir;
    for (const CLI::App* sub : app.get_subcommands()) {
      for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name() == "--help" || opt->get_name().empty()) continue;
        std::vector<std::string> values = opt->results();
        if (values.empty()) {
          const std::string def = opt->get_default_str();
          if (def.empty()) continue;
          values.push_back(def);
        }
        params[opt->get_name()] =
            values.size() == 1 ? json(values[0]) : json(values);
      }
    }
    json inputs = json::array();
    for (const std::string& path : run.inputs) {
      json entry = {{"path", path}};
      std::error_code ec;
      if (fs::is_regular_file(path, ec)) entry["sha256"] = Sha256File(path);
      inputs.push_back(std::move(entry));
    }
    if (fs::is_directory(run.output_dir)) {
      WriteJsonFile({{"subcommand", run.subcommand},
                     {"parameters", params},
                     {"inputs", inputs},
                     {"outputs", run.outputs},
                     {"status", code == kExitOk ? "ok" : "error"},
                     {"exit_code", code},
                     {"error", message},
                     {"wall_seconds", seconds}},
                    (run.output_dir / (run.subcommand + ".manifest.json"))
                        .string());
    }
  } catch (const std::exception& e) {
    err << run.subcommand << ": cannot write manifest: " << e.what() << '\n';
    if (code == kExitOk) code = kExitInput;
  }
  return code;
}

}  // namespace commdet::cli
