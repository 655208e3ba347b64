// Copyright 2026 The lgpr Authors.
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

#include "lgpr/cli.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "lgpr/csv.h"
#include "lgpr/error.h"
#include "lgpr/experiment.h"
#include "lgpr/gamma_select.h"
#include "lgpr/graph.h"
#include "lgpr/graph_io.h"
#include "lgpr/pagerank.h"
#include "lgpr/partition_metrics.h"
#include "lgpr/spectral.h"
#include "lgpr/synth.h"

namespace lgpr {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::shared_ptr<spdlog::logger> MakeLogger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("lgpr", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("LG_PR_LOG"); env != nullptr && *env != '\0') {
    logger->set_level(spdlog::level::from_str(env));
  }
  return logger;
}

// Integer exponents are formed by repeated squaring; anything else goes
// through the eigendecomposition.
SignedGraph MakeSignedGraph(const Graph& g, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ParameterError("gamma must be > 0");
  if (gamma == std::round(gamma) && gamma <= 64.0) {
    return IntegerPowerGraph(g, static_cast<int>(gamma));
  }
  return LgammaGraph(Decompose(g), gamma);
}

NodeSet ClassMembers(const std::vector<LabeledNode>& rows, int universe, int cls,
                     const std::string& what) {
  std::vector<NodeId> members;
  for (const auto& r : rows) {
    if (r.node >= universe) {
      throw IoError(what + ": node " + std::to_string(r.node) + " is not in the graph");
    }
    if (r.label == cls) members.push_back(r.node);
  }
  if (members.empty()) {
    throw ParameterError(what + " has no node of class " + std::to_string(cls));
  }
  return NodeSet(universe, std::move(members));
}

std::string CurveCsv(const std::vector<CurvePoint>& curve) {
  std::ostringstream out;
  out << "gamma,cheeger\n";
  for (const auto& p : curve) {
    out << csv::FormatDouble(p.gamma) << ',' << csv::FormatDouble(p.cheeger) << '\n';
  }
  return out.str();
}

std::vector<double> ParseList(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(csv::ParseDouble(item, what));
  if (out.empty()) throw ParameterError(what + " is empty");
  return out;
}

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& seed, spdlog::logger& log,
                          std::ostream& err) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  err << "seed: " << s << '\n';
  log.info("no --seed given, using {}", s);
  return s;
}

struct Options {
  std::optional<std::uint64_t> seed;
  int jobs = 1;

  // build-graph
  std::string points, out;
  int k = 10;
  double sigma = 1.0;

  // shared graph inputs
  std::string graph, labels, truth;
  int num_nodes = 0;
  int cls = 0;
  std::string grid;

  // solve
  double gamma = 1.0;
  double mu = 1.0;
  bool multiclass = false;
  std::string sweep, dump_lgamma;

  // estimate-gamma
  std::string summary;

  // cheeger-curve
  std::string removal = "0.1,0.2,0.3";
  int subset_draws = 20;

  // synth
  int n = 0;
  double p_in = -1.0, p_out = -1.0;

  // experiment
  std::string plan, results;
  std::string ratio_sweep, gammas = "1,2,3,4,5,6", scheme = "uniform";
  double c_avg = 3.0, fraction = 0.01;
  int graph_draws = 20, label_draws = 5;
};

void CmdBuildGraph(const Options& o, spdlog::logger& log) {
  const FeatureMatrix x = ReadFeatureMatrix(o.points);
  log.info("read {} points of dimension {}", x.num_points(), x.dimension());
  const Graph g = BuildKnnGraph(x, o.k, o.sigma);
  log.info("graph has {} edges", g.num_edges());
  WriteEdgeList(o.out, g);
}

void CmdSolve(const Options& o, spdlog::logger& log, std::ostream& out) {
  const Graph g = o.num_nodes > 0 ? ReadEdgeList(o.graph, o.num_nodes) : ReadEdgeList(o.graph);
  const auto rows = ReadNodeClasses(o.labels);
  const SignedGraph sg = MakeSignedGraph(g, o.gamma);
  log.info("built L^gamma for gamma={} on {} nodes", o.gamma, g.num_nodes());
  const int n = g.num_nodes();

  std::ostringstream scores;
  std::optional<std::string> sweep_csv;
  if (o.multiclass) {
    for (const auto& r : rows) {
      if (r.node >= n) throw IoError(o.labels + ": node outside the graph");
    }
    const ScoreMatrix f =
        SolveMulticlass(sg, LabelAssignment::FromLabeledNodes(n, rows), o.mu);
    scores << "node";
    for (int k = 0; k < f.scores.cols(); ++k) scores << ",score_" << k;
    scores << ",assigned\n";
    for (NodeId u = 0; u < n; ++u) {
      scores << u;
      for (int k = 0; k < f.scores.cols(); ++k) {
        scores << ',' << csv::FormatDouble(f.scores(u, k));
      }
      scores << ',' << f.assignment[static_cast<std::size_t>(u)] << '\n';
    }
  } else {
    const NodeSet seeds = ClassMembers(rows, n, o.cls, o.labels);
    const ScoreVector f = SolvePageRank(sg, SeedVector::Indicator(seeds), o.mu);
    scores << "node,score\n";
    for (NodeId u = 0; u < n; ++u) scores << u << ',' << csv::FormatDouble(f.values[u]) << '\n';
    if (!o.sweep.empty()) {
      const SweepCutResult sc = SweepCut(sg, f);
      std::ostringstream s;
      s << "rank,node,q,prefix_cheeger\n";
      for (std::size_t j = 0; j < sc.permutation.size(); ++j) {
        s << j + 1 << ',' << sc.permutation[j] << ',' << csv::FormatDouble(sc.q_values[j])
          << ',';
        if (j < sc.prefix_ratios.size()) s << csv::FormatDouble(sc.prefix_ratios[j]);
        s << '\n';
      }
      sweep_csv = s.str();
      json summary = {{"tau", sc.tau},
                      {"best_index", sc.best_index},
                      {"best_set_size", sc.best_set.size()}};
      out << summary.dump() << '\n';
    }
  }
  if (!o.dump_lgamma.empty()) csv::WriteFile(o.dump_lgamma, FormatMatrix(sg.lgamma()));
  if (sweep_csv) csv::WriteFile(o.sweep, *sweep_csv);
  csv::WriteFile(o.out, scores.str());
}

void CmdEstimateGamma(const Options& o, spdlog::logger& log, std::ostream& out) {
  const Graph g = o.num_nodes > 0 ? ReadEdgeList(o.graph, o.num_nodes) : ReadEdgeList(o.graph);
  const NodeSet labeled = ClassMembers(ReadNodeClasses(o.labels), g.num_nodes(), o.cls,
                                       o.labels);
  const GammaGrid grid = o.grid.empty() ? GammaGrid::Default() : GammaGrid::Parse(o.grid);
  const GammaEstimate est = EstimateGamma(g, labeled, grid);
  log.info("walk of {} steps, proxy set of {} nodes", est.walk_steps, est.proxy_set.size());
  json summary = {{"gamma_hat", est.gamma_hat},
                  {"walk_steps", est.walk_steps},
                  {"mass_captured", est.mass_captured},
                  {"proxy_size", est.proxy_set.size()},
                  {"proxy_nodes", est.proxy_set.members()}};
  if (!o.out.empty()) csv::WriteFile(o.out, CurveCsv(est.cheeger_curve));
  if (!o.summary.empty()) {
    csv::WriteFile(o.summary, summary.dump(2) + "\n");
  } else {
    out << summary.dump() << '\n';
  }
}

void CmdCheegerCurve(const Options& o, spdlog::logger& log, std::ostream& out,
                     std::ostream& err) {
  const Graph g = o.num_nodes > 0 ? ReadEdgeList(o.graph, o.num_nodes) : ReadEdgeList(o.graph);
  const NodeSet truth = ClassMembers(ReadNodeClasses(o.truth), g.num_nodes(), o.cls, o.truth);
  const GammaGrid grid = o.grid.empty() ? GammaGrid::Default() : GammaGrid::Parse(o.grid);
  const std::vector<double> removal =
      o.removal.empty() ? std::vector<double>{} : ParseList(o.removal, "--removal");
  const std::uint64_t seed =
      removal.empty() ? o.seed.value_or(0) : ResolveSeed(o.seed, log, err);
  const CheegerCurveReport report =
      CheegerCurveExperiment(g, truth, grid, seed, removal, o.subset_draws);
  csv::WriteFile(o.out, FormatCheegerCurve(report));
  json summary = {{"gamma_star", report.gamma_star},
                  {"removal_fractions", report.removal_fractions},
                  {"removal_gamma_star_mean", report.removal_gamma_star_mean}};
  out << summary.dump() << '\n';
}

void CmdSynth(const Options& o, spdlog::logger& log, std::ostream& err) {
  const std::uint64_t seed = ResolveSeed(o.seed, log, err);
  PlantedPartitionConfig cfg{o.n, o.p_in, o.p_out, seed};
  cfg.Validate();
  const PlantedPartition pp = GeneratePlantedPartition(cfg);
  log.info("planted partition with {} edges", pp.graph.num_edges());
  std::vector<LabeledNode> truth;
  for (NodeId u = 0; u < pp.graph.num_nodes(); ++u) {
    truth.push_back({u, pp.ground_truth.Contains(u) ? 0 : 1});
  }
  const std::string edges = FormatEdgeList(pp.graph);
  const std::string classes = FormatNodeClasses(truth);
  csv::WriteFile(o.truth, classes);
  csv::WriteFile(o.out, edges);
}

RunOptions MakeRunOptions(const Options& o, spdlog::logger& log) {
  RunOptions run;
  run.jobs = o.jobs;
  run.progress = [&log](const std::string& msg) { log.info("{}", msg); };
  return run;
}

void CmdExperimentPlan(const Options& o, spdlog::logger& log, std::ostream& err) {
  std::ifstream in(o.plan);
  if (!in) throw IoError("cannot open plan " + o.plan);
  std::stringstream text;
  text << in.rdbuf();
  ExperimentPlan plan = ParsePlan(text.str(), fs::path(o.plan).parent_path());
  bool has_seed = false;
  try {
    has_seed = json::parse(text.str()).contains("seed");
  } catch (const json::exception&) {
  }
  if (o.seed || !has_seed) plan.seed = ResolveSeed(o.seed, log, err);
  const ScoredRun run = RunExperiment(plan, MakeRunOptions(o, log));
  const fs::path dir = o.results.empty() ? fs::path(".") : fs::path(o.results);
  fs::create_directories(dir);
  csv::WriteFile(dir / "results.csv", FormatResults(run));
  csv::WriteFile(dir / "summary.csv", FormatSummary(run));
}

void CmdExperimentPlanted(const Options& o, spdlog::logger& log, std::ostream& err) {
  ExperimentPlan plan;
  plan.dataset.kind = DatasetKind::kPlantedPartition;
  plan.dataset.n = o.n;
  plan.dataset.c_avg = o.c_avg;
  plan.dataset.graph_draws = o.graph_draws;
  plan.label_draws = o.label_draws;
  plan.label_fractions = {o.fraction};
  plan.label_scheme = ParseLabelScheme(o.scheme);
  std::stringstream ss(o.gammas);
  std::string item;
  while (std::getline(ss, item, ',')) plan.gammas.push_back(GammaChoice::Parse(item));
  plan.mu_grid = DefaultMuGrid();
  if (!o.grid.empty()) plan.selection_grid = GammaGrid::Parse(o.grid);
  plan.seed = ResolveSeed(o.seed, log, err);
  const std::vector<double> ratios = GammaGrid::Parse(o.ratio_sweep).values();
  plan.dataset.ratio = ratios.front();
  plan.Validate();
  const auto rows = RunRatioSweep(plan, ratios, MakeRunOptions(o, log));
  csv::WriteFile(o.out, FormatRatioSweep(rows));
}

void AddGraphInput(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph", o.graph, "edge list CSV (u,v,w)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--num-nodes", o.num_nodes, "node count when trailing nodes are isolated")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto logger = MakeLogger(err);
  Options o;
  CLI::App app{"Generalized-Laplacian PageRank toolkit", "lgpr"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build-graph", "KNN graph with Gaussian weights");
  build->add_option("--points", o.points, "feature CSV, one row per node")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("--k", o.k, "neighbors per node")->check(CLI::PositiveNumber);
  build->add_option("--sigma", o.sigma, "kernel width")->check(CLI::PositiveNumber);
  build->add_option("--out", o.out, "edge list CSV")->required();

  auto* solve = app.add_subcommand("solve", "PageRank scores for a labeled graph");
  AddGraphInput(solve, o);
  solve->add_option("--labels", o.labels, "labeled nodes CSV (node,class)")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--gamma", o.gamma, "Laplacian exponent")->check(CLI::PositiveNumber);
  solve->add_option("--mu", o.mu, "regularization")->check(CLI::PositiveNumber);
  solve->add_option("--class", o.cls, "seed class for binary mode")
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--multiclass", o.multiclass, "one score column per class");
  solve->add_option("--sweep", o.sweep, "write the sweep cut to this CSV");
  solve->add_option("--dump-lgamma", o.dump_lgamma, "write L^gamma as dense CSV");
  solve->add_option("--out", o.out, "scores CSV")->required();
  solve->get_option("--sweep")->excludes("--multiclass");

  auto* estimate = app.add_subcommand("estimate-gamma", "walk-based exponent estimate");
  AddGraphInput(estimate, o);
  estimate->add_option("--labels", o.labels, "labeled nodes CSV (node,class)")
      ->required()
      ->check(CLI::ExistingFile);
  estimate->add_option("--class", o.cls, "class whose labels are used")
      ->check(CLI::NonNegativeNumber);
  estimate->add_option("--grid", o.grid, "start:stop:step or a list (default 1:7:0.2)");
  estimate->add_option("--out", o.out, "proxy-set curve CSV");
  estimate->add_option("--summary", o.summary, "summary JSON (default: stdout)");

  auto* curve = app.add_subcommand("cheeger-curve", "Cheeger ratio of a set across gamma");
  AddGraphInput(curve, o);
  curve->add_option("--truth", o.truth, "node classes CSV (node,class)")
      ->required()
      ->check(CLI::ExistingFile);
  curve->add_option("--class", o.cls, "class forming the set")->check(CLI::NonNegativeNumber);
  curve->add_option("--grid", o.grid, "start:stop:step or a list (default 1:7:0.2)");
  curve->add_option("--removal", o.removal, "comma-separated removal fractions, or empty");
  curve->add_option("--subset-draws", o.subset_draws, "draws per removal fraction")
      ->check(CLI::PositiveNumber);
  curve->add_option("--seed", o.seed, "random seed");
  curve->add_option("--out", o.out, "curve CSV")->required();

  auto* synth = app.add_subcommand("synth", "synthetic graphs");
  synth->require_subcommand(1);
  auto* planted = synth->add_subcommand("planted-partition", "two-block planted partition");
  planted->add_option("--n", o.n, "nodes per block")->required()->check(CLI::PositiveNumber);
  planted->add_option("--p-in", o.p_in, "within-block edge probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  planted->add_option("--p-out", o.p_out, "between-block edge probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  planted->add_option("--seed", o.seed, "random seed");
  planted->add_option("--out", o.out, "edge list CSV")->required();
  planted->add_option("--truth", o.truth, "node classes CSV")->required();

  auto* experiment = app.add_subcommand("experiment", "run an experiment plan");
  experiment->add_option("--plan", o.plan, "plan JSON")->check(CLI::ExistingFile);
  experiment->add_option("--out-dir", o.results, "directory for results.csv and summary.csv");
  experiment->add_option("--seed", o.seed, "random seed (overrides the plan)");
  experiment->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  auto* sweep = experiment->add_subcommand("planted-partition", "MCC across C_out/C_in ratios");
  sweep->add_option("--ratio-sweep", o.ratio_sweep, "start:stop:step or a list")->required();
  sweep->add_option("--n", o.n, "nodes per block")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--c-avg", o.c_avg, "mean degree")->check(CLI::PositiveNumber);
  sweep->add_option("--gammas", o.gammas, "comma-separated exponents, 'hat' or 'star'");
  sweep->add_option("--graph-draws", o.graph_draws, "graph realizations")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--label-draws", o.label_draws, "label realizations per graph")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--fraction", o.fraction, "labeled fraction of the target block")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--scheme", o.scheme, "uniform or degree");
  sweep->add_option("--grid", o.grid, "selection grid for 'hat' and 'star'");
  sweep->add_option("--seed", o.seed, "random seed");
  sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--out", o.out, "ratio sweep CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (build->parsed()) {
      CmdBuildGraph(o, *logger);
    } else if (solve->parsed()) {
      CmdSolve(o, *logger, out);
    } else if (estimate->parsed()) {
      CmdEstimateGamma(o, *logger, out);
    } else if (curve->parsed()) {
      CmdCheegerCurve(o, *logger, out, err);
    } else if (planted->parsed()) {
      CmdSynth(o, *logger, err);
    } else if (sweep->parsed()) {
      CmdExperimentPlanted(o, *logger, err);
    } else if (experiment->parsed()) {
      if (o.plan.empty()) {
        err << "experiment: --plan or the planted-partition subcommand is required\n"
            << experiment->help();
        return kExitUsage;
      }
      CmdExperimentPlan(o, *logger, err);
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConnectivityError& e) {
    err << "connectivity error: " << e.what() << '\n';
    return kExitData;
  } catch (const DegenerateError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace lgpr
