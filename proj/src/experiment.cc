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

#include "lgpr/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "lgpr/csv.h"
#include "lgpr/error.h"
#include "lgpr/graph_io.h"
#include "lgpr/mcc.h"
#include "lgpr/pagerank.h"
#include "lgpr/partition_metrics.h"
#include "lgpr/random.h"
#include "lgpr/spectral.h"

namespace lgpr {
namespace {

using nlohmann::json;

constexpr std::uint64_t kRatioStream = 4;

// One graph with a class id per node.
struct Dataset {
  Graph graph;
  std::vector<int> classes;
  int num_classes = 0;

  NodeSet ClassSet(int k) const {
    std::vector<NodeId> members;
    for (std::size_t u = 0; u < classes.size(); ++u) {
      if (classes[u] == k) members.push_back(static_cast<NodeId>(u));
    }
    return NodeSet(graph.num_nodes(), std::move(members));
  }
};

Dataset RestrictToLargestComponent(Dataset d) {
  const NodeSet keep = LargestComponent(d.graph);
  if (keep.size() == d.graph.num_nodes()) return d;
  Dataset out;
  out.graph = InducedSubgraph(d.graph, keep);
  for (NodeId u : keep) out.classes.push_back(d.classes[static_cast<std::size_t>(u)]);
  out.num_classes = d.num_classes;
  return out;
}

std::vector<int> ReadTruth(const std::filesystem::path& path, int n, int* num_classes) {
  std::vector<int> classes(static_cast<std::size_t>(n), -1);
  for (const LabeledNode& r : ReadNodeClasses(path)) {
    if (r.node >= n) {
      throw IoError(path.string() + ": node " + std::to_string(r.node) +
                    " outside the graph");
    }
    classes[static_cast<std::size_t>(r.node)] = r.label;
  }
  int k = 0;
  for (std::size_t u = 0; u < classes.size(); ++u) {
    if (classes[u] < 0) {
      throw IoError(path.string() + ": node " + std::to_string(u) + " has no class");
    }
    k = std::max(k, classes[u] + 1);
  }
  *num_classes = k;
  return classes;
}

Dataset LoadFileDataset(const DatasetSpec& spec) {
  Dataset d;
  if (spec.kind == DatasetKind::kFeatures) {
    d.graph = BuildKnnGraph(ReadFeatureMatrix(spec.points_path), spec.knn, spec.sigma);
  } else {
    d.graph = ReadEdgeList(spec.edges_path);
  }
  d.classes = ReadTruth(spec.truth_path, d.graph.num_nodes(), &d.num_classes);
  return d;
}

Dataset DrawPlanted(const ExperimentPlan& plan, int draw) {
  const auto cfg = plan.dataset.PlantedConfig(
      DeriveSeed(plan.seed, kGraphStream, static_cast<std::uint64_t>(draw)));
  PlantedPartition pp = GeneratePlantedPartition(cfg);
  Dataset d;
  d.graph = std::move(pp.graph);
  d.num_classes = 2;
  for (NodeId u = 0; u < d.graph.num_nodes(); ++u) {
    d.classes.push_back(pp.ground_truth.Contains(u) ? 0 : 1);
  }
  if (plan.dataset.largest_component) d = RestrictToLargestComponent(std::move(d));
  return d;
}

bool IsInteger(double gamma) {
  return gamma == std::round(gamma) && gamma >= 1.0 && gamma <= 64.0;
}

// Runs every label draw and gamma choice on one graph.
std::vector<RunCell> RunOnDataset(const ExperimentPlan& plan, const Dataset& data,
                                  int draw) {
  const int n = data.graph.num_nodes();
  const int num_gammas = static_cast<int>(plan.gammas.size());
  const bool sweep = plan.mode == ScoringMode::kSweepCut;
  if (plan.target_class >= data.num_classes) {
    throw ParameterError("target class " + std::to_string(plan.target_class) +
                         " does not exist");
  }
  std::vector<NodeSet> classes;
  for (int k = 0; k < data.num_classes; ++k) classes.push_back(data.ClassSet(k));
  const NodeSet& target = classes[static_cast<std::size_t>(plan.target_class)];
  if (target.empty() || target.size() == n) {
    throw DegenerateError("target class is empty or covers every node");
  }

  // Label draws.
  const Eigen::VectorXd degree = DegreeVector(data.graph);
  auto fraction = [&](int k) {
    return plan.label_fractions.size() == 1
               ? plan.label_fractions.front()
               : plan.label_fractions.at(static_cast<std::size_t>(k));
  };
  std::vector<LabeledSample> samples;
  for (int l = 0; l < plan.label_draws; ++l) {
    Rng rng(DeriveSeed(plan.seed, kLabelStream,
                       (static_cast<std::uint64_t>(draw) << 32) |
                           static_cast<std::uint64_t>(l)));
    if (sweep) {
      const std::vector<double> f{fraction(plan.target_class)};
      samples.push_back(SampleLabels(std::span<const NodeSet>(&target, 1), f,
                                     plan.label_scheme, rng, &degree));
    } else {
      std::vector<double> f;
      for (int k = 0; k < data.num_classes; ++k) f.push_back(fraction(k));
      samples.push_back(SampleLabels(classes, f, plan.label_scheme, rng, &degree));
    }
  }

  // Exponent per (choice, label draw).
  bool need_decomp = false;
  for (const auto& c : plan.gammas) {
    need_decomp |= c.kind != GammaChoiceKind::kFixed || !IsInteger(c.value);
  }
  std::optional<SpectralDecomposition> decomp;
  if (need_decomp) decomp.emplace(Decompose(data.graph));
  std::optional<double> gamma_star;
  std::vector<std::vector<double>> gamma_used(
      static_cast<std::size_t>(num_gammas),
      std::vector<double>(static_cast<std::size_t>(plan.label_draws), 1.0));
  for (int c = 0; c < num_gammas; ++c) {
    const GammaChoice& choice = plan.gammas[static_cast<std::size_t>(c)];
    for (int l = 0; l < plan.label_draws; ++l) {
      double g = choice.value;
      if (choice.kind == GammaChoiceKind::kOracle) {
        if (!gamma_star) {
          gamma_star = FindOracleGamma(*decomp, target, plan.selection_grid).gamma_star;
        }
        g = *gamma_star;
      } else if (choice.kind == GammaChoiceKind::kEstimated) {
        g = EstimateGamma(data.graph, *decomp,
                          samples[static_cast<std::size_t>(l)].per_class.front(),
                          plan.selection_grid)
                .gamma_hat;
      }
      gamma_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)] = g;
    }
  }

  std::vector<RunCell> cells(static_cast<std::size_t>(num_gammas * plan.label_draws));
  auto cell = [&](int c, int l) -> RunCell& {
    return cells[static_cast<std::size_t>(l * num_gammas + c)];
  };
  for (int c = 0; c < num_gammas; ++c) {
    for (int l = 0; l < plan.label_draws; ++l) {
      RunCell& rc = cell(c, l);
      rc.gamma = plan.gammas[static_cast<std::size_t>(c)].Label();
      rc.graph_draw = draw;
      rc.label_draw = l;
      rc.gamma_used = gamma_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)];
      rc.mcc = -2.0;  // below any attainable MCC
    }
  }

  std::map<double, std::vector<std::pair<int, int>>> by_gamma;
  for (int c = 0; c < num_gammas; ++c) {
    for (int l = 0; l < plan.label_draws; ++l) {
      by_gamma[cell(c, l).gamma_used].emplace_back(c, l);
    }
  }

  for (const auto& [gamma, members] : by_gamma) {
    const SignedGraph sg = (decomp && !IsInteger(gamma))
                               ? LgammaGraph(*decomp, gamma)
                               : IntegerPowerGraph(data.graph, static_cast<int>(gamma));
    const double truth_h = CheegerRatio(sg, target).ratio;
    for (std::size_t m = 0; m < plan.mu_grid.size(); ++m) {
      const double mu = plan.mu_grid[m];
      const PageRankSolver solver(sg, mu);
      for (const auto& [c, l] : members) {
        const LabeledSample& sample = samples[static_cast<std::size_t>(l)];
        double score = 0.0;
        if (sweep) {
          const ScoreVector f = solver.Solve(SeedVector::Indicator(sample.per_class.front()));
          score = Mcc(SweepCut(sg, f).best_set, target);
        } else {
          const LabelAssignment labels(n, sample.per_class);
          const std::vector<int> assigned =
              AssignClasses(solver.SolveColumns(labels.SeedMatrix()));
          score = Mcc(assigned, data.classes);
        }
        RunCell& rc = cell(c, l);
        rc.truth_cheeger = truth_h;
        if (score > rc.mcc) {
          rc.mcc = score;
          rc.best_mu = mu;
        }
      }
    }
  }
  return cells;
}

std::string WithContext(const std::string& what, int draw) {
  return "graph draw " + std::to_string(draw) + ": " + what;
}

template <typename E>
[[noreturn]] void Rethrow(const E& e, int draw) {
  throw E(WithContext(e.what(), draw));
}

std::vector<RunCell> RunDrawWithContext(const ExperimentPlan& plan,
                                        const Dataset* shared, int draw) {
  try {
    if (shared != nullptr) return RunOnDataset(plan, *shared, draw);
    return RunOnDataset(plan, DrawPlanted(plan, draw), draw);
  } catch (const ParameterError& e) {
    Rethrow(e, draw);
  } catch (const IoError& e) {
    Rethrow(e, draw);
  } catch (const DegenerateError& e) {
    Rethrow(e, draw);
  } catch (const ConnectivityError& e) {
    Rethrow(e, draw);
  } catch (const NumericalError& e) {
    Rethrow(e, draw);
  }
}

double GetNumber(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    throw ParameterError(std::string("plan field '") + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

int GetInt(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) {
    throw ParameterError(std::string("plan field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

std::string GetString(const json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) {
    throw ParameterError(std::string("plan field '") + key + "' must be a string");
  }
  return j.at(key).get<std::string>();
}

std::vector<double> GetNumbers(const json& j, const char* key) {
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) {
      throw ParameterError(std::string("plan field '") + key + "' must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

PlantedPartitionConfig DatasetSpec::PlantedConfig(std::uint64_t seed) const {
  if (p_in >= 0.0 && p_out >= 0.0) {
    PlantedPartitionConfig cfg{n, p_in, p_out, seed};
    cfg.Validate();
    return cfg;
  }
  if (c_avg > 0.0 && ratio >= 0.0) {
    return PlantedPartitionConfig::FromAverageDegree(n, c_avg, ratio, seed);
  }
  if (c_avg > 0.0 && c_out >= 0.0) {
    return PlantedPartitionConfig::FromOutDegree(n, c_avg, c_out, seed);
  }
  throw ParameterError(
      "planted partition needs (p_in, p_out), (c_avg, ratio) or (c_avg, c_out)");
}

std::string GammaChoice::Label() const {
  switch (kind) {
    case GammaChoiceKind::kEstimated:
      return "hat";
    case GammaChoiceKind::kOracle:
      return "star";
    case GammaChoiceKind::kFixed:
      break;
  }
  return csv::FormatDouble(value);
}

GammaChoice GammaChoice::Parse(std::string_view text) {
  if (text == "hat") return {GammaChoiceKind::kEstimated, 0.0};
  if (text == "star") return {GammaChoiceKind::kOracle, 0.0};
  double v = 0.0;
  try {
    v = csv::ParseDouble(text, "gamma");
  } catch (const IoError&) {
    throw ParameterError("gamma '" + std::string(text) + "' is not a number, 'hat' or 'star'");
  }
  if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError("gamma must be > 0");
  return {GammaChoiceKind::kFixed, v};
}

void ExperimentPlan::Validate() const {
  if (gammas.empty()) throw ParameterError("plan lists no gamma values");
  for (const auto& g : gammas) {
    if (g.kind == GammaChoiceKind::kFixed && !(g.value > 0.0)) {
      throw ParameterError("gamma values must be > 0");
    }
    if (g.kind != GammaChoiceKind::kFixed && mode == ScoringMode::kMulticlass) {
      throw ParameterError("'hat' and 'star' gammas need sweep-cut mode");
    }
  }
  if (mu_grid.empty()) throw ParameterError("mu grid is empty");
  for (double mu : mu_grid) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw ParameterError("mu values must be > 0");
  }
  if (label_draws < 1) throw ParameterError("label_draws must be >= 1");
  if (dataset.graph_draws < 1) throw ParameterError("graph_draws must be >= 1");
  if (label_fractions.empty()) throw ParameterError("no label fractions given");
  for (double f : label_fractions) LabelCount(1, f);
  if (target_class < 0) throw ParameterError("target_class must be >= 0");
  if (dataset.kind == DatasetKind::kPlantedPartition) {
    dataset.PlantedConfig(seed);
  } else if (dataset.truth_path.empty()) {
    throw ParameterError("file datasets need a truth CSV");
  }
}

std::vector<double> LogSpace(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo) || count < 1) {
    throw ParameterError("log grid needs 0 < lo <= hi and count >= 1");
  }
  std::vector<double> out;
  const double a = std::log10(lo), b = std::log10(hi);
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out.push_back(std::pow(10.0, a + t * (b - a)));
  }
  return out;
}

std::vector<double> DefaultMuGrid() { return LogSpace(1e-10, 1e2, 25); }

ExperimentPlan ParsePlan(std::string_view json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("plan is not valid JSON: ") + e.what());
  }
  ExperimentPlan plan;
  try {
    const json& ds = j.at("dataset");
    const std::string type = GetString(ds, "type", "planted_partition");
    if (type == "planted_partition") {
      plan.dataset.kind = DatasetKind::kPlantedPartition;
      plan.dataset.n = GetInt(ds, "n", 0);
      plan.dataset.p_in = GetNumber(ds, "p_in", -1.0);
      plan.dataset.p_out = GetNumber(ds, "p_out", -1.0);
      plan.dataset.c_avg = GetNumber(ds, "c_avg", -1.0);
      plan.dataset.ratio = GetNumber(ds, "ratio", -1.0);
      plan.dataset.c_out = GetNumber(ds, "c_out", -1.0);
      plan.dataset.graph_draws = GetInt(ds, "graph_draws", 1);
      if (ds.contains("largest_component")) {
        plan.dataset.largest_component = ds.at("largest_component").get<bool>();
      }
    } else if (type == "features") {
      plan.dataset.kind = DatasetKind::kFeatures;
      plan.dataset.points_path = Resolve(base_dir, ds.at("points").get<std::string>());
      plan.dataset.knn = GetInt(ds, "k", 10);
      plan.dataset.sigma = GetNumber(ds, "sigma", 1.0);
    } else if (type == "edge_list") {
      plan.dataset.kind = DatasetKind::kEdgeList;
      plan.dataset.edges_path = Resolve(base_dir, ds.at("edges").get<std::string>());
    } else {
      throw ParameterError("unknown dataset type '" + type + "'");
    }
    if (plan.dataset.kind != DatasetKind::kPlantedPartition) {
      plan.dataset.truth_path = Resolve(base_dir, ds.at("truth").get<std::string>());
    }

    for (const auto& g : j.at("gammas")) {
      if (g.is_number()) {
        plan.gammas.push_back(GammaChoice::Parse(csv::FormatDouble(g.get<double>())));
      } else if (g.is_string()) {
        plan.gammas.push_back(GammaChoice::Parse(g.get<std::string>()));
      } else {
        throw ParameterError("gammas entries must be numbers, \"hat\" or \"star\"");
      }
    }

    if (!j.contains("mu_grid")) {
      plan.mu_grid = DefaultMuGrid();
    } else if (j.at("mu_grid").is_array()) {
      plan.mu_grid = GetNumbers(j, "mu_grid");
    } else {
      const json& mg = j.at("mu_grid");
      plan.mu_grid = LogSpace(GetNumber(mg, "min", 1e-10), GetNumber(mg, "max", 1e2),
                              GetInt(mg, "count", 25));
    }

    if (j.contains("labels")) {
      const json& lb = j.at("labels");
      plan.label_scheme = ParseLabelScheme(GetString(lb, "scheme", "uniform"));
      if (lb.contains("fractions")) plan.label_fractions = GetNumbers(lb, "fractions");
    }
    plan.target_class = GetInt(j, "target_class", 0);
    plan.label_draws = GetInt(j, "label_draws", 1);
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned()) {
        throw ParameterError("plan field 'seed' must be a non-negative integer");
      }
      plan.seed = j.at("seed").get<std::uint64_t>();
    }
    const std::string mode = GetString(j, "mode", "sweep");
    if (mode == "sweep") {
      plan.mode = ScoringMode::kSweepCut;
    } else if (mode == "multiclass") {
      plan.mode = ScoringMode::kMulticlass;
    } else {
      throw ParameterError("mode must be 'sweep' or 'multiclass'");
    }
    if (j.contains("selection_grid")) {
      plan.selection_grid = GammaGrid::Parse(GetString(j, "selection_grid", ""));
    }
  } catch (const json::exception& e) {
    throw ParameterError(std::string("plan schema error: ") + e.what());
  }
  plan.Validate();
  return plan;
}

MeanCi MeanWithCi(std::span<const double> values) {
  MeanCi out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    out.ci95 = 1.96 * sd / std::sqrt(static_cast<double>(values.size()));
  }
  return out;
}

ScoredRun RunExperiment(const ExperimentPlan& plan, const RunOptions& options) {
  plan.Validate();
  std::optional<Dataset> shared;
  int draws = plan.dataset.graph_draws;
  if (plan.dataset.kind != DatasetKind::kPlantedPartition) {
    shared.emplace(LoadFileDataset(plan.dataset));
    draws = 1;
  }

  std::vector<std::vector<RunCell>> per_draw(static_cast<std::size_t>(draws));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(draws));
  std::atomic<int> next{0};
  std::mutex progress_mu;
  auto worker = [&]() {
    for (int d = next++; d < draws; d = next++) {
      try {
        per_draw[static_cast<std::size_t>(d)] =
            RunDrawWithContext(plan, shared ? &*shared : nullptr, d);
      } catch (...) {
        errors[static_cast<std::size_t>(d)] = std::current_exception();
        continue;
      }
      if (options.progress) {
        std::lock_guard<std::mutex> lock(progress_mu);
        options.progress("graph draw " + std::to_string(d + 1) + "/" +
                         std::to_string(draws) + " done");
      }
    }
  };
  const int jobs = std::clamp(options.jobs, 1, std::max(1, draws));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ScoredRun run;
  for (auto& cells : per_draw) {
    run.cells.insert(run.cells.end(), cells.begin(), cells.end());
  }
  for (const GammaChoice& choice : plan.gammas) {
    const std::string label = choice.Label();
    std::vector<double> mcc, used, truth;
    for (const RunCell& c : run.cells) {
      if (c.gamma != label) continue;
      mcc.push_back(c.mcc);
      used.push_back(c.gamma_used);
      truth.push_back(c.truth_cheeger);
    }
    SummaryRow row;
    row.gamma = label;
    row.runs = static_cast<int>(mcc.size());
    const MeanCi m = MeanWithCi(mcc);
    row.mean_mcc = m.mean;
    row.ci95 = m.ci95;
    row.mean_gamma_used = MeanWithCi(used).mean;
    row.mean_truth_cheeger = MeanWithCi(truth).mean;
    run.summary.push_back(row);
  }
  return run;
}

std::string FormatResults(const ScoredRun& run) {
  std::ostringstream out;
  out << "gamma,graph_draw,label_draw,gamma_used,best_mu,mcc,truth_cheeger\n";
  for (const RunCell& c : run.cells) {
    out << c.gamma << ',' << c.graph_draw << ',' << c.label_draw << ','
        << csv::FormatDouble(c.gamma_used) << ',' << csv::FormatDouble(c.best_mu) << ','
        << csv::FormatDouble(c.mcc) << ',' << csv::FormatDouble(c.truth_cheeger) << '\n';
  }
  return out.str();
}

std::string FormatSummary(const ScoredRun& run) {
  std::ostringstream out;
  out << "gamma,runs,mean_mcc,ci95,mean_gamma_used,mean_truth_cheeger\n";
  for (const SummaryRow& r : run.summary) {
    out << r.gamma << ',' << r.runs << ',' << csv::FormatDouble(r.mean_mcc) << ','
        << csv::FormatDouble(r.ci95) << ',' << csv::FormatDouble(r.mean_gamma_used) << ','
        << csv::FormatDouble(r.mean_truth_cheeger) << '\n';
  }
  return out.str();
}

std::vector<RatioSweepRow> RunRatioSweep(const ExperimentPlan& base,
                                         std::span<const double> ratios,
                                         const RunOptions& options) {
  if (base.dataset.kind != DatasetKind::kPlantedPartition || !(base.dataset.c_avg > 0.0)) {
    throw ParameterError("ratio sweep needs a planted partition with c_avg");
  }
  std::vector<RatioSweepRow> rows;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    ExperimentPlan plan = base;
    plan.dataset.ratio = ratios[i];
    plan.dataset.p_in = plan.dataset.p_out = plan.dataset.c_out = -1.0;
    plan.seed = DeriveSeed(base.seed, kRatioStream, i);
    const double margin = DetectabilityMargin(plan.dataset.PlantedConfig(plan.seed));
    RunOptions opts = options;
    if (options.progress) {
      opts.progress = [&, i](const std::string& msg) {
        options.progress("ratio " + csv::FormatDouble(ratios[i]) + ": " + msg);
      };
    }
    const ScoredRun run = RunExperiment(plan, opts);
    for (const SummaryRow& s : run.summary) rows.push_back({ratios[i], margin, s});
  }
  return rows;
}

std::string FormatRatioSweep(const std::vector<RatioSweepRow>& rows) {
  std::ostringstream out;
  out << "ratio,margin,gamma,runs,mean_mcc,ci95,mean_truth_cheeger\n";
  for (const auto& r : rows) {
    out << csv::FormatDouble(r.ratio) << ',' << csv::FormatDouble(r.margin) << ','
        << r.summary.gamma << ',' << r.summary.runs << ','
        << csv::FormatDouble(r.summary.mean_mcc) << ','
        << csv::FormatDouble(r.summary.ci95) << ','
        << csv::FormatDouble(r.summary.mean_truth_cheeger) << '\n';
  }
  return out.str();
}

CheegerCurveReport CheegerCurveExperiment(const Graph& g, const NodeSet& truth,
                                          const GammaGrid& grid, std::uint64_t seed,
                                          const std::vector<double>& removal_fractions,
                                          int draws) {
  if (draws < 1) throw ParameterError("subset draws must be >= 1");
  const SpectralDecomposition decomp = Decompose(g);
  CheegerCurveReport report;
  report.full = CheegerCurve(decomp, truth, grid);
  report.gamma_star = report.full[ArgMinCurve(report.full)].gamma;
  report.removal_fractions = removal_fractions;
  for (std::size_t fi = 0; fi < removal_fractions.size(); ++fi) {
    const double frac = removal_fractions[fi];
    if (!(frac > 0.0 && frac < 1.0)) {
      throw ParameterError("removal fractions must lie in (0, 1)");
    }
    const auto remove = static_cast<std::size_t>(std::lround(frac * truth.size()));
    if (remove >= static_cast<std::size_t>(truth.size())) {
      throw ParameterError("removal fraction leaves an empty subset");
    }
    std::vector<CurvePoint> mean(report.full.size());
    double star_sum = 0.0;
    for (int d = 0; d < draws; ++d) {
      Rng rng(DeriveSeed(seed, kSubsetStream, (fi << 32) | static_cast<std::size_t>(d)));
      std::vector<NodeId> members = truth.members();
      for (std::size_t i = 0; i < remove; ++i) {
        const std::size_t pick = i + rng.UniformInt(members.size() - i);
        std::swap(members[i], members[pick]);
      }
      members.erase(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(remove));
      const auto curve = CheegerCurve(decomp, NodeSet(truth.universe(), members), grid);
      for (std::size_t k = 0; k < curve.size(); ++k) {
        mean[k].gamma = curve[k].gamma;
        mean[k].cheeger += curve[k].cheeger / draws;
      }
      star_sum += curve[ArgMinCurve(curve)].gamma;
    }
    report.removal_curves.push_back(std::move(mean));
    report.removal_gamma_star_mean.push_back(star_sum / draws);
  }
  return report;
}

std::string FormatCheegerCurve(const CheegerCurveReport& report) {
  std::ostringstream out;
  out << "gamma,cheeger";
  for (double f : report.removal_fractions) out << ",removed_" << csv::FormatDouble(f);
  out << '\n';
  for (std::size_t k = 0; k < report.full.size(); ++k) {
    out << csv::FormatDouble(report.full[k].gamma) << ','
        << csv::FormatDouble(report.full[k].cheeger);
    for (const auto& curve : report.removal_curves) {
      out << ',' << csv::FormatDouble(curve[k].cheeger);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lgpr
