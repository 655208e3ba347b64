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

#ifndef LGPR_EXPERIMENT_H_
#define LGPR_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgpr/gamma_select.h"
#include "lgpr/graph.h"
#include "lgpr/synth.h"

namespace lgpr {

enum class DatasetKind { kPlantedPartition, kFeatures, kEdgeList };

struct DatasetSpec {
  DatasetKind kind = DatasetKind::kPlantedPartition;

  // Planted partition: n per cluster plus either (p_in, p_out),
  // (c_avg, ratio = C_out / C_in) or (c_avg, c_out).
  int n = 0;
  double p_in = -1.0;
  double p_out = -1.0;
  double c_avg = -1.0;
  double ratio = -1.0;
  double c_out = -1.0;
  int graph_draws = 1;
  // Sparse draws have isolated nodes, which have no generalized degree; the
  // experiment then runs on the largest connected component.
  bool largest_component = true;

  // File-backed datasets. Truth is a `node,class` CSV covering every node.
  std::filesystem::path points_path;
  std::filesystem::path edges_path;
  std::filesystem::path truth_path;
  int knn = 10;
  double sigma = 1.0;

  PlantedPartitionConfig PlantedConfig(std::uint64_t seed) const;
};

enum class GammaChoiceKind { kFixed, kEstimated, kOracle };

// A fixed exponent, the walk-based estimate ("hat") or the ground-truth
// optimum over the selection grid ("star").
struct GammaChoice {
  GammaChoiceKind kind = GammaChoiceKind::kFixed;
  double value = 1.0;

  std::string Label() const;
  static GammaChoice Parse(std::string_view text);
};

enum class ScoringMode { kSweepCut, kMulticlass };

struct ExperimentPlan {
  DatasetSpec dataset;
  std::vector<GammaChoice> gammas;
  std::vector<double> mu_grid;
  LabelScheme label_scheme = LabelScheme::kUniform;
  // One fraction per class, or a single fraction applied to every class.
  std::vector<double> label_fractions{0.01};
  // Class whose labels seed the diffusion in sweep-cut mode.
  int target_class = 0;
  int label_draws = 1;
  std::uint64_t seed = 0;
  ScoringMode mode = ScoringMode::kSweepCut;
  GammaGrid selection_grid = GammaGrid::Default();

  // Throws ParameterError on an empty or non-positive mu grid, no gammas,
  // fewer than one repetition, or estimate/oracle choices in multiclass mode.
  void Validate() const;
};

// 25 logarithmically spaced points covering [1e-10, 1e2]. Large exponents
// shrink the low end of the normalized spectrum, so small mu is needed.
std::vector<double> DefaultMuGrid();
std::vector<double> LogSpace(double lo, double hi, int count);

// Plan file in JSON. Relative paths resolve against `base_dir`.
// Throws ParameterError on schema violations.
ExperimentPlan ParsePlan(std::string_view json_text,
                         const std::filesystem::path& base_dir = {});

struct RunCell {
  std::string gamma;  // GammaChoice label
  int graph_draw = 0;
  int label_draw = 0;
  double gamma_used = 1.0;
  double best_mu = 0.0;
  double mcc = 0.0;
  double truth_cheeger = 0.0;  // h^(gamma_used) of the target class
};

struct SummaryRow {
  std::string gamma;
  int runs = 0;
  double mean_mcc = 0.0;
  double ci95 = 0.0;  // 1.96 s / sqrt(runs)
  double mean_gamma_used = 0.0;
  double mean_truth_cheeger = 0.0;
};

struct ScoredRun {
  std::vector<RunCell> cells;  // sorted by (graph_draw, label_draw, gamma order)
  std::vector<SummaryRow> summary;  // one per gamma choice, plan order
};

struct RunOptions {
  int jobs = 1;
  // Called once per finished graph draw; may be empty.
  std::function<void(const std::string&)> progress;
};

// For every graph draw, label draw and gamma choice: solve over the mu grid,
// score each solution (sweep-cut set against the target class, or arg-max
// assignment against all classes) by MCC against ground truth and keep the
// best mu. Picking mu with the ground truth is an evaluation protocol, not a
// model-selection method. Output is independent of `jobs`.
ScoredRun RunExperiment(const ExperimentPlan& plan, const RunOptions& options = {});

// results.csv: gamma,graph_draw,label_draw,gamma_used,best_mu,mcc,truth_cheeger
std::string FormatResults(const ScoredRun& run);
// summary.csv: gamma,runs,mean_mcc,ci95,mean_gamma_used,mean_truth_cheeger
std::string FormatSummary(const ScoredRun& run);

// Mean and 1.96-sigma normal-approximation half-width; 0 width for one value.
struct MeanCi {
  double mean = 0.0;
  double ci95 = 0.0;
};
MeanCi MeanWithCi(std::span<const double> values);

// Planted-partition sweep over C_out / C_in at fixed mean degree. Each ratio
// point runs `base` with dataset.ratio replaced and its own derived seed.
struct RatioSweepRow {
  double ratio = 0.0;
  double margin = 0.0;  // detectability margin at this ratio
  SummaryRow summary;
};

std::vector<RatioSweepRow> RunRatioSweep(const ExperimentPlan& base,
                                         std::span<const double> ratios,
                                         const RunOptions& options = {});
// ratio,margin,gamma,runs,mean_mcc,ci95,mean_truth_cheeger
std::string FormatRatioSweep(const std::vector<RatioSweepRow>& rows);

// Ground-truth Cheeger curve plus mean curves after randomly dropping a
// fraction of the truth set's members (the curve of a known subset).
struct CheegerCurveReport {
  std::vector<CurvePoint> full;
  double gamma_star = 1.0;
  std::vector<double> removal_fractions;
  std::vector<std::vector<CurvePoint>> removal_curves;  // mean over draws
  std::vector<double> removal_gamma_star_mean;  // mean per-draw arg-min
};

CheegerCurveReport CheegerCurveExperiment(
    const Graph& g, const NodeSet& truth, const GammaGrid& grid, std::uint64_t seed,
    const std::vector<double>& removal_fractions = {0.1, 0.2, 0.3}, int draws = 20);
// gamma,cheeger[,removed_<fraction>...]
std::string FormatCheegerCurve(const CheegerCurveReport& report);

}  // namespace lgpr

#endif  // LGPR_EXPERIMENT_H_
