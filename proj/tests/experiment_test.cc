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
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lgpr/error.h"
#include "lgpr/graph_io.h"
#include "lgpr/partition_metrics.h"
#include "lgpr/random.h"
#include "lgpr/spectral.h"
#include "test_support.h"

namespace lgpr {
namespace {

constexpr char kSmallPlan[] = R"({
  "dataset": {"type": "planted_partition", "n": 40, "c_avg": 6, "ratio": 0.1,
              "graph_draws": 3},
  "gammas": [1, 2, "hat", "star"],
  "mu_grid": {"min": 1e-6, "max": 10, "count": 5},
  "labels": {"scheme": "uniform", "fractions": [0.1]},
  "label_draws": 2,
  "seed": 11
})";

TEST(LogSpaceTest, EndpointsAndRatio) {
  const auto v = LogSpace(1e-3, 1e2, 6);
  ASSERT_EQ(v.size(), 6u);
  EXPECT_DOUBLE_EQ(v.front(), 1e-3);
  EXPECT_NEAR(v.back(), 1e2, 1e-10);
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_NEAR(v[i] / v[i - 1], 10.0, 1e-10);
  EXPECT_THROW(LogSpace(0.0, 1.0, 3), ParameterError);
  EXPECT_THROW(LogSpace(1.0, 10.0, 0), ParameterError);
}

TEST(LogSpaceTest, DefaultGrid) {
  const auto v = DefaultMuGrid();
  ASSERT_EQ(v.size(), 25u);
  EXPECT_NEAR(v.front(), 1e-10, 1e-22);
  EXPECT_NEAR(v.back(), 1e2, 1e-10);
}

TEST(MeanWithCiTest, KnownValues) {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  const MeanCi m = MeanWithCi(x);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.ci95, 1.96 * std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
  const std::vector<double> one{0.7};
  EXPECT_DOUBLE_EQ(MeanWithCi(one).mean, 0.7);
  EXPECT_DOUBLE_EQ(MeanWithCi(one).ci95, 0.0);
}

TEST(GammaChoiceTest, ParseAndLabel) {
  EXPECT_EQ(GammaChoice::Parse("hat").kind, GammaChoiceKind::kEstimated);
  EXPECT_EQ(GammaChoice::Parse("star").kind, GammaChoiceKind::kOracle);
  const GammaChoice g = GammaChoice::Parse("2.5");
  EXPECT_EQ(g.kind, GammaChoiceKind::kFixed);
  EXPECT_DOUBLE_EQ(g.value, 2.5);
  EXPECT_EQ(GammaChoice::Parse(g.Label()).value, 2.5);
  EXPECT_THROW(GammaChoice::Parse("-1"), ParameterError);
  EXPECT_THROW(GammaChoice::Parse("abc"), ParameterError);
}

TEST(ParsePlanTest, PlantedPartitionFields) {
  const ExperimentPlan p = ParsePlan(kSmallPlan);
  EXPECT_EQ(p.dataset.kind, DatasetKind::kPlantedPartition);
  EXPECT_EQ(p.dataset.n, 40);
  EXPECT_EQ(p.dataset.graph_draws, 3);
  EXPECT_TRUE(p.dataset.largest_component);
  ASSERT_EQ(p.gammas.size(), 4u);
  EXPECT_EQ(p.gammas[2].kind, GammaChoiceKind::kEstimated);
  EXPECT_EQ(p.gammas[3].kind, GammaChoiceKind::kOracle);
  EXPECT_EQ(p.mu_grid.size(), 5u);
  EXPECT_EQ(p.label_draws, 2);
  EXPECT_EQ(p.seed, 11u);
  EXPECT_EQ(p.mode, ScoringMode::kSweepCut);
  const auto cfg = p.dataset.PlantedConfig(0);
  EXPECT_NEAR(cfg.c_avg(), 6.0, 1e-12);
  EXPECT_NEAR(cfg.c_out() / cfg.c_in(), 0.1, 1e-12);
}

TEST(ParsePlanTest, FileDatasetsResolveAgainstBaseDir) {
  const ExperimentPlan p = ParsePlan(
      R"({"dataset": {"type": "edge_list", "edges": "g.csv", "truth": "t.csv"},
          "gammas": [1], "mu_grid": [0.1, 1]})",
      "/data/dir");
  EXPECT_EQ(p.dataset.kind, DatasetKind::kEdgeList);
  EXPECT_EQ(p.dataset.edges_path, std::filesystem::path("/data/dir/g.csv"));
  EXPECT_EQ(p.dataset.truth_path, std::filesystem::path("/data/dir/t.csv"));
  EXPECT_EQ(p.mu_grid, (std::vector<double>{0.1, 1.0}));
  EXPECT_EQ(p.mu_grid.size(), 2u);
  EXPECT_EQ(ParsePlan(R"({"dataset": {"type": "edge_list", "edges": "g.csv",
                          "truth": "t.csv"}, "gammas": [1]})")
                .mu_grid,
            DefaultMuGrid());
}

TEST(ParsePlanTest, Rejections) {
  EXPECT_THROW(ParsePlan("not json"), ParameterError);
  EXPECT_THROW(ParsePlan(R"({"gammas": [1]})"), ParameterError);
  EXPECT_THROW(ParsePlan(R"({"dataset": {"type": "weird"}, "gammas": [1]})"),
               ParameterError);
  EXPECT_THROW(ParsePlan(R"({"dataset": {"n": 10, "p_in": 0.5, "p_out": 0.1},
                            "gammas": []})"),
               ParameterError);
  EXPECT_THROW(ParsePlan(R"({"dataset": {"n": 10, "p_in": 0.5, "p_out": 0.1},
                            "gammas": [1], "mu_grid": [0, 1]})"),
               ParameterError);
  EXPECT_THROW(ParsePlan(R"({"dataset": {"n": 10, "p_in": 0.5, "p_out": 0.1},
                            "gammas": ["hat"], "mode": "multiclass"})"),
               ParameterError);
  EXPECT_THROW(ParsePlan(R"({"dataset": {"n": 10, "p_in": 0.5, "p_out": 0.1},
                            "gammas": [1], "seed": -3})"),
               ParameterError);
  EXPECT_THROW(ParsePlan(R"({"dataset": {"n": 10, "p_in": 0.5, "p_out": 0.1},
                            "gammas": [1], "mode": "both"})"),
               ParameterError);
}

TEST(RunExperimentTest, ShapeAndOrdering) {
  const ExperimentPlan p = ParsePlan(kSmallPlan);
  const ScoredRun run = RunExperiment(p);
  ASSERT_EQ(run.cells.size(), 3u * 2u * 4u);
  for (std::size_t i = 0; i < run.cells.size(); ++i) {
    const RunCell& c = run.cells[i];
    EXPECT_EQ(c.graph_draw, static_cast<int>(i / 8));
    EXPECT_EQ(c.label_draw, static_cast<int>(i / 4 % 2));
    EXPECT_EQ(c.gamma, p.gammas[i % 4].Label());
    EXPECT_GE(c.mcc, -1.0);
    EXPECT_LE(c.mcc, 1.0);
    EXPECT_GE(c.truth_cheeger, 0.0);
    EXPECT_TRUE(std::find(p.mu_grid.begin(), p.mu_grid.end(), c.best_mu) != p.mu_grid.end());
  }
  ASSERT_EQ(run.summary.size(), 4u);
  for (const SummaryRow& r : run.summary) EXPECT_EQ(r.runs, 6);
  // The oracle exponent minimizes the ground-truth ratio over the grid, so its
  // Cheeger ratio is never above that of gamma = 1 on the same draw.
  for (std::size_t i = 0; i < run.cells.size(); i += 4) {
    EXPECT_LE(run.cells[i + 3].truth_cheeger, run.cells[i].truth_cheeger + 1e-12);
    EXPECT_DOUBLE_EQ(run.cells[i].gamma_used, 1.0);
  }
}

TEST(RunExperimentTest, ReproducibleAcrossRunsAndThreads) {
  const ExperimentPlan p = ParsePlan(kSmallPlan);
  const ScoredRun a = RunExperiment(p);
  const ScoredRun b = RunExperiment(p);
  RunOptions two;
  two.jobs = 2;
  const ScoredRun c = RunExperiment(p, two);
  EXPECT_EQ(FormatResults(a), FormatResults(b));
  EXPECT_EQ(FormatResults(a), FormatResults(c));
  EXPECT_EQ(FormatSummary(a), FormatSummary(c));
  ExperimentPlan other = p;
  other.seed = 12;
  EXPECT_NE(FormatResults(a), FormatResults(RunExperiment(other)));
}

TEST(RunExperimentTest, DisjointCliquesAreRecovered) {
  const ExperimentPlan p = ParsePlan(R"({
    "dataset": {"type": "planted_partition", "n": 15, "p_in": 1.0, "p_out": 0.0,
                "largest_component": false},
    "gammas": [1, 2.5], "mu_grid": [0.01, 0.1, 1], "labels": {"fractions": [0.2]},
    "label_draws": 2, "seed": 3})");
  for (const RunCell& c : RunExperiment(p).cells) EXPECT_DOUBLE_EQ(c.mcc, 1.0);
  // Restricting to one clique leaves a target class that covers every node.
  ExperimentPlan q = p;
  q.dataset.largest_component = true;
  EXPECT_THROW(RunExperiment(q), DegenerateError);
}

TEST(RunExperimentTest, StrongCommunitiesGiveHighMcc) {
  const ExperimentPlan p = ParsePlan(R"({
    "dataset": {"type": "planted_partition", "n": 30, "p_in": 0.5, "p_out": 0.01,
                "graph_draws": 2},
    "gammas": [1, 2], "labels": {"fractions": [0.1]}, "label_draws": 2, "seed": 5})");
  const ScoredRun run = RunExperiment(p);
  for (const RunCell& c : run.cells) EXPECT_GT(c.mcc, 0.9) << c.gamma;
}

TEST(RunExperimentTest, RefiningMuGridNeverLowersBestMcc) {
  ExperimentPlan coarse = ParsePlan(kSmallPlan);
  coarse.gammas = {GammaChoice::Parse("1"), GammaChoice::Parse("3")};
  ExperimentPlan fine = coarse;
  coarse.mu_grid = {1e-4, 1e-2, 1.0};
  fine.mu_grid = {1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0};
  const ScoredRun a = RunExperiment(coarse), b = RunExperiment(fine);
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_GE(b.cells[i].mcc, a.cells[i].mcc - 1e-12);
  }
}

TEST(RunExperimentTest, MulticlassMode) {
  const ExperimentPlan p = ParsePlan(R"({
    "dataset": {"type": "planted_partition", "n": 40, "c_avg": 5, "c_out": 0.2,
                "graph_draws": 2},
    "gammas": [1, 2], "mu_grid": {"min": 1e-6, "max": 1, "count": 4},
    "labels": {"fractions": [0.05, 0.15]}, "label_draws": 2, "mode": "multiclass",
    "seed": 9})");
  const ScoredRun run = RunExperiment(p);
  EXPECT_EQ(run.cells.size(), 8u);
  for (const RunCell& c : run.cells) EXPECT_GT(c.mcc, 0.5);
}

TEST(RunExperimentTest, EdgeListDataset) {
  testing::TempDir dir("experiment_edges");
  const Graph g = testing::TwoCliques(6, true);
  WriteEdgeList(dir.path() / "g.csv", g);
  std::string truth = "node,class\n";
  for (int u = 0; u < 12; ++u) truth += std::to_string(u) + "," + (u < 6 ? "0" : "1") + "\n";
  testing::WriteText(dir.path() / "t.csv", truth);
  const ExperimentPlan p = ParsePlan(
      R"({"dataset": {"type": "edge_list", "edges": "g.csv", "truth": "t.csv"},
          "gammas": [1, 2], "labels": {"fractions": [0.2]}, "label_draws": 3,
          "seed": 1})",
      dir.path());
  const ScoredRun run = RunExperiment(p);
  ASSERT_EQ(run.cells.size(), 6u);
  for (const RunCell& c : run.cells) EXPECT_DOUBLE_EQ(c.mcc, 1.0);
}

TEST(RunExperimentTest, ResultsCsvLayout) {
  const ScoredRun run = RunExperiment(ParsePlan(kSmallPlan));
  const std::string results = FormatResults(run);
  EXPECT_EQ(results.rfind("gamma,graph_draw,label_draw,gamma_used,best_mu,mcc,truth_cheeger\n", 0),
            0u);
  EXPECT_EQ(std::count(results.begin(), results.end(), '\n'), 25);
  const std::string summary = FormatSummary(run);
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 5);
}

TEST(RatioSweepTest, OneRowPerRatioAndGamma) {
  ExperimentPlan base = ParsePlan(kSmallPlan);
  base.gammas = {GammaChoice::Parse("1"), GammaChoice::Parse("2")};
  base.dataset.graph_draws = 2;
  base.label_draws = 1;
  const std::vector<double> ratios{0.05, 0.2};
  const auto rows = RunRatioSweep(base, ratios);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_DOUBLE_EQ(rows[0].ratio, 0.05);
  EXPECT_DOUBLE_EQ(rows[3].ratio, 0.2);
  EXPECT_GT(rows[0].margin, rows[3].margin);
  const std::string text = FormatRatioSweep(rows);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(CheegerCurveExperimentTest, FullCurveMatchesDirectRatios) {
  const Graph g = testing::TwoCliques(8, true);
  const NodeSet s = NodeSet::Range(16, 0, 8);
  const GammaGrid grid = GammaGrid::Range(1.0, 3.0, 0.5);
  const auto report = CheegerCurveExperiment(g, s, grid, 4, {0.25}, 5);
  const SpectralDecomposition decomp = Decompose(g);
  ASSERT_EQ(report.full.size(), 5u);
  EXPECT_NEAR(report.full[0].cheeger, CheegerRatio(g, s).ratio, 1e-10);
  for (const CurvePoint& p : report.full) {
    EXPECT_NEAR(p.cheeger, CheegerRatio(decomp, s, p.gamma).ratio, 1e-10);
    EXPECT_GE(p.cheeger, 0.0);
  }
  EXPECT_EQ(report.gamma_star, report.full[ArgMinCurve(report.full)].gamma);
  ASSERT_EQ(report.removal_curves.size(), 1u);
  EXPECT_EQ(report.removal_curves[0].size(), 5u);
  ASSERT_EQ(report.removal_gamma_star_mean.size(), 1u);
  EXPECT_GE(report.removal_gamma_star_mean[0], 1.0);
  EXPECT_LE(report.removal_gamma_star_mean[0], 3.0);
}

TEST(CheegerCurveExperimentTest, NegligibleRemovalReproducesFullCurve) {
  const auto pp = GeneratePlantedPartition({30, 0.4, 0.05, 21});
  const GammaGrid grid = GammaGrid::Range(1.0, 4.0, 0.5);
  // 1% of 30 nodes rounds to zero removed nodes.
  const auto report = CheegerCurveExperiment(pp.graph, pp.ground_truth, grid, 2, {0.01}, 4);
  for (std::size_t i = 0; i < report.full.size(); ++i) {
    EXPECT_NEAR(report.removal_curves[0][i].cheeger, report.full[i].cheeger, 1e-12);
  }
  EXPECT_DOUBLE_EQ(report.removal_gamma_star_mean[0], report.gamma_star);
}

TEST(CheegerCurveExperimentTest, RemovalRaisesRatioOfCohesiveSet) {
  // Dropping nodes from one of two disjoint-ish cliques turns internal edges
  // into cut edges, so the ratio grows at gamma = 1.
  const Graph g = testing::TwoCliques(10, true);
  const NodeSet s = NodeSet::Range(20, 0, 10);
  const auto report = CheegerCurveExperiment(g, s, GammaGrid::Range(1.0, 2.0, 0.5), 3,
                                             {0.2, 0.4}, 10);
  EXPECT_GT(report.removal_curves[0][0].cheeger, report.full[0].cheeger);
  EXPECT_GT(report.removal_curves[1][0].cheeger, report.removal_curves[0][0].cheeger);
  EXPECT_THROW(CheegerCurveExperiment(g, s, GammaGrid::Default(), 2, {1.0}, 1), ParameterError);
  EXPECT_THROW(CheegerCurveExperiment(g, s, GammaGrid::Default(), 2, {0.2}, 0), ParameterError);
}

}  // namespace
}  // namespace lgpr
