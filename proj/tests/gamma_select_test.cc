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

#include "lgpr/gamma_select.h"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "lgpr/error.h"
#include "lgpr/partition_metrics.h"
#include "lgpr/random.h"
#include "lgpr/synth.h"
#include "test_support.h"

namespace lgpr {
namespace {

using testing::RandomConnectedGraph;
using testing::TwoCliques;

TEST(GammaGridTest, DefaultGrid) {
  const GammaGrid g = GammaGrid::Default();
  ASSERT_EQ(g.size(), 31);
  EXPECT_EQ(g.values().front(), 1.0);
  EXPECT_EQ(g.values().back(), 7.0);
  EXPECT_EQ(g.values()[3], 1.6);
}

TEST(GammaGridTest, ParsesRangesAndLists) {
  const GammaGrid r = GammaGrid::Parse("1:4:0.1");
  EXPECT_EQ(r.size(), 31);
  EXPECT_EQ(r.values()[7], 1.7);
  EXPECT_EQ(r.values().back(), 4.0);
  EXPECT_EQ(GammaGrid::Parse("1,2.5,6").values(), (std::vector<double>{1.0, 2.5, 6.0}));
  EXPECT_EQ(GammaGrid::Parse("2").size(), 1);
}

TEST(GammaGridTest, RejectsInvalidGrids) {
  EXPECT_THROW(GammaGrid({}), ParameterError);
  EXPECT_THROW(GammaGrid({2.0, 1.0}), ParameterError);
  EXPECT_THROW(GammaGrid({1.0, 1.0}), ParameterError);
  EXPECT_THROW(GammaGrid({0.0, 1.0}), ParameterError);
  EXPECT_THROW(GammaGrid::Parse("1:4"), ParameterError);
  EXPECT_THROW(GammaGrid::Parse("4:1:0.5"), ParameterError);
  EXPECT_THROW(GammaGrid::Parse("1:4:0"), ParameterError);
  EXPECT_THROW(GammaGrid::Parse("a,b"), Error);
}

TEST(CurveTest, ArgMinTakesFirstMinimum) {
  const std::vector<CurvePoint> c{{1, 0.5}, {2, 0.2}, {3, 0.2}, {4, 0.9}};
  EXPECT_EQ(ArgMinCurve(c), 1u);
  EXPECT_THROW(ArgMinCurve({}), ParameterError);
}

TEST(CurveTest, MatchesMaterializedCheegerRatios) {
  Rng rng(61);
  const Graph g = RandomConnectedGraph(30, 0.15, rng, true);
  const NodeSet s = NodeSet::Range(30, 0, 12);
  const SpectralDecomposition d = Decompose(g);
  const GammaGrid grid = GammaGrid::Parse("0.5:4:0.5");
  const auto curve = CheegerCurve(d, s, grid);
  ASSERT_EQ(curve.size(), 8u);
  for (const auto& p : curve) {
    EXPECT_NEAR(p.cheeger, CheegerRatio(LgammaGraph(d, p.gamma), s).ratio, 1e-9);
    EXPECT_GE(p.cheeger, 0.0);
  }
  EXPECT_NEAR(curve[1].cheeger, CheegerRatio(g, s).ratio, 1e-10);
}

TEST(OracleGammaTest, SingletonGridAndBruteArgMin) {
  Rng rng(62);
  const Graph g = RandomConnectedGraph(25, 0.2, rng);
  const NodeSet s = NodeSet::Range(25, 0, 10);
  const SpectralDecomposition d = Decompose(g);
  EXPECT_EQ(FindOracleGamma(d, s, GammaGrid({1.0})).gamma_star, 1.0);
  const GammaGrid grid = GammaGrid::Default();
  double best = 1e300, best_gamma = 0.0;
  for (double gamma : grid.values()) {
    const double h = CheegerRatio(LgammaGraph(d, gamma), s).ratio;
    if (h < best - 1e-12) best = h, best_gamma = gamma;
  }
  EXPECT_EQ(FindOracleGamma(d, s, grid).gamma_star, best_gamma);
}

TEST(OracleGammaTest, PlantedPartitionCurveDipsAtTwo) {
  double h1 = 0.0, h2 = 0.0;
  for (int t = 0; t < 10; ++t) {
    const auto pp = GeneratePlantedPartition({60, 0.5, 0.05, static_cast<std::uint64_t>(t)});
    const auto curve =
        CheegerCurve(Decompose(pp.graph), pp.ground_truth, GammaGrid({1.0, 2.0}));
    h1 += curve[0].cheeger;
    h2 += curve[1].cheeger;
  }
  EXPECT_LT(h2, h1);
}

// x^T = chi^T P^k with a dense matrix power.
Eigen::VectorXd DenseWalk(const Graph& g, const NodeSet& labeled, int k) {
  Eigen::RowVectorXd x = labeled.Indicator().transpose() / labeled.size();
  const Eigen::MatrixXd p = RandomWalkMatrix(g);
  for (int i = 0; i < k; ++i) x = x * p;
  return x.transpose();
}

TEST(EstimateGammaTest, Invariants) {
  Rng rng(63);
  for (int t = 0; t < 8; ++t) {
    const auto pp = GeneratePlantedPartition({40, 0.4, 0.03, rng.NextU64()});
    const NodeSet keep = LargestComponent(pp.graph);
    const Graph g = InducedSubgraph(pp.graph, keep);
    const int n = g.num_nodes();
    const NodeSet labeled(n, {0, 1, 2});
    const GammaGrid grid = GammaGrid::Default();
    const GammaEstimate est = EstimateGamma(g, labeled, grid);

    EXPECT_EQ(est.walk_steps, std::max(1, GeodesicHops(g, labeled).MaxPairwiseHops()));
    const Eigen::VectorXd x = DenseWalk(g, labeled, est.walk_steps);
    EXPECT_LT(est.mass_captured, 0.7);
    EXPECT_GE(est.mass_captured, 0.7 - x.maxCoeff());
    EXPECT_NEAR(est.mass_captured, x.dot(est.proxy_set.Indicator()), 1e-12);
    // The proxy set is a top block of x.
    double lowest_in = 1e300, highest_out = -1.0;
    for (int u = 0; u < n; ++u) {
      if (est.proxy_set.Contains(u)) {
        lowest_in = std::min(lowest_in, x[u]);
      } else {
        highest_out = std::max(highest_out, x[u]);
      }
    }
    EXPECT_GE(lowest_in, highest_out - 1e-15);

    ASSERT_EQ(est.cheeger_curve.size(), grid.values().size());
    const auto best = std::min_element(
        est.cheeger_curve.begin(), est.cheeger_curve.end(),
        [](const CurvePoint& a, const CurvePoint& b) { return a.cheeger < b.cheeger; });
    EXPECT_EQ(est.gamma_hat, best->gamma);
    EXPECT_NE(std::find(grid.values().begin(), grid.values().end(), est.gamma_hat),
              grid.values().end());
    // Curve values against the materialized L^gamma.
    const SpectralDecomposition d = Decompose(g);
    for (std::size_t i = 0; i < est.cheeger_curve.size(); i += 10) {
      const SignedGraph sg = LgammaGraph(d, est.cheeger_curve[i].gamma);
      const Eigen::VectorXd ind = est.proxy_set.Indicator();
      const double expect = ind.dot(sg.lgamma() * ind) / GeneralizedVolume(sg, est.proxy_set);
      EXPECT_NEAR(est.cheeger_curve[i].cheeger, expect, 1e-9 * std::max(1.0, expect));
    }
  }
}

TEST(EstimateGammaTest, IsDeterministic) {
  const auto pp = GeneratePlantedPartition({30, 0.5, 0.05, 5});
  const Graph g = InducedSubgraph(pp.graph, LargestComponent(pp.graph));
  const NodeSet labeled(g.num_nodes(), {1, 4});
  const GammaEstimate a = EstimateGamma(g, labeled, GammaGrid::Default());
  const GammaEstimate b = EstimateGamma(g, labeled, GammaGrid::Default());
  EXPECT_EQ(a.proxy_set, b.proxy_set);
  EXPECT_EQ(a.gamma_hat, b.gamma_hat);
}

TEST(EstimateGammaTest, SingleLabelUsesOneStep) {
  Rng rng(64);
  const Graph g = RandomConnectedGraph(30, 0.15, rng);
  const GammaEstimate est = EstimateGamma(g, NodeSet(30, {5}), GammaGrid::Default());
  EXPECT_EQ(est.walk_steps, 1);
  const Eigen::VectorXd x = DenseWalk(g, NodeSet(30, {5}), 1);
  for (NodeId u : est.proxy_set) EXPECT_GT(x[u], 0.0);
}

TEST(EstimateGammaTest, StaysInsideLabeledComponent) {
  const Graph g = TwoCliques(8, false);
  const GammaEstimate est = EstimateGamma(g, NodeSet(16, {0, 3}), GammaGrid::Default());
  for (NodeId u : est.proxy_set) EXPECT_LT(u, 8);
  if (est.cheeger_curve[ArgMinCurve(est.cheeger_curve)].cheeger <
      est.cheeger_curve.front().cheeger) {
    EXPECT_GT(est.gamma_hat, 1.0);
  }
}

TEST(EstimateGammaTest, DisconnectedLabelsAreRejected) {
  const Graph g = TwoCliques(5, false);
  EXPECT_THROW(EstimateGamma(g, NodeSet(10, {0, 7}), GammaGrid::Default()),
               ConnectivityError);
}

TEST(EstimateGammaTest, IsolatedNodesAreRejected) {
  const std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 1.0}};
  EXPECT_THROW(EstimateGamma(Graph::FromEdges(4, edges), NodeSet(4, {0}), GammaGrid::Default()),
               DegenerateError);
}

TEST(EstimateGammaTest, NeverWorseThanGammaOneOnEasyPartitions) {
  double h_hat = 0.0, h_one = 0.0;
  Rng rng(65);
  for (int t = 0; t < 10; ++t) {
    const auto pp = GeneratePlantedPartition({80, 0.3, 0.01, rng.NextU64()});
    const NodeSet keep = LargestComponent(pp.graph);
    const Graph g = InducedSubgraph(pp.graph, keep);
    std::vector<NodeId> truth, labels;
    for (int i = 0; i < keep.size(); ++i) {
      if (keep.members()[i] < 80) truth.push_back(i);
    }
    labels = {truth[0], truth[truth.size() / 2]};
    const NodeSet s(g.num_nodes(), truth);
    const SpectralDecomposition d = Decompose(g);
    const GammaEstimate est = EstimateGamma(g, d, NodeSet(g.num_nodes(), labels),
                                            GammaGrid::Default());
    h_hat += CheegerRatio(d, s, est.gamma_hat).ratio;
    h_one += CheegerRatio(d, s, 1.0).ratio;
  }
  EXPECT_LE(h_hat, h_one);
}

}  // namespace
}  // namespace lgpr
