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

#include "lgpr/synth.h"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "lgpr/error.h"
#include "lgpr/random.h"

namespace lgpr {
namespace {

TEST(PlantedPartitionTest, ConfigValidation) {
  EXPECT_THROW((PlantedPartitionConfig{1, 0.5, 0.1, 0}.Validate()), ParameterError);
  EXPECT_THROW((PlantedPartitionConfig{10, 1.5, 0.1, 0}.Validate()), ParameterError);
  EXPECT_THROW((PlantedPartitionConfig{10, 0.5, -0.1, 0}.Validate()), ParameterError);
  const PlantedPartitionConfig c{101, 0.02, 0.01, 0};
  EXPECT_DOUBLE_EQ(c.c_in(), 2.0);
  EXPECT_DOUBLE_EQ(c.c_out(), 1.01);
}

TEST(PlantedPartitionTest, DegreeParameterizations) {
  const auto a = PlantedPartitionConfig::FromAverageDegree(250, 3.0, 0.5, 1);
  EXPECT_NEAR(a.c_avg(), 3.0, 1e-12);
  EXPECT_NEAR(a.c_out() / a.c_in(), 0.5, 1e-12);
  const auto b = PlantedPartitionConfig::FromOutDegree(200, 3.0, 0.1, 1);
  EXPECT_NEAR(b.c_out(), 0.1, 1e-12);
  EXPECT_NEAR(b.c_in(), 2.9, 1e-12);
}

TEST(PlantedPartitionTest, DeterministicCliques) {
  const PlantedPartition pp = GeneratePlantedPartition({6, 1.0, 0.0, 3});
  EXPECT_EQ(pp.graph.num_nodes(), 12);
  EXPECT_EQ(pp.graph.num_edges(), 30);
  EXPECT_EQ(pp.ground_truth, NodeSet::Range(12, 0, 6));
  for (int u = 0; u < 12; ++u) {
    for (int v = 0; v < 12; ++v) {
      const bool same = (u < 6) == (v < 6);
      EXPECT_EQ(pp.graph.weight(u, v), (same && u != v) ? 1.0 : 0.0);
    }
  }
}

TEST(PlantedPartitionTest, SameSeedSameEdges) {
  const auto a = GeneratePlantedPartition({100, 0.1, 0.02, 77});
  const auto b = GeneratePlantedPartition({100, 0.1, 0.02, 77});
  const auto c = GeneratePlantedPartition({100, 0.1, 0.02, 78});
  EXPECT_EQ(a.graph.adjacency(), b.graph.adjacency());
  EXPECT_NE(a.graph.adjacency(), c.graph.adjacency());
}

TEST(PlantedPartitionTest, SymmetricUnitWeights) {
  const auto pp = GeneratePlantedPartition({50, 0.3, 0.1, 4});
  const Eigen::MatrixXd& w = pp.graph.adjacency();
  EXPECT_EQ(w, w.transpose());
  for (int i = 0; i < w.size(); ++i) {
    EXPECT_TRUE(w.data()[i] == 0.0 || w.data()[i] == 1.0);
  }
  EXPECT_EQ(w.diagonal().sum(), 0.0);
}

TEST(PlantedPartitionTest, EdgeDensityWithinBinomialBand) {
  const int n = 100;
  const auto pp = GeneratePlantedPartition({n, 0.5, 0.05, 12});
  double intra = 0.0, inter = 0.0;
  for (int u = 0; u < 2 * n; ++u) {
    for (int v = u + 1; v < 2 * n; ++v) {
      ((u < n) == (v < n) ? intra : inter) += pp.graph.weight(u, v);
    }
  }
  const double pairs_in = 2.0 * n * (n - 1) / 2.0, pairs_out = 1.0 * n * n;
  EXPECT_NEAR(intra / pairs_in, 0.5, 3.0 * std::sqrt(0.25 / pairs_in));
  EXPECT_NEAR(inter / pairs_out, 0.05, 3.0 * std::sqrt(0.05 * 0.95 / pairs_out));
}

TEST(PlantedPartitionTest, MeanDegreeOverDraws) {
  const auto cfg = PlantedPartitionConfig::FromAverageDegree(100, 3.0, 0.2, 0);
  double total = 0.0;
  for (int d = 0; d < 100; ++d) {
    auto c = cfg;
    c.seed = DeriveSeed(5, kGraphStream, d);
    const auto pp = GeneratePlantedPartition(c);
    total += 2.0 * pp.graph.num_edges() / pp.graph.num_nodes();
  }
  EXPECT_NEAR(total / 100.0, 3.0, 0.05 * 3.0);
}

TEST(DetectabilityTest, HandExamples) {
  EXPECT_DOUBLE_EQ(DetectabilityMargin(3.0, 0.0), 3.0);
  EXPECT_DOUBLE_EQ(DetectabilityMargin(2.5, 2.5), -10.0);
}

TEST(DetectabilityTest, ThresholdMatchesBisection) {
  for (double c_avg : {2.5, 3.0, 5.0, 10.0}) {
    auto margin = [&](double rho) {
      return DetectabilityMargin(c_avg / (1.0 + rho), c_avg * rho / (1.0 + rho));
    };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (margin(mid) > 0.0 ? lo : hi) = mid;
    }
    EXPECT_NEAR(DetectabilityThresholdRatio(c_avg), lo, 1e-12) << c_avg;
  }
  EXPECT_NEAR(DetectabilityThresholdRatio(3.0), 0.1010205, 1e-6);
  EXPECT_THROW(DetectabilityThresholdRatio(2.0), ParameterError);
}

TEST(DetectabilityTest, ConfigOverload) {
  const auto cfg = PlantedPartitionConfig::FromAverageDegree(250, 3.0, 0.05, 0);
  EXPECT_DOUBLE_EQ(DetectabilityMargin(cfg), DetectabilityMargin(cfg.c_in(), cfg.c_out()));
}

TEST(LabelCountTest, CeilingRounding) {
  EXPECT_EQ(LabelCount(200, 0.02), 4);
  EXPECT_EQ(LabelCount(200, 0.06), 12);
  EXPECT_EQ(LabelCount(250, 0.01), 3);
  EXPECT_EQ(LabelCount(10, 1.0), 10);
  EXPECT_EQ(LabelCount(3, 0.01), 1);
  EXPECT_THROW(LabelCount(10, 0.0), ParameterError);
  EXPECT_THROW(LabelCount(10, 1.5), ParameterError);
}

TEST(SampleLabelsTest, CountsAndMembership) {
  const std::vector<NodeSet> classes{NodeSet::Range(400, 0, 200), NodeSet::Range(400, 200, 400)};
  const std::vector<double> fractions{0.02, 0.06};
  Rng rng(13);
  const LabeledSample s = SampleLabels(classes, fractions, LabelScheme::kUniform, rng);
  ASSERT_EQ(s.per_class.size(), 2u);
  EXPECT_EQ(s.per_class[0].size(), 4);
  EXPECT_EQ(s.per_class[1].size(), 12);
  for (int k = 0; k < 2; ++k) {
    for (NodeId u : s.per_class[k]) EXPECT_TRUE(classes[k].Contains(u));
  }
}

TEST(SampleLabelsTest, FullFractionLabelsEverything) {
  const std::vector<NodeSet> classes{NodeSet::Range(10, 0, 4), NodeSet::Range(10, 4, 10)};
  const std::vector<double> fractions{1.0};
  Rng rng(14);
  EXPECT_THROW(SampleLabels(classes, fractions, LabelScheme::kUniform, rng), ParameterError);
  const std::vector<double> both{1.0, 1.0};
  const LabeledSample s = SampleLabels(classes, both, LabelScheme::kUniform, rng);
  EXPECT_EQ(s.per_class[0], classes[0]);
  EXPECT_EQ(s.per_class[1], classes[1]);
}

TEST(SampleLabelsTest, UniformSchemeIsUniform) {
  const std::vector<NodeSet> classes{NodeSet::Range(10, 0, 10)};
  const std::vector<double> fractions{0.2};
  Rng rng(15);
  std::vector<int> hits(10, 0);
  const int draws = 20000;
  for (int d = 0; d < draws; ++d) {
    const LabeledSample s = SampleLabels(classes, fractions, LabelScheme::kUniform, rng);
    for (NodeId u : s.per_class[0]) ++hits[u];
  }
  for (int h : hits) EXPECT_NEAR(h / static_cast<double>(draws), 0.2, 0.015);
}

TEST(SampleLabelsTest, DegreeSchemeFavorsHeavyNodes) {
  const std::vector<NodeSet> classes{NodeSet::Range(4, 0, 4)};
  const std::vector<double> fractions{0.25};
  Eigen::VectorXd w(4);
  w << 1, 1, 1, 7;
  Rng rng(16);
  int heavy = 0;
  const int draws = 20000;
  for (int d = 0; d < draws; ++d) {
    heavy += SampleLabels(classes, fractions, LabelScheme::kDegreeProportional, rng, &w)
                 .per_class[0]
                 .Contains(3);
  }
  EXPECT_NEAR(heavy / static_cast<double>(draws), 0.7, 0.015);
  EXPECT_THROW(SampleLabels(classes, fractions, LabelScheme::kDegreeProportional, rng),
               ParameterError);
}

TEST(SampleLabelsTest, RejectsOverlappingClasses) {
  const std::vector<NodeSet> classes{NodeSet(5, {0, 1}), NodeSet(5, {1, 2})};
  const std::vector<double> fractions{0.5, 0.5};
  Rng rng(17);
  EXPECT_THROW(SampleLabels(classes, fractions, LabelScheme::kUniform, rng), ParameterError);
}

TEST(LabelSchemeTest, NamesRoundTrip) {
  for (auto s : {LabelScheme::kUniform, LabelScheme::kDegreeProportional}) {
    EXPECT_EQ(ParseLabelScheme(ToString(s)), s);
  }
  EXPECT_THROW(ParseLabelScheme("weird"), ParameterError);
}

}  // namespace
}  // namespace lgpr
