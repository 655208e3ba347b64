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

#ifndef LGPR_SYNTH_H_
#define LGPR_SYNTH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lgpr/graph.h"
#include "lgpr/random.h"

namespace lgpr {

// Two-cluster planted partition with n nodes per cluster. Nodes 0..n-1 form
// the first cluster. Mean degrees: C_in = p_in (n - 1), C_out = p_out n.
struct PlantedPartitionConfig {
  int n = 2;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;

  // Throws ParameterError unless n >= 2 and both probabilities lie in [0, 1].
  void Validate() const;

  double c_in() const { return p_in * (n - 1); }
  double c_out() const { return p_out * n; }
  double c_avg() const { return c_in() + c_out(); }

  // Configuration with mean degree c_avg and C_out / C_in = ratio.
  static PlantedPartitionConfig FromAverageDegree(int n, double c_avg, double ratio,
                                                  std::uint64_t seed);
  // Configuration with mean degree c_avg and mean inter-cluster degree c_out.
  static PlantedPartitionConfig FromOutDegree(int n, double c_avg, double c_out,
                                              std::uint64_t seed);
};

struct PlantedPartition {
  Graph graph;
  NodeSet ground_truth;  // the first cluster
};

// Each unordered pair is joined independently with probability p_in (same
// cluster) or p_out (different clusters); unit weights, no self-loops. Same
// seed, same edge set.
PlantedPartition GeneratePlantedPartition(const PlantedPartitionConfig& cfg);

// (C_in - C_out)^2 - 2 (C_in + C_out); positive in the detectable regime.
double DetectabilityMargin(double c_in, double c_out);
double DetectabilityMargin(const PlantedPartitionConfig& cfg);
// The ratio C_out / C_in at which the margin vanishes for mean degree c_avg.
// Throws ParameterError when c_avg <= 2, where no ratio is detectable.
double DetectabilityThresholdRatio(double c_avg);

enum class LabelScheme { kUniform, kDegreeProportional };

std::string ToString(LabelScheme scheme);
// Accepts "uniform" and "degree"; throws ParameterError otherwise.
LabelScheme ParseLabelScheme(const std::string& name);

struct LabeledSample {
  std::vector<NodeSet> per_class;
  LabelScheme scheme = LabelScheme::kUniform;
};

// ceil(fraction * class_size), guarded against round-off just above an
// integer. Throws ParameterError unless fraction lies in (0, 1].
int LabelCount(int class_size, double fraction);

// Draws ceil(fraction_k |class_k|) nodes without replacement from each class,
// uniformly or with probability proportional to `weights` (one entry per
// node, required for the degree-proportional scheme). Throws ParameterError on
// a fraction/class mismatch, overlapping classes or too few positive-weight
// nodes.
LabeledSample SampleLabels(std::span<const NodeSet> classes,
                           std::span<const double> fractions, LabelScheme scheme,
                           Rng& rng, const Eigen::VectorXd* weights = nullptr);

}  // namespace lgpr

#endif  // LGPR_SYNTH_H_
