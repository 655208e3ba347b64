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

#include <algorithm>
#include <cmath>
#include <utility>

#include "lgpr/error.h"

namespace lgpr {

void PlantedPartitionConfig::Validate() const {
  if (n < 2) throw ParameterError("planted partition needs n >= 2 per cluster");
  if (!(p_in >= 0.0 && p_in <= 1.0) || !(p_out >= 0.0 && p_out <= 1.0)) {
    throw ParameterError("p_in and p_out must lie in [0, 1]");
  }
}

PlantedPartitionConfig PlantedPartitionConfig::FromAverageDegree(int n, double c_avg,
                                                                 double ratio,
                                                                 std::uint64_t seed) {
  if (!(ratio >= 0.0)) throw ParameterError("C_out / C_in ratio must be >= 0");
  const double c_in = c_avg / (1.0 + ratio);
  return FromOutDegree(n, c_avg, c_avg - c_in, seed);
}

PlantedPartitionConfig PlantedPartitionConfig::FromOutDegree(int n, double c_avg,
                                                             double c_out,
                                                             std::uint64_t seed) {
  if (n < 2) throw ParameterError("planted partition needs n >= 2 per cluster");
  if (!(c_avg > 0.0) || !(c_out >= 0.0) || c_out > c_avg) {
    throw ParameterError("need c_avg > 0 and 0 <= c_out <= c_avg");
  }
  PlantedPartitionConfig cfg;
  cfg.n = n;
  cfg.p_in = (c_avg - c_out) / (n - 1);
  cfg.p_out = c_out / n;
  cfg.seed = seed;
  cfg.Validate();
  return cfg;
}

PlantedPartition GeneratePlantedPartition(const PlantedPartitionConfig& cfg) {
  cfg.Validate();
  const int total = 2 * cfg.n;
  Rng rng(cfg.seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < total; ++u) {
    for (NodeId v = u + 1; v < total; ++v) {
      const bool same = (u < cfg.n) == (v < cfg.n);
      if (rng.Bernoulli(same ? cfg.p_in : cfg.p_out)) edges.push_back({u, v, 1.0});
    }
  }
  return {Graph::FromEdges(total, edges), NodeSet::Range(total, 0, cfg.n)};
}

double DetectabilityMargin(double c_in, double c_out) {
  return (c_in - c_out) * (c_in - c_out) - 2.0 * (c_in + c_out);
}

double DetectabilityMargin(const PlantedPartitionConfig& cfg) {
  return DetectabilityMargin(cfg.c_in(), cfg.c_out());
}

double DetectabilityThresholdRatio(double c_avg) {
  if (!(c_avg > 2.0)) {
    throw ParameterError("no detectable regime when the mean degree is <= 2");
  }
  // With C_in = c/(1+r), C_out = c r/(1+r) the margin is
  // c^2 ((1-r)/(1+r))^2 - 2c, which vanishes at (1-r)/(1+r) = sqrt(2/c).
  const double s = std::sqrt(2.0 / c_avg);
  return (1.0 - s) / (1.0 + s);
}

std::string ToString(LabelScheme scheme) {
  return scheme == LabelScheme::kUniform ? "uniform" : "degree";
}

LabelScheme ParseLabelScheme(const std::string& name) {
  if (name == "uniform") return LabelScheme::kUniform;
  if (name == "degree") return LabelScheme::kDegreeProportional;
  throw ParameterError("unknown label scheme '" + name + "' (uniform|degree)");
}

int LabelCount(int class_size, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ParameterError("label fraction must lie in (0, 1]");
  }
  return static_cast<int>(std::ceil(fraction * class_size - 1e-9));
}

LabeledSample SampleLabels(std::span<const NodeSet> classes,
                           std::span<const double> fractions, LabelScheme scheme,
                           Rng& rng, const Eigen::VectorXd* weights) {
  if (classes.size() != fractions.size()) {
    throw ParameterError("need one label fraction per class");
  }
  if (scheme == LabelScheme::kDegreeProportional && weights == nullptr) {
    throw ParameterError("degree-proportional sampling needs node weights");
  }
  LabeledSample out;
  out.scheme = scheme;
  std::vector<NodeId> all;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const NodeSet& cls = classes[k];
    all.insert(all.end(), cls.begin(), cls.end());
    const int count = LabelCount(cls.size(), fractions[k]);
    if (count > cls.size()) {
      throw ParameterError("class " + std::to_string(k) + " has only " +
                           std::to_string(cls.size()) + " nodes");
    }
    std::vector<NodeId> pool = cls.members();
    std::vector<NodeId> chosen;
    if (scheme == LabelScheme::kUniform) {
      for (int i = 0; i < count; ++i) {
        const auto left = pool.size() - static_cast<std::size_t>(i);
        const auto pick = static_cast<std::size_t>(i) + rng.UniformInt(left);
        std::swap(pool[static_cast<std::size_t>(i)], pool[pick]);
        chosen.push_back(pool[static_cast<std::size_t>(i)]);
      }
    } else {
      std::vector<double> w;
      for (NodeId u : pool) w.push_back(std::max(0.0, (*weights)[u]));
      for (int i = 0; i < count; ++i) {
        double total = 0.0;
        for (double x : w) total += x;
        if (!(total > 0.0)) {
          throw ParameterError("class " + std::to_string(k) +
                               " has too few nodes with positive weight");
        }
        double target = rng.Uniform() * total;
        std::size_t pick = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
          if (w[j] <= 0.0) continue;
          pick = j;
          if (target < w[j]) break;
          target -= w[j];
        }
        chosen.push_back(pool[pick]);
        w[pick] = 0.0;
      }
    }
    out.per_class.emplace_back(cls.universe(), std::move(chosen));
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ParameterError("ground-truth classes overlap");
  }
  return out;
}

}  // namespace lgpr
