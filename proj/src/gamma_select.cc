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
#include <numeric>
#include <sstream>
#include <utility>

#include "lgpr/csv.h"
#include "lgpr/error.h"
#include "lgpr/partition_metrics.h"

namespace lgpr {

GammaGrid::GammaGrid(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw ParameterError("gamma grid is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
      throw ParameterError("gamma grid values must be positive and finite");
    }
    if (i > 0 && !(values_[i] > values_[i - 1])) {
      throw ParameterError("gamma grid must be strictly ascending");
    }
  }
}

GammaGrid GammaGrid::Default() { return Range(1.0, 7.0, 0.2); }

GammaGrid GammaGrid::Range(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) {
    throw ParameterError("gamma range needs step > 0 and stop >= start");
  }
  const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
  if (count > 100000) throw ParameterError("gamma range has too many points");
  std::vector<double> values;
  for (long long i = 0; i <= count; ++i) {
    // Snap to 12 decimals so 1 + 3 * 0.2 prints as 1.6.
    const double v = start + static_cast<double>(i) * step;
    values.push_back(std::round(v * 1e12) / 1e12);
  }
  return GammaGrid(std::move(values));
}

GammaGrid GammaGrid::Parse(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
      parts.push_back(csv::ParseDouble(item, "gamma grid"));
    }
    if (parts.size() != 3) {
      throw ParameterError("gamma grid range must be start:stop:step");
    }
    return Range(parts[0], parts[1], parts[2]);
  }
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    values.push_back(csv::ParseDouble(item, "gamma grid"));
  }
  return GammaGrid(std::move(values));
}

std::size_t ArgMinCurve(const std::vector<CurvePoint>& curve) {
  if (curve.empty()) throw ParameterError("empty curve");
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].cheeger < curve[best].cheeger) best = i;
  }
  return best;
}

std::vector<CurvePoint> CheegerCurve(const SpectralDecomposition& decomp,
                                     const NodeSet& s, const GammaGrid& grid) {
  std::vector<CurvePoint> curve;
  for (double gamma : grid.values()) {
    curve.push_back({gamma, CheegerRatio(decomp, s, gamma).ratio});
  }
  return curve;
}

OracleGamma FindOracleGamma(const SpectralDecomposition& decomp, const NodeSet& s_gt,
                            const GammaGrid& grid) {
  OracleGamma out;
  out.curve = CheegerCurve(decomp, s_gt, grid);
  out.gamma_star = out.curve[ArgMinCurve(out.curve)].gamma;
  return out;
}

GammaEstimate EstimateGamma(const Graph& g, const SpectralDecomposition& decomp,
                            const NodeSet& labeled, const GammaGrid& grid) {
  const int n = g.num_nodes();
  if (labeled.universe() != n || decomp.num_nodes() != n) {
    throw ParameterError("labeled set and decomposition must match the graph");
  }
  if (labeled.empty()) throw ParameterError("need at least one labeled node");
  const Eigen::VectorXd degree = DegreeVector(g);
  for (NodeId u = 0; u < n; ++u) {
    if (!(degree[u] > 0.0)) {
      throw DegenerateError("node " + std::to_string(u) +
                            " is isolated; the walk is undefined");
    }
  }

  GammaEstimate est;
  est.walk_steps = std::max(1, GeodesicHops(g, labeled).MaxPairwiseHops());
  const Eigen::VectorXd chi = labeled.Indicator() / static_cast<double>(labeled.size());
  const Eigen::VectorXd x = WalkDistribution(g, chi, est.walk_steps);

  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return x[a] > x[b]; });
  std::vector<NodeId> proxy;
  double running = 0.0;
  for (NodeId v : order) {
    if (running + x[v] >= kProxyMassThreshold) break;
    running += x[v];
    proxy.push_back(v);
  }
  if (proxy.empty()) {
    throw DegenerateError(
        "proxy set is empty: a single node holds at least 0.7 of the walk mass");
  }
  est.proxy_set = NodeSet(n, std::move(proxy));
  est.mass_captured = running;

  const Eigen::VectorXd indicator = est.proxy_set.Indicator();
  for (double gamma : grid.values()) {
    const double vol = indicator.dot(decomp.GeneralizedDegrees(gamma));
    if (!(vol > 0.0)) throw DegenerateError("proxy set has zero generalized volume");
    const double num = ClampNonNegative(decomp.QuadraticForm(indicator, gamma), vol);
    est.cheeger_curve.push_back({gamma, num / vol});
  }
  est.gamma_hat = est.cheeger_curve[ArgMinCurve(est.cheeger_curve)].gamma;
  return est;
}

GammaEstimate EstimateGamma(const Graph& g, const NodeSet& labeled,
                            const GammaGrid& grid) {
  return EstimateGamma(g, Decompose(g), labeled, grid);
}

}  // namespace lgpr
