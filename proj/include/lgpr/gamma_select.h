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

#ifndef LGPR_GAMMA_SELECT_H_
#define LGPR_GAMMA_SELECT_H_

#include <string>
#include <vector>

#include "lgpr/graph.h"
#include "lgpr/spectral.h"

namespace lgpr {

// Non-empty, strictly ascending list of positive exponents.
class GammaGrid {
 public:
  // Throws ParameterError when the invariants do not hold.
  explicit GammaGrid(std::vector<double> values);

  // 1.0, 1.2, ..., 7.0.
  static GammaGrid Default();
  // start, start + step, ... up to and including stop (within round-off).
  static GammaGrid Range(double start, double stop, double step);
  // "start:stop:step" or a comma-separated list.
  static GammaGrid Parse(const std::string& text);

  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<double> values_;
};

struct CurvePoint {
  double gamma = 1.0;
  double cheeger = 0.0;
};

// Index of the smallest value; the first one wins ties.
std::size_t ArgMinCurve(const std::vector<CurvePoint>& curve);

// h_S^(gamma) (min-volume denominator) for every grid value.
std::vector<CurvePoint> CheegerCurve(const SpectralDecomposition& decomp,
                                     const NodeSet& s, const GammaGrid& grid);

struct OracleGamma {
  double gamma_star = 1.0;
  std::vector<CurvePoint> curve;
};

// gamma* = argmin over the grid of the ground-truth Cheeger ratio.
OracleGamma FindOracleGamma(const SpectralDecomposition& decomp, const NodeSet& s_gt,
                            const GammaGrid& grid);

struct GammaEstimate {
  double gamma_hat = 1.0;
  NodeSet proxy_set;
  // 1_S^T L^gamma 1_S / 1_S^T D_gamma 1_S on the proxy set.
  std::vector<CurvePoint> cheeger_curve;
  int walk_steps = 0;
  double mass_captured = 0.0;
};

// Walk-based estimate of gamma* from the graph and one class's labeled nodes:
//  1. k = largest hop distance between labeled nodes (1 for a single label);
//  2. x^T = chi^T P^k with chi the labeled indicator normalized to sum 1;
//  3. the proxy set takes nodes in descending x (ties by ascending id) while
//     the running sum of x stays strictly below 0.7;
//  4. gamma_hat minimizes the proxy set's Cheeger quotient over the grid.
// Throws DegenerateError on isolated nodes or an empty proxy set,
// ConnectivityError when two labeled nodes are not connected.
GammaEstimate EstimateGamma(const Graph& g, const SpectralDecomposition& decomp,
                            const NodeSet& labeled, const GammaGrid& grid);
GammaEstimate EstimateGamma(const Graph& g, const NodeSet& labeled,
                            const GammaGrid& grid);

inline constexpr double kProxyMassThreshold = 0.7;

}  // namespace lgpr

#endif  // LGPR_GAMMA_SELECT_H_
