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

#ifndef LGPR_PARTITION_METRICS_H_
#define LGPR_PARTITION_METRICS_H_

#include "lgpr/graph.h"
#include "lgpr/spectral.h"

namespace lgpr {

// Signed edge mass of W_gamma split by sign and by position relative to S.
// The "in" sums run over ordered pairs (u, w) in S x S, so each internal edge
// is counted twice; the "out" sums run over S x S^c.
struct CutDecomposition {
  double agreements_in = 0.0;
  double agreements_out = 0.0;
  double disagreements_in = 0.0;
  double disagreements_out = 0.0;

  // sum_{u in S, v in S^c} [W_gamma]_uv.
  double cut_weight() const { return agreements_out - disagreements_out; }
  // sum_{u in S} [D_gamma]_uu.
  double internal_weight() const { return agreements_in - disagreements_in; }
};

struct CheegerReport {
  double gamma = 1.0;
  double numerator = 0.0;  // 1_S^T L^gamma 1_S
  double set_volume = 0.0;
  double complement_volume = 0.0;
  double ratio = 0.0;
};

// Generalized Cheeger ratio h_S^(gamma): the signed cut weight over
// min(vol_gamma(S), vol_gamma(S^c)), with the numerator evaluated as the
// quadratic form 1_S^T L^gamma 1_S. Throws ParameterError when S is empty or
// the full node set, DegenerateError when the denominator is zero, and
// NumericalError when the numerator is negative beyond round-off.
CheegerReport CheegerRatio(const SignedGraph& sg, const NodeSet& s);
// Same quantity from the eigendecomposition, without materializing L^gamma.
CheegerReport CheegerRatio(const SpectralDecomposition& decomp, const NodeSet& s,
                           double gamma);
// Classical conductance on the input graph (gamma = 1).
CheegerReport CheegerRatio(const Graph& g, const NodeSet& s);

CutDecomposition DecomposeCut(const SignedGraph& sg, const NodeSet& s);

// Maps a quadratic-form numerator onto [0, inf): values in [-tol, 0) become 0
// and anything below -tol raises NumericalError, with tol = 1e-8 * max(1, scale).
double ClampNonNegative(double numerator, double scale);

// Large-n planted-partition prediction of E[h_{S_gt}^(order)]:
// order 1 gives p_out / (p_in + p_out), order 2 gives twice its square.
// Throws ParameterError for other orders or probabilities outside [0, 1],
// DegenerateError when p_in + p_out == 0.
double SbmExpectedCheeger(double p_in, double p_out, int order);

// Sufficient condition for h^(2) <= h^(1):
//   vol(S)/|S| >= max_{u in S} sum_{v in S^c} W_uv + max_{w in S^c} sum_{l in S} W_wl.
struct ImprovementCondition {
  bool holds = false;
  double margin = 0.0;  // lhs - rhs
  double mean_degree = 0.0;
  double max_boundary_inside = 0.0;
  double max_boundary_outside = 0.0;
};

ImprovementCondition L2ImprovementCondition(const Graph& g, const NodeSet& s);

}  // namespace lgpr

#endif  // LGPR_PARTITION_METRICS_H_
