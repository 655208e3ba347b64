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

#include "lgpr/partition_metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lgpr/error.h"

namespace lgpr {
namespace {

void CheckProperSubset(const NodeSet& s, int n) {
  if (s.universe() != n) {
    throw ParameterError("node set universe does not match the graph");
  }
  if (s.empty() || s.size() == n) {
    throw ParameterError("Cheeger ratio needs a non-empty proper subset");
  }
}

CheegerReport Finish(double gamma, double numerator, double vol_s, double vol_total) {
  CheegerReport r;
  r.gamma = gamma;
  r.set_volume = vol_s;
  r.complement_volume = vol_total - vol_s;
  r.numerator = ClampNonNegative(numerator, std::max(vol_s, r.complement_volume));
  const double denom = std::min(r.set_volume, r.complement_volume);
  if (!(denom > 0.0)) {
    throw DegenerateError("Cheeger ratio denominator is zero (generalized volume " +
                          std::to_string(denom) + ")");
  }
  r.ratio = r.numerator / denom;
  return r;
}

}  // namespace

double ClampNonNegative(double numerator, double scale) {
  const double tol = 1e-8 * std::max(1.0, std::abs(scale));
  if (numerator >= 0.0) return numerator;
  if (numerator >= -tol) return 0.0;
  throw NumericalError("quadratic form 1^T L^gamma 1 = " + std::to_string(numerator) +
                       " is negative beyond round-off");
}

CheegerReport CheegerRatio(const SignedGraph& sg, const NodeSet& s) {
  CheckProperSubset(s, sg.num_nodes());
  const auto& m = s.members();
  const Eigen::MatrixXd& l = sg.lgamma();
  double numerator = 0.0;
  for (NodeId u : m) {
    for (NodeId v : m) numerator += l(u, v);
  }
  const double vol_s = GeneralizedVolume(sg, s);
  return Finish(sg.gamma(), numerator, vol_s, sg.generalized_degrees().sum());
}

CheegerReport CheegerRatio(const SpectralDecomposition& decomp, const NodeSet& s,
                           double gamma) {
  CheckProperSubset(s, decomp.num_nodes());
  const double numerator = decomp.QuadraticForm(s.Indicator(), gamma);
  const Eigen::VectorXd degrees = decomp.GeneralizedDegrees(gamma);
  double vol_s = 0.0;
  for (NodeId u : s) vol_s += degrees[u];
  return Finish(gamma, numerator, vol_s, degrees.sum());
}

CheegerReport CheegerRatio(const Graph& g, const NodeSet& s) {
  CheckProperSubset(s, g.num_nodes());
  double cut = 0.0;
  double vol_s = 0.0;
  for (NodeId u : s) {
    for (const Neighbor& nb : g.neighbors(u)) {
      vol_s += nb.weight;
      if (!s.Contains(nb.node)) cut += nb.weight;
    }
  }
  return Finish(1.0, cut, vol_s, g.adjacency().sum());
}

CutDecomposition DecomposeCut(const SignedGraph& sg, const NodeSet& s) {
  CheckProperSubset(s, sg.num_nodes());
  CutDecomposition c;
  const int n = sg.num_nodes();
  for (NodeId u : s) {
    for (NodeId v = 0; v < n; ++v) {
      if (v == u) continue;
      const double w = sg.signed_weight(u, v);
      const bool inside = s.Contains(v);
      if (w > 0.0) {
        (inside ? c.agreements_in : c.agreements_out) += w;
      } else if (w < 0.0) {
        (inside ? c.disagreements_in : c.disagreements_out) += -w;
      }
    }
  }
  return c;
}

double SbmExpectedCheeger(double p_in, double p_out, int order) {
  if (order != 1 && order != 2) {
    throw ParameterError("planted-partition prediction exists for order 1 or 2 only");
  }
  if (!(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0)) {
    throw ParameterError("edge probabilities must lie in [0, 1]");
  }
  if (p_in + p_out == 0.0) {
    throw DegenerateError("p_in + p_out is zero; the model has no edges");
  }
  const double h1 = p_out / (p_in + p_out);
  return order == 1 ? h1 : 2.0 * h1 * h1;
}

ImprovementCondition L2ImprovementCondition(const Graph& g, const NodeSet& s) {
  CheckProperSubset(s, g.num_nodes());
  ImprovementCondition c;
  c.mean_degree = Volume(g, s) / s.size();
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const bool inside = s.Contains(u);
    double boundary = 0.0;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (s.Contains(nb.node) != inside) boundary += nb.weight;
    }
    double& slot = inside ? c.max_boundary_inside : c.max_boundary_outside;
    slot = std::max(slot, boundary);
  }
  c.margin = c.mean_degree - (c.max_boundary_inside + c.max_boundary_outside);
  c.holds = c.margin >= 0.0;
  return c;
}

}  // namespace lgpr
