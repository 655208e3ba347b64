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

#include "lgpr/pagerank.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "lgpr/error.h"
#include "lgpr/partition_metrics.h"

namespace lgpr {
namespace {

void CheckMu(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw ParameterError("mu must be a positive finite number, got " +
                         std::to_string(mu));
  }
}

// q = D_gamma^{-1} f and the descending order of q, ties by ascending id.
struct SweepOrder {
  Eigen::VectorXd q;
  std::vector<NodeId> order;
};

SweepOrder MakeSweepOrder(const SignedGraph& sg, const Eigen::VectorXd& f) {
  const int n = sg.num_nodes();
  if (f.size() != n) throw ParameterError("score vector has the wrong length");
  if (!f.allFinite()) throw ParameterError("score vector is not finite");
  const Eigen::VectorXd& d = sg.generalized_degrees();
  for (NodeId u = 0; u < n; ++u) {
    if (!(d[u] > 0.0)) {
      throw DegenerateError("node " + std::to_string(u) +
                            " has zero generalized degree; sweep undefined");
    }
  }
  SweepOrder s;
  s.q = f.cwiseQuotient(d);
  s.order.resize(static_cast<std::size_t>(n));
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](NodeId a, NodeId b) { return s.q[a] > s.q[b]; });
  return s;
}

}  // namespace

SeedVector::SeedVector(Eigen::VectorXd values, SeedKind kind)
    : values_(std::move(values)), kind_(kind) {
  if (!values_.allFinite()) throw ParameterError("seed vector is not finite");
  if (values_.size() == 0 || values_.minCoeff() < 0.0) {
    throw ParameterError("seed vector entries must be >= 0");
  }
  if (values_.sum() == 0.0) throw ParameterError("seed vector is all zero");
}

SeedVector SeedVector::Indicator(const NodeSet& labeled) {
  return SeedVector(labeled.Indicator(), SeedKind::kIndicator);
}

SeedVector SeedVector::Stationary(const SignedGraph& sg) {
  return SeedVector(GeneralizedStationary(sg).probabilities, SeedKind::kStationary);
}

SeedVector SeedVector::DegreeProportional(const SignedGraph& sg, const NodeSet& s) {
  const double vol = GeneralizedVolume(sg, s);
  if (!(vol > 0.0)) throw DegenerateError("generalized volume of the set is zero");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(sg.num_nodes());
  for (NodeId u : s) y[u] = sg.generalized_degrees()[u] / vol;
  return SeedVector(std::move(y), SeedKind::kDegreeProportional);
}

LabelAssignment::LabelAssignment(int universe, std::vector<NodeSet> classes)
    : universe_(universe), classes_(std::move(classes)) {
  if (classes_.size() < 2) throw ParameterError("need at least two classes");
  std::vector<char> seen(static_cast<std::size_t>(universe), 0);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const NodeSet& c = classes_[k];
    if (c.universe() != universe) {
      throw ParameterError("class node set universe does not match");
    }
    if (c.empty()) {
      throw ParameterError("class " + std::to_string(k) + " has no labeled nodes");
    }
    for (NodeId u : c) {
      if (seen[static_cast<std::size_t>(u)]) {
        throw ParameterError("node " + std::to_string(u) + " labeled twice");
      }
      seen[static_cast<std::size_t>(u)] = 1;
    }
  }
}

LabelAssignment LabelAssignment::FromLabeledNodes(
    int universe, const std::vector<LabeledNode>& rows) {
  int num_classes = 0;
  for (const auto& r : rows) num_classes = std::max(num_classes, r.label + 1);
  std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(num_classes));
  for (const auto& r : rows) members[static_cast<std::size_t>(r.label)].push_back(r.node);
  std::vector<NodeSet> classes;
  for (auto& m : members) classes.emplace_back(universe, std::move(m));
  return LabelAssignment(universe, std::move(classes));
}

Eigen::MatrixXd LabelAssignment::SeedMatrix() const {
  Eigen::MatrixXd y(universe_, num_classes());
  for (int k = 0; k < num_classes(); ++k) y.col(k) = labeled(k).Indicator();
  return y;
}

PageRankSolver::PageRankSolver(const SignedGraph& sg, double mu)
    : mu_(mu), gamma_(sg.gamma()) {
  CheckMu(mu);
  const Eigen::VectorXd& d = sg.generalized_degrees();
  const int n = sg.num_nodes();
  if (n == 0) throw DegenerateError("graph has no nodes");
  const double floor = kMinDegreeRelative * d.maxCoeff();
  for (NodeId u = 0; u < n; ++u) {
    if (!(d[u] > floor) || !(d[u] > 0.0)) {
      throw DegenerateError("node " + std::to_string(u) + " has generalized degree " +
                            std::to_string(d[u]) + " (isolated or numerically zero)");
    }
  }
  sqrt_degree_ = d.cwiseSqrt();
  inv_sqrt_degree_ = sqrt_degree_.cwiseInverse();
  null_direction_ = sqrt_degree_.normalized();
  Eigen::MatrixXd m =
      inv_sqrt_degree_.asDiagonal() * sg.lgamma() * inv_sqrt_degree_.asDiagonal();
  m.diagonal().array() += mu;
  factor_.compute(m);
  if (factor_.info() != Eigen::Success) {
    throw NumericalError("Cholesky factorization failed at gamma = " +
                         std::to_string(gamma_) + ", mu = " + std::to_string(mu));
  }
}

Eigen::MatrixXd PageRankSolver::SolveColumns(const Eigen::MatrixXd& seeds) const {
  if (seeds.rows() != sqrt_degree_.size()) {
    throw ParameterError("seed matrix has the wrong number of rows");
  }
  // D^{1/2} 1 spans the kernel of the scaled system, so its component is
  // solved exactly and kept out of the factorized solve, where small mu would
  // otherwise amplify round-off along it.
  Eigen::MatrixXd rhs = inv_sqrt_degree_.asDiagonal() * seeds;
  const Eigen::RowVectorXd coef = null_direction_.transpose() * rhs;
  rhs -= null_direction_ * coef;
  Eigen::MatrixXd z = factor_.solve(mu_ * rhs);
  z -= null_direction_ * (null_direction_.transpose() * z);
  z += null_direction_ * coef;
  return sqrt_degree_.asDiagonal() * z;
}

ScoreVector PageRankSolver::Solve(const SeedVector& y) const {
  ScoreVector f;
  f.values = SolveColumns(y.values());
  f.seed = y.values();
  f.mu = mu_;
  f.gamma = gamma_;
  return f;
}

ScoreVector SolvePageRank(const SignedGraph& sg, const SeedVector& y, double mu) {
  return PageRankSolver(sg, mu).Solve(y);
}

double SolveResidual(const SignedGraph& sg, const ScoreVector& f) {
  const Eigen::VectorXd q = f.values.cwiseQuotient(sg.generalized_degrees());
  return (sg.lgamma() * q + f.mu * (f.values - f.seed)).norm();
}

std::vector<int> AssignClasses(const Eigen::MatrixXd& scores) {
  std::vector<int> out(static_cast<std::size_t>(scores.rows()), 0);
  for (Eigen::Index u = 0; u < scores.rows(); ++u) {
    int best = 0;
    for (Eigen::Index k = 1; k < scores.cols(); ++k) {
      if (scores(u, k) > scores(u, best)) best = static_cast<int>(k);
    }
    out[static_cast<std::size_t>(u)] = best;
  }
  return out;
}

ScoreMatrix SolveMulticlass(const SignedGraph& sg, const LabelAssignment& labels,
                            double mu) {
  if (labels.universe() != sg.num_nodes()) {
    throw ParameterError("label universe does not match the graph");
  }
  ScoreMatrix out;
  out.scores = PageRankSolver(sg, mu).SolveColumns(labels.SeedMatrix());
  out.mu = mu;
  out.gamma = sg.gamma();
  out.assignment = AssignClasses(out.scores);
  return out;
}

SweepCutResult SweepCut(const SignedGraph& sg, const Eigen::VectorXd& f) {
  const int n = sg.num_nodes();
  if (n < 2) throw DegenerateError("sweep cut needs at least two nodes");
  SweepOrder order = MakeSweepOrder(sg, f);

  SweepCutResult r;
  r.permutation = order.order;
  r.q_values.reserve(static_cast<std::size_t>(n));
  for (NodeId u : r.permutation) r.q_values.push_back(order.q[u]);

  const Eigen::MatrixXd& l = sg.lgamma();
  const Eigen::VectorXd& d = sg.generalized_degrees();
  const double total = d.sum();
  // boundary = L^gamma 1_S, numerator = 1_S^T L^gamma 1_S, both updated as
  // nodes join S.
  Eigen::VectorXd boundary = Eigen::VectorXd::Zero(n);
  double numerator = 0.0;
  double vol = 0.0;
  r.tau = std::numeric_limits<double>::infinity();
  r.prefix_ratios.reserve(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) {
    const NodeId v = r.permutation[static_cast<std::size_t>(j - 1)];
    numerator += 2.0 * boundary[v] + l(v, v);
    boundary += l.col(v);
    vol += d[v];
    const double denom = std::min(vol, total - vol);
    const double ratio = denom > 0.0
                             ? ClampNonNegative(numerator, std::max(vol, total - vol)) / denom
                             : std::numeric_limits<double>::infinity();
    r.prefix_ratios.push_back(ratio);
    r.tau = std::min(r.tau, ratio);
  }
  if (!std::isfinite(r.tau)) {
    throw DegenerateError("every sweep prefix has zero generalized volume");
  }
  // Ratios within round-off of the minimum count as ties.
  const double cutoff = r.tau + kSweepTieRelative * std::max(1.0, r.tau);
  for (int j = 1; j < n; ++j) {
    if (r.prefix_ratios[static_cast<std::size_t>(j - 1)] <= cutoff) {
      r.best_index = j;
      r.tau = r.prefix_ratios[static_cast<std::size_t>(j - 1)];
      break;
    }
  }
  r.best_set = NodeSet(n, std::vector<NodeId>(r.permutation.begin(),
                                              r.permutation.begin() + r.best_index));
  return r;
}

EscapeMassCheck EscapeMassBound(const SignedGraph& sg, const NodeSet& s, double mu) {
  CheckMu(mu);
  const double vol = GeneralizedVolume(sg, s);
  const double total = sg.generalized_degrees().sum();
  if (s.empty() || !(vol > 0.0)) {
    throw ParameterError("escape bound needs a set with positive generalized volume");
  }
  if (vol > total / 2.0) {
    throw ParameterError("escape bound needs vol_gamma(S) <= vol_gamma(G) / 2");
  }
  const ScoreVector f = SolvePageRank(sg, SeedVector::DegreeProportional(sg, s), mu);
  EscapeMassCheck c;
  for (NodeId u : s.Complement()) c.expected_escape += f.values[u];
  c.cheeger = CheegerRatio(sg, s).ratio;
  c.bound = c.cheeger / mu;
  c.holds = c.expected_escape <= c.bound + 1e-8;
  return c;
}

SharpDropCheck SharpDropInequality(const SignedGraph& sg, const ScoreVector& f,
                                   int j) {
  const int n = sg.num_nodes();
  if (j < 1 || j >= n) {
    throw ParameterError("prefix index must lie in 1..N-1, got " + std::to_string(j));
  }
  if (f.seed.size() != n) throw ParameterError("score vector carries no seed");
  const SweepOrder order = MakeSweepOrder(sg, f.values);
  const auto& perm = order.order;
  const double q1 = order.q[perm.front()];
  const double qn = order.q[perm.back()];
  const double range = q1 - qn;
  if (!(range > 0.0)) {
    throw DegenerateError("normalized scores are constant; the bound is unbounded");
  }
  const NodeSet sj(n, std::vector<NodeId>(perm.begin(), perm.begin() + j));
  const CutDecomposition cut = DecomposeCut(sg, sj);

  SharpDropCheck c;
  c.index = j;
  c.drop_ratio = (order.q[perm[static_cast<std::size_t>(j - 1)]] -
                  order.q[perm[static_cast<std::size_t>(j)]]) /
                 range;
  c.agreements_out = cut.agreements_out;
  c.disagreements_out = cut.disagreements_out;
  double mass_gap = 0.0;
  for (NodeId u : sj) mass_gap += f.seed[u] - f.values[u];
  c.middle = f.mu * mass_gap / range;
  const double rho = c.drop_ratio;
  c.upper = c.agreements_out * (2.0 - rho) - c.disagreements_out * (2.0 * rho - 1.0);
  c.lower = c.agreements_out * (2.0 * rho - 1.0) - c.disagreements_out * (2.0 - rho);
  c.lower_slack = c.middle - c.lower;
  c.upper_slack = c.upper - c.middle;
  c.holds = c.lower_slack >= -1e-6 && c.upper_slack >= -1e-6;
  return c;
}

std::vector<DropAlternative> SharpDropDichotomy(const SignedGraph& sg,
                                                const ScoreVector& f, double h) {
  if (!(h > 0.0 && h < 1.0)) throw ParameterError("h must lie in (0, 1)");
  const int n = sg.num_nodes();
  const SweepOrder order = MakeSweepOrder(sg, f.values);
  const auto& perm = order.order;
  const Eigen::MatrixXd& l = sg.lgamma();
  const Eigen::VectorXd& d = sg.generalized_degrees();

  // Prefix volumes and cut weights for j = 1..N.
  std::vector<double> vol(static_cast<std::size_t>(n)), cut(static_cast<std::size_t>(n));
  Eigen::VectorXd boundary = Eigen::VectorXd::Zero(n);
  double numerator = 0.0, v_acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const NodeId v = perm[static_cast<std::size_t>(j)];
    numerator += 2.0 * boundary[v] + l(v, v);
    boundary += l.col(v);
    v_acc += d[v];
    vol[static_cast<std::size_t>(j)] = v_acc;
    cut[static_cast<std::size_t>(j)] = numerator;
  }

  const double alpha = f.alpha();
  std::vector<DropAlternative> out;
  for (int j = 0; j + 1 < n; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    if (cut[sj] < 2.0 * h * vol[sj]) {
      out.push_back(DropAlternative::kSmallCut);
      continue;
    }
    const double qj = order.q[perm[sj]];
    const double threshold = qj - alpha / (h * vol[sj]);
    bool found = false;
    for (int k = j + 1; k < n && !found; ++k) {
      const auto sk = static_cast<std::size_t>(k);
      found = vol[sk] >= vol[sj] * (1.0 + h) && order.q[perm[sk]] >= threshold;
    }
    out.push_back(found ? DropAlternative::kNoSharpDrop : DropAlternative::kNeither);
  }
  return out;
}

}  // namespace lgpr
