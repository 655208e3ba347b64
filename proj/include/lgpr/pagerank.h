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

#ifndef LGPR_PAGERANK_H_
#define LGPR_PAGERANK_H_

#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "lgpr/graph.h"
#include "lgpr/graph_io.h"
#include "lgpr/spectral.h"

namespace lgpr {

enum class SeedKind { kIndicator, kStationary, kDegreeProportional, kCustom };

// Non-negative seed y, not identically zero.
class SeedVector {
 public:
  // Throws ParameterError on negative or non-finite entries or an all-zero
  // vector.
  SeedVector(Eigen::VectorXd values, SeedKind kind = SeedKind::kCustom);

  static SeedVector Indicator(const NodeSet& labeled);
  static SeedVector Stationary(const SignedGraph& sg);
  // D_gamma 1_S / vol_gamma(S): a labeled point placed in S with probability
  // proportional to its generalized degree.
  static SeedVector DegreeProportional(const SignedGraph& sg, const NodeSet& s);

  const Eigen::VectorXd& values() const { return values_; }
  SeedKind kind() const { return kind_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  Eigen::VectorXd values_;
  SeedKind kind_;
};

// f = mu (L^gamma D_gamma^{-1} + mu I)^{-1} y together with the y, mu and
// gamma that produced it.
struct ScoreVector {
  Eigen::VectorXd values;
  Eigen::VectorXd seed;
  double mu = 1.0;
  double gamma = 1.0;

  // Restart convention of the random-walk form: alpha = 1 / (1 + mu).
  double alpha() const { return 1.0 / (1.0 + mu); }
};

// Labeled nodes per class; classes are disjoint and each non-empty.
class LabelAssignment {
 public:
  // Throws ParameterError on fewer than two classes, an empty class, or a node
  // labeled twice.
  LabelAssignment(int universe, std::vector<NodeSet> classes);
  // Class k collects every row with label k; labels must be 0..K-1.
  static LabelAssignment FromLabeledNodes(int universe,
                                          const std::vector<LabeledNode>& rows);

  int universe() const { return universe_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const NodeSet& labeled(int k) const { return classes_[static_cast<std::size_t>(k)]; }
  const std::vector<NodeSet>& classes() const { return classes_; }
  // n x K matrix whose column k is the indicator of class k.
  Eigen::MatrixXd SeedMatrix() const;

 private:
  int universe_;
  std::vector<NodeSet> classes_;
};

struct ScoreMatrix {
  Eigen::MatrixXd scores;  // n x K, column k diffuses class k
  double mu = 1.0;
  double gamma = 1.0;
  std::vector<int> assignment;  // row-wise arg-max
};

// Factorization of the closed form for a fixed (gamma, mu), reusable across
// seed vectors. The system is solved in the symmetric similar form
//   (D^{-1/2} L^gamma D^{-1/2} + mu I) z = mu D^{-1/2} y,   f = D^{1/2} z
// with a Cholesky factorization.
class PageRankSolver {
 public:
  // Generalized degrees at or below 1e-12 * max degree are rejected.
  static constexpr double kMinDegreeRelative = 1e-12;

  // Throws ParameterError when mu <= 0, DegenerateError on a vanishing
  // generalized degree and NumericalError when the factorization fails.
  PageRankSolver(const SignedGraph& sg, double mu);

  double mu() const { return mu_; }
  double gamma() const { return gamma_; }

  ScoreVector Solve(const SeedVector& y) const;
  // One solution column per seed column.
  Eigen::MatrixXd SolveColumns(const Eigen::MatrixXd& seeds) const;

 private:
  double mu_;
  double gamma_;
  Eigen::VectorXd sqrt_degree_;
  Eigen::VectorXd inv_sqrt_degree_;
  Eigen::VectorXd null_direction_;
  Eigen::LLT<Eigen::MatrixXd> factor_;
};

ScoreVector SolvePageRank(const SignedGraph& sg, const SeedVector& y, double mu);

// ||(L^gamma D_gamma^{-1} + mu I) f - mu y||_2 computed directly from L^gamma.
double SolveResidual(const SignedGraph& sg, const ScoreVector& f);

// Row-wise arg-max; ties go to the lowest class id.
std::vector<int> AssignClasses(const Eigen::MatrixXd& scores);

ScoreMatrix SolveMulticlass(const SignedGraph& sg, const LabelAssignment& labels,
                            double mu);

// Sweep over q = D_gamma^{-1} f in descending order (ties by ascending node
// id). Prefix j (1-based) is the set of the first j nodes; prefixes run over
// j = 1..N-1. The best prefix is the smallest j whose ratio is within
// kSweepTieRelative * max(1, min) of the minimum; tau is that prefix's ratio.
inline constexpr double kSweepTieRelative = 1e-10;

struct SweepCutResult {
  std::vector<NodeId> permutation;
  std::vector<double> q_values;       // q of permutation[i]
  std::vector<double> prefix_ratios;  // prefix_ratios[j-1] = h^(gamma)(S_j)
  int best_index = 0;                 // smallest j attaining tau up to ties
  NodeSet best_set;
  double tau = 0.0;
};

// Throws DegenerateError when a generalized degree is zero or the graph has
// fewer than two nodes, ParameterError when f is not finite.
SweepCutResult SweepCut(const SignedGraph& sg, const Eigen::VectorXd& f);
inline SweepCutResult SweepCut(const SignedGraph& sg, const ScoreVector& f) {
  return SweepCut(sg, f.values);
}

// Exact expected escape mass E[f(S^c)] for a seed placed in S with probability
// proportional to the generalized degree, against the bound h_S^(gamma) / mu.
struct EscapeMassCheck {
  double expected_escape = 0.0;
  double cheeger = 0.0;
  double bound = 0.0;
  bool holds = false;  // expected_escape <= bound + 1e-8
};

// Throws ParameterError unless 0 < vol_gamma(S) <= vol_gamma(G) / 2.
EscapeMassCheck EscapeMassBound(const SignedGraph& sg, const NodeSet& s, double mu);

// Two-sided bound on mu (y(S_j) - f(S_j)) / (q_1 - q_N) for sweep prefix S_j
// in terms of the outgoing agreements and disagreements of S_j and the
// normalized drop (q_j - q_{j+1}) / (q_1 - q_N).
struct SharpDropCheck {
  int index = 0;
  double drop_ratio = 0.0;
  double agreements_out = 0.0;
  double disagreements_out = 0.0;
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  double lower_slack = 0.0;  // middle - lower
  double upper_slack = 0.0;  // upper - middle
  bool holds = false;        // both slacks >= -1e-6
};

// Throws ParameterError when j is outside 1..N-1 and DegenerateError when q is
// constant.
SharpDropCheck SharpDropInequality(const SignedGraph& sg, const ScoreVector& f,
                                   int j);

// Diagnostic for the classical sharp-drop dichotomy at gamma = 1: for each
// prefix j either (a) the cut is below 2 h vol(S_j), or (b) some k > j has
// vol(S_k) >= (1 + h) vol(S_j) and q_k >= q_j - alpha / (h vol(S_j)).
enum class DropAlternative { kSmallCut, kNoSharpDrop, kNeither };

std::vector<DropAlternative> SharpDropDichotomy(const SignedGraph& sg,
                                                const ScoreVector& f, double h);

}  // namespace lgpr

#endif  // LGPR_PAGERANK_H_
