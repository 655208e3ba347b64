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

#ifndef LGPR_SPECTRAL_H_
#define LGPR_SPECTRAL_H_

#include <Eigen/Dense>

#include "lgpr/graph.h"

namespace lgpr {

// Eigendecomposition L = Q diag(lambda) Q^T of a combinatorial Laplacian.
// Eigenvalues are ascending; those below 1e-10 * lambda_max (including
// round-off negatives) are clipped to exactly zero.
class SpectralDecomposition {
 public:
  static constexpr double kClipRelative = 1e-10;

  SpectralDecomposition(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors);

  int num_nodes() const { return static_cast<int>(eigenvalues_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  // lambda^gamma elementwise with 0^gamma = 0.
  Eigen::VectorXd PoweredEigenvalues(double gamma) const;
  // Q diag(lambda^gamma) Q^T, symmetrized and projected so that rows sum to 0.
  Eigen::MatrixXd MatrixPower(double gamma) const;
  // diag(L^gamma) without forming the matrix: sum_k lambda_k^gamma Q_uk^2.
  Eigen::VectorXd GeneralizedDegrees(double gamma) const;
  // x^T L^gamma x as a sum of non-negative spectral terms.
  double QuadraticForm(const Eigen::VectorXd& x, double gamma) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

// Throws NumericalError when the symmetric eigensolver does not converge.
SpectralDecomposition Decompose(const Graph& g);

// The L^gamma-graph: L^gamma = D_gamma - W_gamma. Holds L^gamma itself; the
// generalized degrees are its diagonal and the signed adjacency its negated
// off-diagonal part.
class SignedGraph {
 public:
  // Throws ParameterError unless gamma > 0 and `lgamma` is square.
  SignedGraph(double gamma, Eigen::MatrixXd lgamma);

  double gamma() const { return gamma_; }
  int num_nodes() const { return static_cast<int>(lgamma_.rows()); }
  const Eigen::MatrixXd& lgamma() const { return lgamma_; }
  const Eigen::VectorXd& generalized_degrees() const { return gen_degree_; }
  double signed_weight(NodeId u, NodeId v) const {
    return u == v ? 0.0 : -lgamma_(u, v);
  }
  // W_gamma with a zero diagonal.
  Eigen::MatrixXd SignedAdjacency() const;

 private:
  double gamma_;
  Eigen::MatrixXd lgamma_;
  Eigen::VectorXd gen_degree_;
};

// Throws ParameterError when gamma <= 0.
SignedGraph LgammaGraph(const SpectralDecomposition& decomp, double gamma);
// Exact integer power of the Laplacian by repeated squaring; no eigensolver.
SignedGraph IntegerPowerGraph(const Graph& g, int power);

double GeneralizedVolume(const SignedGraph& sg, const NodeSet& s);

struct StationaryDistribution {
  Eigen::VectorXd probabilities;
  double total_volume = 0.0;
};

// (pi_gamma)_u = [D_gamma]_uu / vol_gamma(G). Throws DegenerateError when the
// total generalized volume is zero.
StationaryDistribution GeneralizedStationary(const SignedGraph& sg);

}  // namespace lgpr

#endif  // LGPR_SPECTRAL_H_
