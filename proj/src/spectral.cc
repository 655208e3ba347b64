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

#include "lgpr/spectral.h"

#include <cmath>
#include <string>
#include <utility>

#include "lgpr/error.h"

namespace lgpr {
namespace {

void CheckGamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("gamma must be a positive finite number, got " +
                         std::to_string(gamma));
  }
}

// Removes the round-off component along the constant vector, which is in the
// kernel of every Laplacian power: M <- (I - 11^T/n) M (I - 11^T/n).
void ProjectOutConstant(Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return;
  m = 0.5 * (m + m.transpose()).eval();
  const Eigen::VectorXd row_mean = m.rowwise().mean();
  const double grand_mean = row_mean.mean();
  m.colwise() -= row_mean;
  m.rowwise() -= row_mean.transpose();
  m.array() += grand_mean;
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(Eigen::VectorXd eigenvalues,
                                             Eigen::MatrixXd eigenvectors)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
  if (eigenvectors_.rows() != eigenvectors_.cols() ||
      eigenvectors_.cols() != eigenvalues_.size()) {
    throw ParameterError("eigenvector matrix does not match the eigenvalue count");
  }
  const double lambda_max = eigenvalues_.size() > 0 ? eigenvalues_.maxCoeff() : 0.0;
  const double clip = kClipRelative * std::max(lambda_max, 0.0);
  for (double& l : eigenvalues_) {
    if (l < clip || l <= 0.0) l = 0.0;
  }
}

Eigen::VectorXd SpectralDecomposition::PoweredEigenvalues(double gamma) const {
  CheckGamma(gamma);
  Eigen::VectorXd out(eigenvalues_.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
    const double l = eigenvalues_[k];
    out[k] = (l == 0.0) ? 0.0 : (gamma == 1.0 ? l : std::pow(l, gamma));
  }
  return out;
}

Eigen::MatrixXd SpectralDecomposition::MatrixPower(double gamma) const {
  const Eigen::VectorXd lg = PoweredEigenvalues(gamma);
  Eigen::MatrixXd m = eigenvectors_ * lg.asDiagonal() * eigenvectors_.transpose();
  ProjectOutConstant(m);
  return m;
}

Eigen::VectorXd SpectralDecomposition::GeneralizedDegrees(double gamma) const {
  return eigenvectors_.array().square().matrix() * PoweredEigenvalues(gamma);
}

double SpectralDecomposition::QuadraticForm(const Eigen::VectorXd& x,
                                            double gamma) const {
  if (x.size() != eigenvalues_.size()) {
    throw ParameterError("vector length does not match the decomposition");
  }
  const Eigen::VectorXd coeffs = eigenvectors_.transpose() * x;
  return coeffs.array().square().matrix().dot(PoweredEigenvalues(gamma));
}

SpectralDecomposition Decompose(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.Laplacian());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver failed to converge on a " +
                         std::to_string(g.num_nodes()) + "-node Laplacian");
  }
  return SpectralDecomposition(solver.eigenvalues(), solver.eigenvectors());
}

SignedGraph::SignedGraph(double gamma, Eigen::MatrixXd lgamma)
    : gamma_(gamma), lgamma_(std::move(lgamma)) {
  CheckGamma(gamma);
  if (lgamma_.rows() != lgamma_.cols()) {
    throw ParameterError("L^gamma must be square");
  }
  gen_degree_ = lgamma_.diagonal();
}

Eigen::MatrixXd SignedGraph::SignedAdjacency() const {
  Eigen::MatrixXd w = -lgamma_;
  w.diagonal().setZero();
  return w;
}

SignedGraph LgammaGraph(const SpectralDecomposition& decomp, double gamma) {
  CheckGamma(gamma);
  return SignedGraph(gamma, decomp.MatrixPower(gamma));
}

SignedGraph IntegerPowerGraph(const Graph& g, int power) {
  if (power < 1) throw ParameterError("integer Laplacian power must be >= 1");
  const Eigen::MatrixXd l = g.Laplacian();
  Eigen::MatrixXd result;
  Eigen::MatrixXd base = l;
  bool have_result = false;
  for (int p = power; p > 0; p >>= 1) {
    if (p & 1) {
      result = have_result ? Eigen::MatrixXd(result * base) : base;
      have_result = true;
    }
    if (p > 1) base = base * base;
  }
  result = 0.5 * (result + result.transpose()).eval();
  return SignedGraph(static_cast<double>(power), std::move(result));
}

double GeneralizedVolume(const SignedGraph& sg, const NodeSet& s) {
  if (s.universe() != sg.num_nodes()) {
    throw ParameterError("node set universe does not match the graph");
  }
  double vol = 0.0;
  for (NodeId u : s) vol += sg.generalized_degrees()[u];
  return vol;
}

StationaryDistribution GeneralizedStationary(const SignedGraph& sg) {
  const double total = sg.generalized_degrees().sum();
  if (!(total > 0.0)) {
    throw DegenerateError("total generalized volume is zero; the graph has no edges");
  }
  return {sg.generalized_degrees() / total, total};
}

}  // namespace lgpr
