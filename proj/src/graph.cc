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

#include "lgpr/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "lgpr/error.h"

namespace lgpr {

NodeSet::NodeSet(int universe, std::vector<NodeId> members)
    : universe_(universe), members_(std::move(members)) {
  if (universe < 0) throw ParameterError("node set universe must be >= 0");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= universe) {
      throw ParameterError("node id " + std::to_string(members_[i]) +
                           " outside [0, " + std::to_string(universe) + ")");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw ParameterError("duplicate node id " + std::to_string(members_[i]));
    }
  }
}

NodeSet NodeSet::Full(int universe) { return Range(universe, 0, universe); }

NodeSet NodeSet::Range(int universe, NodeId begin, NodeId end) {
  std::vector<NodeId> members(static_cast<std::size_t>(std::max(0, end - begin)));
  std::iota(members.begin(), members.end(), begin);
  return NodeSet(universe, std::move(members));
}

NodeSet NodeSet::FromIndicator(const Eigen::VectorXd& indicator) {
  std::vector<NodeId> members;
  for (Eigen::Index u = 0; u < indicator.size(); ++u) {
    if (indicator[u] != 0.0) members.push_back(static_cast<NodeId>(u));
  }
  return NodeSet(static_cast<int>(indicator.size()), std::move(members));
}

bool NodeSet::Contains(NodeId u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

NodeSet NodeSet::Complement() const {
  NodeSet out;
  out.universe_ = universe_;
  out.members_.reserve(static_cast<std::size_t>(universe_ - size()));
  auto it = members_.begin();
  for (NodeId u = 0; u < universe_; ++u) {
    if (it != members_.end() && *it == u) {
      ++it;
    } else {
      out.members_.push_back(u);
    }
  }
  return out;
}

Eigen::VectorXd NodeSet::Indicator() const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(universe_);
  for (NodeId u : members_) x[u] = 1.0;
  return x;
}

Graph::Graph(int num_nodes)
    : Graph(Eigen::MatrixXd::Zero(std::max(0, num_nodes), std::max(0, num_nodes)),
            true) {
  if (num_nodes < 0) throw ParameterError("node count must be >= 0");
}

Graph::Graph(Eigen::MatrixXd adjacency, bool /*validated*/)
    : adjacency_(std::move(adjacency)) {
  const auto n = static_cast<std::size_t>(adjacency_.rows());
  neighbors_.resize(n);
  for (Eigen::Index u = 0; u < adjacency_.rows(); ++u) {
    for (Eigen::Index v = 0; v < adjacency_.cols(); ++v) {
      const double w = adjacency_(u, v);
      if (w > 0.0) {
        neighbors_[static_cast<std::size_t>(u)].push_back(
            {static_cast<NodeId>(v), w});
        if (u < v) ++num_edges_;
      }
    }
  }
}

Graph Graph::FromEdges(int num_nodes, std::span<const Edge> edges) {
  if (num_nodes < 0) throw ParameterError("node count must be >= 0");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(num_nodes, num_nodes);
  Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(num_nodes, num_nodes);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= num_nodes || e.v < 0 || e.v >= num_nodes) {
      throw ParameterError("edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ") references a node outside [0, " +
                           std::to_string(num_nodes) + ")");
    }
    if (e.u == e.v) {
      throw ParameterError("self-loop at node " + std::to_string(e.u));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw ParameterError("edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ") has invalid weight");
    }
    if (seen(e.u, e.v) != 0) {
      throw ParameterError("edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ") listed twice");
    }
    seen(e.u, e.v) = seen(e.v, e.u) = 1;
    w(e.u, e.v) = w(e.v, e.u) = e.weight;
  }
  return Graph(std::move(w), true);
}

Graph Graph::FromAdjacency(Eigen::MatrixXd adjacency) {
  if (adjacency.rows() != adjacency.cols()) {
    throw ParameterError("adjacency matrix must be square");
  }
  for (Eigen::Index u = 0; u < adjacency.rows(); ++u) {
    if (adjacency(u, u) != 0.0) throw ParameterError("adjacency has a self-loop");
    for (Eigen::Index v = 0; v < adjacency.cols(); ++v) {
      const double w = adjacency(u, v);
      if (!std::isfinite(w) || w < 0.0) {
        throw ParameterError("adjacency entries must be finite and >= 0");
      }
      if (w != adjacency(v, u)) throw ParameterError("adjacency is not symmetric");
    }
  }
  return Graph(std::move(adjacency), true);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (const Neighbor& nb : neighbors(u)) {
      if (u < nb.node) out.push_back({u, nb.node, nb.weight});
    }
  }
  return out;
}

Eigen::MatrixXd Graph::Laplacian() const {
  Eigen::MatrixXd l = -adjacency_;
  l.diagonal() = adjacency_.rowwise().sum();
  return l;
}

FeatureMatrix::FeatureMatrix(Eigen::MatrixXd points) : points_(std::move(points)) {
  if (points_.rows() == 0 || points_.cols() == 0) {
    throw ParameterError("feature matrix is empty");
  }
  if (!points_.allFinite()) {
    throw ParameterError("feature matrix contains NaN or infinite entries");
  }
}

Graph BuildKnnGraph(const FeatureMatrix& points, int k, double sigma) {
  const int n = points.num_points();
  if (k < 1) throw ParameterError("k must be >= 1");
  if (k >= n) {
    throw ParameterError("k = " + std::to_string(k) + " must be smaller than the " +
                         "number of points (" + std::to_string(n) + ")");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ParameterError("sigma must be a positive finite number");
  }

  const Eigen::MatrixXd& x = points.points();
  Eigen::MatrixXd sq_dist(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      const double d = (u == v) ? 0.0 : (x.row(u) - x.row(v)).squaredNorm();
      sq_dist(u, v) = sq_dist(v, u) = d;
    }
  }

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  std::vector<NodeId> order(static_cast<std::size_t>(n - 1));
  for (int u = 0; u < n; ++u) {
    std::size_t i = 0;
    for (int v = 0; v < n; ++v) {
      if (v != u) order[i++] = v;
    }
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](NodeId a, NodeId b) {
                        const double da = sq_dist(u, a), db = sq_dist(u, b);
                        return da < db || (da == db && a < b);
                      });
    for (int j = 0; j < k; ++j) {
      const NodeId v = order[static_cast<std::size_t>(j)];
      const double weight = std::exp(-sq_dist(u, v) / (sigma * sigma));
      w(u, v) = w(v, u) = weight;
    }
  }
  return Graph::FromAdjacency(std::move(w));
}

Eigen::VectorXd DegreeVector(const Graph& g) {
  return g.adjacency().rowwise().sum();
}

double Volume(const Graph& g, const NodeSet& s) {
  if (s.universe() != g.num_nodes()) {
    throw ParameterError("node set universe does not match the graph");
  }
  double vol = 0.0;
  for (NodeId u : s) vol += g.adjacency().row(u).sum();
  return vol;
}

Eigen::MatrixXd RandomWalkMatrix(const Graph& g) {
  const Eigen::VectorXd d = DegreeVector(g);
  for (Eigen::Index u = 0; u < d.size(); ++u) {
    if (!(d[u] > 0.0)) {
      throw DegenerateError("node " + std::to_string(u) +
                            " has zero degree; random walk undefined");
    }
  }
  return d.cwiseInverse().asDiagonal() * g.adjacency();
}

Eigen::VectorXd WalkDistribution(const Graph& g, const Eigen::VectorXd& start,
                                 int steps) {
  if (start.size() != g.num_nodes()) {
    throw ParameterError("walk start vector has the wrong length");
  }
  if (steps < 0) throw ParameterError("walk step count must be >= 0");
  const Eigen::VectorXd d = DegreeVector(g);
  Eigen::VectorXd x = start;
  for (int t = 0; t < steps; ++t) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(x.size());
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (x[u] == 0.0) continue;
      if (!(d[u] > 0.0)) {
        throw DegenerateError("walk reached isolated node " + std::to_string(u));
      }
      const double share = x[u] / d[u];
      for (const Neighbor& nb : g.neighbors(u)) next[nb.node] += share * nb.weight;
    }
    x.swap(next);
  }
  return x;
}

int HopTable::MaxPairwiseHops() const {
  int best = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (NodeId v : sources) {
      const int h = at(i, v);
      if (h == kUnreachable) {
        throw ConnectivityError("labeled nodes " + std::to_string(sources[i]) +
                                " and " + std::to_string(v) +
                                " are not connected");
      }
      best = std::max(best, h);
    }
  }
  return best;
}

HopTable GeodesicHops(const Graph& g, const NodeSet& sources) {
  if (sources.universe() != g.num_nodes()) {
    throw ParameterError("node set universe does not match the graph");
  }
  HopTable table;
  table.sources = sources.members();
  const auto n = static_cast<std::size_t>(g.num_nodes());
  for (NodeId s : sources) {
    std::vector<int> dist(n, HopTable::kUnreachable);
    std::queue<NodeId> frontier;
    dist[static_cast<std::size_t>(s)] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      for (const Neighbor& nb : g.neighbors(u)) {
        auto& dv = dist[static_cast<std::size_t>(nb.node)];
        if (dv == HopTable::kUnreachable) {
          dv = dist[static_cast<std::size_t>(u)] + 1;
          frontier.push(nb.node);
        }
      }
    }
    table.hops.push_back(std::move(dist));
  }
  return table;
}

std::vector<int> ConnectedComponents(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_nodes());
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(nb.node)] < 0) {
          label[static_cast<std::size_t>(nb.node)] = next;
          stack.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  return label;
}

bool IsConnected(const Graph& g) {
  const std::vector<int> label = ConnectedComponents(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

NodeSet LargestComponent(const Graph& g) {
  const std::vector<int> label = ConnectedComponents(g);
  if (label.empty()) return NodeSet::Empty(0);
  const int count = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (int c : label) ++sizes[static_cast<std::size_t>(c)];
  const int best = static_cast<int>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> members;
  for (std::size_t u = 0; u < label.size(); ++u) {
    if (label[u] == best) members.push_back(static_cast<NodeId>(u));
  }
  return NodeSet(g.num_nodes(), std::move(members));
}

Graph InducedSubgraph(const Graph& g, const NodeSet& nodes) {
  if (nodes.universe() != g.num_nodes()) {
    throw ParameterError("node set universe does not match the graph");
  }
  const auto& m = nodes.members();
  const int k = nodes.size();
  Eigen::MatrixXd w(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      w(i, j) = g.weight(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
    }
  }
  return Graph::FromAdjacency(std::move(w));
}

}  // namespace lgpr
