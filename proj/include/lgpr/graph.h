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

#ifndef LGPR_GRAPH_H_
#define LGPR_GRAPH_H_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace lgpr {

using NodeId = int;

// A set of nodes drawn from the universe {0, ..., universe - 1}. Members are
// kept sorted and unique.
class NodeSet {
 public:
  NodeSet() = default;
  // Throws ParameterError on out-of-range ids or duplicates.
  NodeSet(int universe, std::vector<NodeId> members);

  static NodeSet Empty(int universe) { return NodeSet(universe, {}); }
  static NodeSet Full(int universe);
  // Nodes in [begin, end).
  static NodeSet Range(int universe, NodeId begin, NodeId end);
  // Nodes whose indicator entry is non-zero.
  static NodeSet FromIndicator(const Eigen::VectorXd& indicator);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<NodeId>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool Contains(NodeId u) const;
  NodeSet Complement() const;
  // 1 on members, 0 elsewhere; length universe().
  Eigen::VectorXd Indicator() const;

  bool operator==(const NodeSet&) const = default;

 private:
  int universe_ = 0;
  std::vector<NodeId> members_;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;
};

struct Neighbor {
  NodeId node = 0;
  double weight = 0.0;
};

// Undirected weighted graph without self-loops. The adjacency matrix is
// stored densely; neighbor lists hold the strictly positive entries. Values
// are immutable after construction.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n nodes.
  explicit Graph(int num_nodes);

  // Throws ParameterError on self-loops, negative or non-finite weights,
  // out-of-range ids and repeated edges.
  static Graph FromEdges(int num_nodes, std::span<const Edge> edges);
  // Throws ParameterError unless `adjacency` is square, symmetric, has a zero
  // diagonal and non-negative finite entries.
  static Graph FromAdjacency(Eigen::MatrixXd adjacency);

  int num_nodes() const { return static_cast<int>(adjacency_.rows()); }
  int num_edges() const { return num_edges_; }
  const Eigen::MatrixXd& adjacency() const { return adjacency_; }
  double weight(NodeId u, NodeId v) const { return adjacency_(u, v); }
  std::span<const Neighbor> neighbors(NodeId u) const {
    return neighbors_[static_cast<std::size_t>(u)];
  }

  // Each undirected edge once, with u < v, in lexicographic order.
  std::vector<Edge> Edges() const;
  // Combinatorial Laplacian D - W.
  Eigen::MatrixXd Laplacian() const;

 private:
  explicit Graph(Eigen::MatrixXd adjacency, bool validated);

  Eigen::MatrixXd adjacency_;
  std::vector<std::vector<Neighbor>> neighbors_;
  int num_edges_ = 0;
};

// n points of equal dimension, one per row, all entries finite.
class FeatureMatrix {
 public:
  // Throws ParameterError on non-finite entries or an empty matrix.
  explicit FeatureMatrix(Eigen::MatrixXd points);

  int num_points() const { return static_cast<int>(points_.rows()); }
  int dimension() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }

 private:
  Eigen::MatrixXd points_;
};

// Symmetrized k-nearest-neighbour graph with Gaussian weights
// exp(-|x_u - x_v|^2 / sigma^2). An edge exists when either endpoint selects
// the other. Distance ties are broken by ascending node id.
Graph BuildKnnGraph(const FeatureMatrix& points, int k, double sigma);

Eigen::VectorXd DegreeVector(const Graph& g);
double Volume(const Graph& g, const NodeSet& s);

// Row-stochastic P = D^{-1} W. Throws DegenerateError when a node is isolated.
Eigen::MatrixXd RandomWalkMatrix(const Graph& g);

// x^T P^steps, computed with `steps` sparse vector-matrix products.
// Throws DegenerateError when the walk reaches an isolated node.
Eigen::VectorXd WalkDistribution(const Graph& g, const Eigen::VectorXd& start,
                                 int steps);

// Unweighted breadth-first hop distances from each source to every node.
struct HopTable {
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  std::vector<NodeId> sources;
  // hops[i][v] is the distance from sources[i] to v, or kUnreachable.
  std::vector<std::vector<int>> hops;

  int at(std::size_t source_index, NodeId v) const {
    return hops[source_index][static_cast<std::size_t>(v)];
  }
  // Largest distance between any two sources. Throws ConnectivityError when
  // two sources cannot reach each other; 0 for a single source.
  int MaxPairwiseHops() const;
};

HopTable GeodesicHops(const Graph& g, const NodeSet& sources);

// Component label per node, numbered by smallest member in ascending order.
std::vector<int> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);
// Members of the component with most nodes (ties: lowest label).
NodeSet LargestComponent(const Graph& g);
// Subgraph induced by `nodes`; node i of the result is nodes.members()[i].
Graph InducedSubgraph(const Graph& g, const NodeSet& nodes);

}  // namespace lgpr

#endif  // LGPR_GRAPH_H_
