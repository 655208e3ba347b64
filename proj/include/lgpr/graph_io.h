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

#ifndef LGPR_GRAPH_IO_H_
#define LGPR_GRAPH_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lgpr/graph.h"

namespace lgpr {

// Edge-list CSV with header `u,v,w`, each undirected edge listed once, 0-based
// ids. The node count is `num_nodes` when given, otherwise max id + 1.
Graph ReadEdgeList(const std::filesystem::path& path,
                   std::optional<int> num_nodes = std::nullopt);
std::string FormatEdgeList(const Graph& g);
void WriteEdgeList(const std::filesystem::path& path, const Graph& g);

// One point per row, no header.
FeatureMatrix ReadFeatureMatrix(const std::filesystem::path& path);

struct LabeledNode {
  NodeId node = 0;
  int label = 0;
};

// CSV with header `node,class`, 0-based class indices.
std::vector<LabeledNode> ReadNodeClasses(const std::filesystem::path& path);
std::string FormatNodeClasses(const std::vector<LabeledNode>& rows);

// Dense matrix, one row per line, no header.
std::string FormatMatrix(const Eigen::MatrixXd& m);

}  // namespace lgpr

#endif  // LGPR_GRAPH_IO_H_
