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

#include "lgpr/graph_io.h"

#include <algorithm>
#include <sstream>

#include "lgpr/csv.h"
#include "lgpr/error.h"

namespace lgpr {
namespace {

void ExpectHeader(const std::vector<csv::Row>& rows, const csv::Row& header,
                  const std::filesystem::path& path) {
  if (rows.empty() || rows.front() != header) {
    std::string want;
    for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
    throw IoError(path.string() + ": expected header '" + want + "'");
  }
}

std::string Where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

}  // namespace

Graph ReadEdgeList(const std::filesystem::path& path, std::optional<int> num_nodes) {
  const auto rows = csv::ReadRows(path);
  ExpectHeader(rows, {"u", "v", "w"}, path);
  std::vector<Edge> edges;
  int max_id = -1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 3) throw IoError(Where(path, i + 1) + ": expected 3 fields");
    Edge e;
    e.u = static_cast<NodeId>(csv::ParseInt(r[0], Where(path, i + 1)));
    e.v = static_cast<NodeId>(csv::ParseInt(r[1], Where(path, i + 1)));
    e.weight = csv::ParseDouble(r[2], Where(path, i + 1));
    if (e.u < 0 || e.v < 0) throw IoError(Where(path, i + 1) + ": negative node id");
    max_id = std::max({max_id, e.u, e.v});
    edges.push_back(e);
  }
  const int n = num_nodes.value_or(max_id + 1);
  try {
    return Graph::FromEdges(n, edges);
  } catch (const ParameterError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << "u,v,w\n";
  for (const Edge& e : g.Edges()) {
    out << e.u << ',' << e.v << ',' << csv::FormatDouble(e.weight) << '\n';
  }
  return out.str();
}

void WriteEdgeList(const std::filesystem::path& path, const Graph& g) {
  csv::WriteFile(path, FormatEdgeList(g));
}

FeatureMatrix ReadFeatureMatrix(const std::filesystem::path& path) {
  const auto rows = csv::ReadRows(path);
  if (rows.empty()) throw IoError(path.string() + ": no points");
  const std::size_t dim = rows.front().size();
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw IoError(Where(path, i + 1) + ": expected " + std::to_string(dim) +
                    " columns");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          csv::ParseDouble(rows[i][j], Where(path, i + 1));
    }
  }
  try {
    return FeatureMatrix(std::move(x));
  } catch (const ParameterError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<LabeledNode> ReadNodeClasses(const std::filesystem::path& path) {
  const auto rows = csv::ReadRows(path);
  ExpectHeader(rows, {"node", "class"}, path);
  std::vector<LabeledNode> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 2) throw IoError(Where(path, i + 1) + ": expected 2 fields");
    LabeledNode ln;
    ln.node = static_cast<NodeId>(csv::ParseInt(r[0], Where(path, i + 1)));
    ln.label = static_cast<int>(csv::ParseInt(r[1], Where(path, i + 1)));
    if (ln.node < 0 || ln.label < 0) {
      throw IoError(Where(path, i + 1) + ": ids must be >= 0");
    }
    out.push_back(ln);
  }
  return out;
}

std::string FormatNodeClasses(const std::vector<LabeledNode>& rows) {
  std::ostringstream out;
  out << "node,class\n";
  for (const auto& r : rows) out << r.node << ',' << r.label << '\n';
  return out.str();
}

std::string FormatMatrix(const Eigen::MatrixXd& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << csv::FormatDouble(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lgpr
