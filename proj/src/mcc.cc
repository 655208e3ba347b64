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

#include "lgpr/mcc.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lgpr/error.h"

namespace lgpr {

double Mcc(const BinaryConfusion& c) {
  const double tp = static_cast<double>(c.tp), tn = static_cast<double>(c.tn);
  const double fp = static_cast<double>(c.fp), fn = static_cast<double>(c.fn);
  const double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
  if (denom == 0.0) return 0.0;
  return (tp * tn - fp * fn) / std::sqrt(denom);
}

BinaryConfusion Confuse(const NodeSet& predicted, const NodeSet& truth) {
  if (predicted.universe() != truth.universe()) {
    throw ParameterError("MCC inputs cover different node universes");
  }
  BinaryConfusion c;
  for (NodeId u = 0; u < truth.universe(); ++u) {
    const bool p = predicted.Contains(u), t = truth.Contains(u);
    if (p && t) ++c.tp;
    else if (p) ++c.fp;
    else if (t) ++c.fn;
    else ++c.tn;
  }
  return c;
}

double Mcc(const NodeSet& predicted, const NodeSet& truth) {
  return Mcc(Confuse(predicted, truth));
}

double Mcc(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size()) {
    throw ParameterError("MCC inputs have different lengths");
  }
  int k = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (predicted[i] < 0 || truth[i] < 0) throw ParameterError("negative class id");
    k = std::max({k, predicted[i] + 1, truth[i] + 1});
  }
  std::vector<double> p(static_cast<std::size_t>(k), 0.0), t(p);
  double correct = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    p[static_cast<std::size_t>(predicted[i])] += 1.0;
    t[static_cast<std::size_t>(truth[i])] += 1.0;
    if (predicted[i] == truth[i]) correct += 1.0;
  }
  const double s = static_cast<double>(truth.size());
  double pt = 0.0, pp = 0.0, tt = 0.0;
  for (std::size_t c = 0; c < p.size(); ++c) {
    pt += p[c] * t[c];
    pp += p[c] * p[c];
    tt += t[c] * t[c];
  }
  const double denom = (s * s - pp) * (s * s - tt);
  if (denom <= 0.0) return 0.0;
  return (correct * s - pt) / std::sqrt(denom);
}

}  // namespace lgpr
