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

#ifndef LGPR_MCC_H_
#define LGPR_MCC_H_

#include <cstdint>
#include <span>

#include "lgpr/graph.h"

namespace lgpr {

struct BinaryConfusion {
  std::int64_t tp = 0;
  std::int64_t tn = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
};

// Matthews correlation coefficient
//   (TP TN - FP FN) / sqrt((TP+FP)(TP+FN)(TN+FP)(TN+FN)),
// 0 when any factor of the denominator vanishes.
double Mcc(const BinaryConfusion& c);

// `predicted` and `truth` mark the positive class. Throws ParameterError when
// their universes differ.
BinaryConfusion Confuse(const NodeSet& predicted, const NodeSet& truth);
double Mcc(const NodeSet& predicted, const NodeSet& truth);

// Multi-class MCC from the K x K confusion matrix C:
//   (c s - sum_k p_k t_k) / sqrt((s^2 - sum_k p_k^2)(s^2 - sum_k t_k^2))
// with c the trace, s the sample count, p_k and t_k predicted and true class
// totals. Reduces to the binary formula for K = 2. Zero denominator gives 0.
// Throws ParameterError on length mismatch or negative class ids.
double Mcc(std::span<const int> predicted, std::span<const int> truth);

}  // namespace lgpr

#endif  // LGPR_MCC_H_
