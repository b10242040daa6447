// Copyright 2026 The groundiff Authors
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

#pragma once

#include <span>

#include "groundiff/util/mat.hpp"

namespace groundiff::metrics {

// Localization metrics over (heatmap, binary mask) pairs on a common grid.
// All of them are threshold-free: CNR is a signed separation statistic, AUC
// and Top-1 are rank statistics.

// Signed contrast-to-noise ratio (mu_in - mu_out) / sqrt(var_in + var_out),
// with population variances and an epsilon regulariser so constant heatmaps
// score 0 instead of NaN. Throws std::domain_error when the mask does not
// contain both classes.
double cnr(const MatF& heatmap, const MaskGrid& mask);

double cnr_abs(const MatF& heatmap, const MaskGrid& mask);

// Mann-Whitney AUC with 0.5 credit for ties, computed via sorting in
// O(n log n). Throws std::domain_error on single-class input.
double auc_roc(std::span<const float> scores, std::span<const std::uint8_t> labels);
double auc_roc(const MatF& heatmap, const MaskGrid& mask);

// 1 iff the arg-max pixel lies inside the mask. Ties break to the row-major
// first occurrence.
int top1(const MatF& heatmap, const MaskGrid& mask);

struct CaseScores {
  double cnr = 0.0;
  double cnr_abs = 0.0;
  double auc = 0.0;
  int top1 = 0;
};

CaseScores score_case(const MatF& heatmap, const MaskGrid& mask);

}  // namespace groundiff::metrics
