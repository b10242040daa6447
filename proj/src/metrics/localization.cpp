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

#include "groundiff/metrics/localization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace groundiff::metrics {
namespace {

constexpr double kCnrEpsilon = 1e-12;

void check_shapes(const MatF& heatmap, const MaskGrid& mask) {
  if (heatmap.rows() != mask.rows() || heatmap.cols() != mask.cols())
    throw std::invalid_argument("localization: heatmap and mask shapes differ");
}

}  // namespace

double cnr(const MatF& heatmap, const MaskGrid& mask) {
  check_shapes(heatmap, mask);
  double sum_in = 0, sum_out = 0, sq_in = 0, sq_out = 0;
  std::int64_t n_in = 0, n_out = 0;
  for (Eigen::Index y = 0; y < mask.rows(); ++y)
    for (Eigen::Index x = 0; x < mask.cols(); ++x) {
      double v = heatmap(y, x);
      if (mask(y, x)) {
        sum_in += v;
        sq_in += v * v;
        ++n_in;
      } else {
        sum_out += v;
        sq_out += v * v;
        ++n_out;
      }
    }
  if (n_in == 0 || n_out == 0) throw std::domain_error("cnr: mask must contain both classes");
  double mu_in = sum_in / static_cast<double>(n_in);
  double mu_out = sum_out / static_cast<double>(n_out);
  double var_in = sq_in / static_cast<double>(n_in) - mu_in * mu_in;
  double var_out = sq_out / static_cast<double>(n_out) - mu_out * mu_out;
  // rounding can leave tiny negative variances on constant regions
  var_in = std::max(var_in, 0.0);
  var_out = std::max(var_out, 0.0);
  return (mu_in - mu_out) / std::sqrt(var_in + var_out + kCnrEpsilon);
}

double cnr_abs(const MatF& heatmap, const MaskGrid& mask) { return std::abs(cnr(heatmap, mask)); }

double auc_roc(std::span<const float> scores, std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("auc_roc: size mismatch");
  const std::size_t n = scores.size();
  std::int64_t n_pos = 0;
  for (std::size_t i = 0; i < n; ++i) n_pos += labels[i] ? 1 : 0;
  std::int64_t n_neg = static_cast<std::int64_t>(n) - n_pos;
  if (n_pos == 0 || n_neg == 0) throw std::domain_error("auc_roc: both classes required");

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return scores[a] < scores[b]; });

  // Midranks over tie groups; rank sum of the positive class gives U.
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k)
      if (labels[order[k]]) rank_sum_pos += midrank;
    i = j + 1;
  }
  double u = rank_sum_pos - 0.5 * static_cast<double>(n_pos) * static_cast<double>(n_pos + 1);
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

double auc_roc(const MatF& heatmap, const MaskGrid& mask) {
  check_shapes(heatmap, mask);
  std::vector<float> scores(heatmap.data(), heatmap.data() + heatmap.size());
  std::vector<std::uint8_t> labels(mask.data(), mask.data() + mask.size());
  return auc_roc(scores, labels);
}

int top1(const MatF& heatmap, const MaskGrid& mask) {
  check_shapes(heatmap, mask);
  Eigen::Index best_y = 0, best_x = 0;
  float best = heatmap(0, 0);
  for (Eigen::Index y = 0; y < heatmap.rows(); ++y)
    for (Eigen::Index x = 0; x < heatmap.cols(); ++x)
      if (heatmap(y, x) > best) {
        best = heatmap(y, x);
        best_y = y;
        best_x = x;
      }
  return mask(best_y, best_x) ? 1 : 0;
}

CaseScores score_case(const MatF& heatmap, const MaskGrid& mask) {
  CaseScores s;
  s.cnr = cnr(heatmap, mask);
  s.cnr_abs = std::abs(s.cnr);
  s.auc = auc_roc(heatmap, mask);
  s.top1 = top1(heatmap, mask);
  return s;
}

}  // namespace groundiff::metrics
