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

#include "groundiff/metrics/frechet.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace groundiff::metrics {
namespace {

constexpr double kRidge = 1e-6;

struct GaussianFit {
  VecD mean;
  MatD cov;
};

GaussianFit fit(const MatD& features) {
  const Eigen::Index n = features.rows(), d = features.cols();
  if (n < 2) throw std::invalid_argument("frechet_distance: need at least 2 samples per side");
  GaussianFit g;
  g.mean = features.colwise().mean();
  MatD centered = features.rowwise() - g.mean.transpose();
  g.cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
  if (n < d + 1) g.cov.diagonal().array() += kRidge;
  return g;
}

MatD sym_sqrt(const MatD& m) {
  Eigen::SelfAdjointEigenSolver<MatD> eig(0.5 * (m + m.transpose()));
  VecD vals = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().transpose();
}

}  // namespace

double frechet_distance(const MatD& features_a, const MatD& features_b) {
  if (features_a.cols() != features_b.cols())
    throw std::invalid_argument("frechet_distance: feature dimensions differ");
  GaussianFit a = fit(features_a);
  GaussianFit b = fit(features_b);

  MatD sqrt_a = sym_sqrt(a.cov);
  MatD inner = sqrt_a * b.cov * sqrt_a;
  Eigen::SelfAdjointEigenSolver<MatD> eig(0.5 * (inner + inner.transpose()));
  double tr_sqrt = 0.0;
  double worst_negative = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    double v = eig.eigenvalues()[i];
    if (v < worst_negative) worst_negative = v;
    tr_sqrt += std::sqrt(std::max(v, 0.0));
  }
  if (worst_negative < -1e-6)
    std::fprintf(stderr, "frechet_distance: clipped negative eigenvalue %.3e\n", worst_negative);

  double mean_term = (a.mean - b.mean).squaredNorm();
  double dist = mean_term + a.cov.trace() + b.cov.trace() - 2.0 * tr_sqrt;
  return std::max(dist, 0.0);
}

}  // namespace groundiff::metrics
