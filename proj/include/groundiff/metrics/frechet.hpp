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

#include "groundiff/util/mat.hpp"

namespace groundiff::metrics {

// Frechet distance between Gaussian fits of two feature sets (rows are
// feature vectors): |mu_a - mu_b|^2 + tr(Sa + Sb - 2 (Sa Sb)^{1/2}).
// The matrix square root goes through the eigendecomposition of the
// symmetrised product; small negative eigenvalues clip to zero (a warning is
// printed above 1e-6 magnitude). Covariances use the n-1 normaliser and get a
// 1e-6 ridge when a side has fewer than dim+1 samples.
double frechet_distance(const MatD& features_a, const MatD& features_b);

}  // namespace groundiff::metrics
