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

// Multi-scale SSIM, Wang et al. construction: contrast-structure terms at
// every scale, luminance folded in at the coarsest, 11x11 Gaussian window
// sigma 1.5, valid-region statistics, 2x2 mean pooling between scales.
// Per-scale exponents are the canonical five-scale weights renormalised to
// n_scales. data_range is the L in C1=(0.01L)^2, C2=(0.03L)^2.
//
// Throws std::invalid_argument on shape mismatch or when the image is
// smaller than window * 2^(n_scales-1) on either side.
double ms_ssim(const MatF& a, const MatF& b, int n_scales = 3, double data_range = 1.0);

// Peak signal-to-noise ratio in dB against the given peak value.
double psnr(const MatF& a, const MatF& b, double peak = 1.0);

}  // namespace groundiff::metrics
