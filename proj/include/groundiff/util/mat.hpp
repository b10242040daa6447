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

#include <Eigen/Core>

namespace groundiff {

// Row-major matrices throughout: activation matrices are (batch*pixels) x
// channels, so row-major keeps one pixel's channel vector contiguous.
template <class T>
using MatX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatF = MatX<float>;
using MatD = MatX<double>;
using VecF = VecX<float>;
using VecD = VecX<double>;

// Binary grids (masks) share the row-major convention.
using MaskGrid = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace groundiff
