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

#include <cstdint>
#include <vector>

#include "groundiff/util/mat.hpp"

namespace groundiff {

// 8-bit grayscale raster, row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

  // [0, 1] float view used by metrics and the latent transform.
  MatF to_float() const {
    MatF m(height, width);
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) m(y, x) = static_cast<float>(at(x, y)) / 255.0f;
    return m;
  }

  static GrayImage from_float(const MatF& m) {
    GrayImage img(static_cast<int>(m.cols()), static_cast<int>(m.rows()));
    for (int y = 0; y < img.height; ++y)
      for (int x = 0; x < img.width; ++x) {
        float v = std::min(1.0f, std::max(0.0f, m(y, x)));
        img.at(x, y) = static_cast<std::uint8_t>(v * 255.0f + 0.5f);
      }
    return img;
  }
};

// 8-bit RGB raster for overlay figures.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 bytes per pixel

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::uint8_t* at(int x, int y) { return &pixels[(static_cast<std::size_t>(y) * width + x) * 3]; }
};

}  // namespace groundiff
