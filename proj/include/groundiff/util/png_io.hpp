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

#include <string>

#include "groundiff/util/image.hpp"
#include "groundiff/util/mat.hpp"

namespace groundiff::png {

// Minimal PNG codec on top of zlib. Writers emit fixed settings (filter 0,
// zlib level 6) so identical rasters produce identical files. The reader
// handles non-interlaced grayscale (1/8 bit), RGB and RGBA with all five
// scanline filters, which covers everything this project and common tools
// emit for its inputs.

void write_gray8(const std::string& path, const GrayImage& img);

// 1-bit grayscale; any nonzero mask value becomes white.
void write_mask1(const std::string& path, const MaskGrid& mask);

void write_rgb8(const std::string& path, const RgbImage& img);

GrayImage read_gray8(const std::string& path);

MaskGrid read_mask1(const std::string& path);

}  // namespace groundiff::png
