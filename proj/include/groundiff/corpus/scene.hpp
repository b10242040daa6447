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

#include <stdexcept>
#include <string>
#include <vector>

#include "groundiff/util/image.hpp"
#include "groundiff/util/mat.hpp"
#include "groundiff/util/rng.hpp"

namespace groundiff::corpus {

enum class Variability { kHigh, kMiddle, kLow };
enum class Split { kTrain, kVal, kTest };

std::string to_string(Variability v);
std::string to_string(Split s);
Variability variability_from_string(const std::string& s);
Split split_from_string(const std::string& s);

struct PaletteColor {
  std::string name;
  int r = 0, g = 0, b = 0;
  // integer Rec.601 luma; shapes render grayscale
  int gray() const { return (299 * r + 587 * g + 114 * b) / 1000; }
};

// Scene recipe for the synthetic shapes corpus. Rasterisation is pure integer
// arithmetic on a 2x supersampled grid: masks are exact binary footprints,
// images get 4-subsample coverage anti-aliasing, so a (spec, seed) pair
// reproduces byte-identical rasters on any IEEE platform.
struct SceneSpec {
  int image_size = 64;
  std::vector<std::string> object_classes = {"circle", "square", "triangle", "cross",
                                             "ring",   "bar",    "blob",     "wedge"};
  int objects_min = 1;
  int objects_max = 3;
  std::vector<PaletteColor> color_palette;
  int background_gray = 96;
  double texture_sigma = 2.0;
  double empty_fraction = 0.10;

  SceneSpec();

  void validate() const;

  static SceneSpec from_toml_file(const std::string& path);
};

struct BBox {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive-exclusive pixel indices
  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  bool operator==(const BBox&) const = default;
};

enum class SizeClass { kSmall, kMedium, kLarge };

struct SceneObject {
  std::string class_name;
  std::string color_name;
  MaskGrid mask;  // full footprint, occlusion-independent
  BBox bbox;
  SizeClass size_class = SizeClass::kMedium;
  int center_x = 0, center_y = 0;
};

struct Sample {
  std::string id;
  GrayImage image;
  std::vector<SceneObject> objects;
  std::string caption;
  Variability variability = Variability::kHigh;
  Split split = Split::kTrain;

  bool is_empty_scene() const { return objects.empty(); }
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tight axis-aligned bounding rectangle of a mask's positive pixels.
BBox tight_bbox(const MaskGrid& mask);

double mask_iou(const MaskGrid& a, const MaskGrid& b);

// Draws object classes, colors and placements, rasterises image and
// per-object masks. Caption is left empty. Throws GenerationError when an
// object cannot be placed within 100 rejection-sampling attempts.
Sample generate_scene(const SceneSpec& spec, Rng& rng);

// Background-only raster used for the "no finding" negatives.
Sample generate_empty_scene(const SceneSpec& spec, Rng& rng);

}  // namespace groundiff::corpus
