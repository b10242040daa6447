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

#include "groundiff/corpus/scene.hpp"

#include <algorithm>
#include <cstdlib>

#include "groundiff/util/toml.hpp"

namespace groundiff::corpus {
namespace {

constexpr int kMaxPlacementAttempts = 100;
constexpr double kMaxPairwiseIou = 0.5;
constexpr int kMinRadiusPx = 5;   // keeps every footprint at least ~6x6 source pixels
constexpr int kMaxRadiusPx = 14;
constexpr int kPlacementMargin = 2;

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Geometry parameters in 2x supersampled integer units.
struct ShapeParams {
  int cx2 = 0, cy2 = 0;  // center
  int r2 = 0;            // radius-like extent
  int orient = 0;        // 0..3
};

// Integer inside-test on the supersampled grid; the single source of truth
// for both masks and anti-aliased rendering.
bool inside(const std::string& cls, const ShapeParams& p, int sx, int sy) {
  const std::int64_t dx = sx - p.cx2;
  const std::int64_t dy = sy - p.cy2;
  const std::int64_t r = p.r2;
  if (cls == "circle") return dx * dx + dy * dy <= r * r;
  if (cls == "ring") {
    std::int64_t inner = (r * 11) / 20;
    std::int64_t d2 = dx * dx + dy * dy;
    return d2 <= r * r && d2 >= inner * inner;
  }
  if (cls == "square") return std::abs(dx) <= r * 9 / 10 && std::abs(dy) <= r * 9 / 10;
  if (cls == "bar") {
    std::int64_t len = r, thick = std::max<std::int64_t>(r / 3, 3);
    if (p.orient % 2 == 0) return std::abs(dx) <= len && std::abs(dy) <= thick;
    return std::abs(dy) <= len && std::abs(dx) <= thick;
  }
  if (cls == "triangle") {
    // isoceles, apex up: vertices (0,-r), (-r, r), (r, r) around the center
    std::int64_t ax = 0, ay = -r, bx = -r, by = r, cx = r, cy = r;
    auto side = [&](std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
      return (x2 - x1) * (dy - y1) - (y2 - y1) * (dx - x1);
    };
    return side(ax, ay, bx, by) >= 0 && side(bx, by, cx, cy) >= 0 && side(cx, cy, ax, ay) >= 0;
  }
  if (cls == "cross") {
    std::int64_t arm = r, thick = std::max<std::int64_t>((r * 2) / 5, 3);
    return (std::abs(dx) <= thick && std::abs(dy) <= arm) ||
           (std::abs(dy) <= thick && std::abs(dx) <= arm);
  }
  if (cls == "blob") {
    auto in_circle = [&](std::int64_t ox, std::int64_t oy, std::int64_t rr) {
      std::int64_t ex = dx - ox, ey = dy - oy;
      return ex * ex + ey * ey <= rr * rr;
    };
    std::int64_t r0 = (r * 7) / 10;
    return in_circle(0, 0, r0) || in_circle((r * 2) / 5, -(r * 3) / 10, (r * 11) / 20) ||
           in_circle(-(r * 7) / 20, (r * 2) / 5, (r * 1) / 2);
  }
  if (cls == "wedge") {
    // quarter disc with the right angle at the center, four orientations
    if (dx * dx + dy * dy > r * r) return false;
    switch (p.orient) {
      case 0: return dx >= 0 && dy <= 0;
      case 1: return dx >= 0 && dy >= 0;
      case 2: return dx <= 0 && dy >= 0;
      default: return dx <= 0 && dy <= 0;
    }
  }
  throw GenerationError("unknown object class: " + cls);
}

// Per-pixel coverage in quarters (0..4) from the four subsamples.
std::vector<std::uint8_t> coverage_map(const std::string& cls, const ShapeParams& p, int size) {
  std::vector<std::uint8_t> cov(static_cast<std::size_t>(size) * size, 0);
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      int c = 0;
      c += inside(cls, p, 2 * x, 2 * y);
      c += inside(cls, p, 2 * x + 1, 2 * y);
      c += inside(cls, p, 2 * x, 2 * y + 1);
      c += inside(cls, p, 2 * x + 1, 2 * y + 1);
      cov[static_cast<std::size_t>(y) * size + x] = static_cast<std::uint8_t>(c);
    }
  return cov;
}

MaskGrid mask_from_coverage(const std::vector<std::uint8_t>& cov, int size) {
  MaskGrid m(size, size);
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      m(y, x) = cov[static_cast<std::size_t>(y) * size + x] >= 2 ? 1 : 0;
  return m;
}

GrayImage textured_background(const SceneSpec& spec, Rng& rng) {
  GrayImage img(spec.image_size, spec.image_size);
  for (int y = 0; y < spec.image_size; ++y)
    for (int x = 0; x < spec.image_size; ++x) {
      double noise = spec.texture_sigma * rng.normal_irwin_hall();
      int v = spec.background_gray + static_cast<int>(noise >= 0 ? noise + 0.5 : noise - 0.5);
      img.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
    }
  return img;
}

SizeClass size_class_for(int radius_px) {
  if (radius_px < 8) return SizeClass::kSmall;
  if (radius_px < 11) return SizeClass::kMedium;
  return SizeClass::kLarge;
}

}  // namespace

std::string to_string(Variability v) {
  switch (v) {
    case Variability::kHigh: return "high";
    case Variability::kMiddle: return "middle";
    case Variability::kLow: return "low";
  }
  return "high";
}

std::string to_string(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "train";
}

Variability variability_from_string(const std::string& s) {
  if (s == "high") return Variability::kHigh;
  if (s == "middle") return Variability::kMiddle;
  if (s == "low") return Variability::kLow;
  throw std::invalid_argument("unknown variability: " + s);
}

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::kTrain;
  if (s == "val") return Split::kVal;
  if (s == "test") return Split::kTest;
  throw std::invalid_argument("unknown split: " + s);
}

SceneSpec::SceneSpec() {
  color_palette = {{"white", 248, 248, 248}, {"pearl", 224, 224, 224}, {"silver", 200, 200, 200},
                   {"ash", 176, 176, 176},   {"slate", 152, 152, 152}, {"charcoal", 128, 128, 128}};
}

void SceneSpec::validate() const {
  if (!is_power_of_two(image_size) || image_size < 32)
    throw std::invalid_argument("scene spec: image_size must be a power of two >= 32");
  if (objects_min < 1 || objects_max < objects_min)
    throw std::invalid_argument("scene spec: bad objects_per_image range");
  if (object_classes.empty()) throw std::invalid_argument("scene spec: no object classes");
  if (color_palette.empty()) throw std::invalid_argument("scene spec: empty palette");
  if (empty_fraction < 0.0 || empty_fraction > 1.0)
    throw std::invalid_argument("scene spec: empty_fraction out of [0,1]");
  if (texture_sigma < 0.0) throw std::invalid_argument("scene spec: negative texture_sigma");
}

SceneSpec SceneSpec::from_toml_file(const std::string& path) {
  toml::Table t = toml::Table::parse_file(path);
  SceneSpec spec;
  spec.image_size = static_cast<int>(t.get_int("image_size", spec.image_size));
  if (t.contains("object_classes")) spec.object_classes = t.get_string_array("object_classes");
  spec.objects_min = static_cast<int>(t.get_int("objects_min", spec.objects_min));
  spec.objects_max = static_cast<int>(t.get_int("objects_max", spec.objects_max));
  spec.background_gray = static_cast<int>(t.get_int("background_gray", spec.background_gray));
  spec.texture_sigma = t.get_double("texture_sigma", spec.texture_sigma);
  spec.empty_fraction = t.get_double("empty_fraction", spec.empty_fraction);
  auto color_names = t.keys_under("colors");
  if (!color_names.empty()) {
    spec.color_palette.clear();
    for (const auto& name : color_names) {
      auto rgb = t.get_int_array("colors." + name);
      if (rgb.size() != 3) throw std::invalid_argument("scene spec: color " + name + " needs [r,g,b]");
      spec.color_palette.push_back({name, static_cast<int>(rgb[0]), static_cast<int>(rgb[1]),
                                    static_cast<int>(rgb[2])});
    }
  }
  spec.validate();
  return spec;
}

BBox tight_bbox(const MaskGrid& mask) {
  BBox b{static_cast<int>(mask.cols()), static_cast<int>(mask.rows()), 0, 0};
  for (int y = 0; y < mask.rows(); ++y)
    for (int x = 0; x < mask.cols(); ++x)
      if (mask(y, x)) {
        b.x0 = std::min(b.x0, x);
        b.y0 = std::min(b.y0, y);
        b.x1 = std::max(b.x1, x + 1);
        b.y1 = std::max(b.y1, y + 1);
      }
  if (b.x1 <= b.x0) return {0, 0, 0, 0};
  return b;
}

double mask_iou(const MaskGrid& a, const MaskGrid& b) {
  std::int64_t inter = 0, uni = 0;
  for (Eigen::Index y = 0; y < a.rows(); ++y)
    for (Eigen::Index x = 0; x < a.cols(); ++x) {
      bool pa = a(y, x), pb = b(y, x);
      inter += pa && pb;
      uni += pa || pb;
    }
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

Sample generate_empty_scene(const SceneSpec& spec, Rng& rng) {
  spec.validate();
  Sample s;
  s.image = textured_background(spec, rng);
  return s;
}

Sample generate_scene(const SceneSpec& spec, Rng& rng) {
  spec.validate();
  Sample s;
  s.image = textured_background(spec, rng);
  const int size = spec.image_size;
  // radius scales with the canvas; 64px maps to the [5,14] px range
  const int r_lo = kMinRadiusPx * size / 64;
  const int r_hi = kMaxRadiusPx * size / 64;

  int n_objects =
      spec.objects_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.objects_max - spec.objects_min + 1)));

  for (int k = 0; k < n_objects; ++k) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxPlacementAttempts && !placed; ++attempt) {
      const std::string& cls = spec.object_classes[rng.below(spec.object_classes.size())];
      const PaletteColor& color = spec.color_palette[rng.below(spec.color_palette.size())];
      int radius = r_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(r_hi - r_lo + 1)));
      int margin = radius + kPlacementMargin;
      if (2 * margin >= size) continue;
      ShapeParams p;
      p.cx2 = 2 * (margin + static_cast<int>(rng.below(static_cast<std::uint64_t>(size - 2 * margin)))) + 1;
      p.cy2 = 2 * (margin + static_cast<int>(rng.below(static_cast<std::uint64_t>(size - 2 * margin)))) + 1;
      p.r2 = 2 * radius;
      p.orient = static_cast<int>(rng.below(4));

      auto cov = coverage_map(cls, p, size);
      MaskGrid mask = mask_from_coverage(cov, size);
      BBox box = tight_bbox(mask);
      if (box.width() < 4 || box.height() < 4) continue;

      bool overlaps = false;
      for (const auto& other : s.objects)
        if (mask_iou(mask, other.mask) >= kMaxPairwiseIou) overlaps = true;
      if (overlaps) continue;

      // coverage blend in quarters: ((4-c)*bg + c*color + 2) / 4
      int gray = color.gray();
      for (int y = box.y0; y < box.y1; ++y)
        for (int x = box.x0; x < box.x1; ++x) {
          int c = cov[static_cast<std::size_t>(y) * size + x];
          if (c == 0) continue;
          int base = s.image.at(x, y);
          s.image.at(x, y) = static_cast<std::uint8_t>(((4 - c) * base + c * gray + 2) / 4);
        }

      SceneObject obj;
      obj.class_name = cls;
      obj.color_name = color.name;
      obj.mask = std::move(mask);
      obj.bbox = box;
      obj.size_class = size_class_for(radius * 64 / size);
      obj.center_x = p.cx2 / 2;
      obj.center_y = p.cy2 / 2;
      s.objects.push_back(std::move(obj));
      placed = true;
    }
    if (!placed)
      throw GenerationError("object placement failed after 100 attempts; scene spec too crowded");
  }
  return s;
}

}  // namespace groundiff::corpus
