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

#include <map>
#include <string>
#include <vector>

#include "groundiff/corpus/scene.hpp"
#include "groundiff/util/rng.hpp"

namespace groundiff::corpus {

// Caption rendering at three variability regimes:
//   low    - the comma-joined class names, nothing else
//   middle - one of 100 fixed per-class templates (repo data file), slots
//            filled from object attributes
//   high   - compositional grammar over articles, size/color adjectives,
//            verbs and position phrases
// Every regime mentions each object via its class name or an alias noun that
// is registered in the keyword table, so grounding never loses a sample to
// vocabulary drift.
class CaptionGrammar {
 public:
  // templates_path: middle-variability template file ("class|template" lines).
  explicit CaptionGrammar(const std::string& templates_path);

  std::string render(const Sample& sample, Variability variability, Rng& rng) const;

  // Alias nouns the high-variability grammar may substitute for a class name.
  static const std::map<std::string, std::string>& alias_nouns();

  const std::vector<std::string>& templates_for(const std::string& class_name) const;

  static constexpr const char* kEmptySceneCaption = "no finding";

 private:
  std::string render_low(const Sample& sample) const;
  std::string render_middle(const Sample& sample, Rng& rng) const;
  std::string render_high(const Sample& sample, Rng& rng) const;

  std::map<std::string, std::vector<std::string>> templates_;
};

// Coarse 3x3 location name for an object center ("top left", "center", ...).
std::string position_name(int cx, int cy, int image_size);

}  // namespace groundiff::corpus
