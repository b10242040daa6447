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

#include "groundiff/corpus/caption.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace groundiff::corpus {
namespace {

const std::array<const char*, 6> kVerbs = {"sits", "lies", "rests", "appears", "floats", "stands"};
const std::array<const char*, 5> kPreps = {"near the", "in the", "toward the", "at the", "around the"};

const char* size_word(SizeClass s, Rng& rng) {
  switch (s) {
    case SizeClass::kSmall: return rng.bernoulli(0.5) ? "small" : "little";
    case SizeClass::kMedium: return "medium";
    case SizeClass::kLarge: return rng.bernoulli(0.5) ? "large" : "big";
  }
  return "medium";
}

const char* size_word_fixed(SizeClass s) {
  switch (s) {
    case SizeClass::kSmall: return "small";
    case SizeClass::kMedium: return "medium";
    case SizeClass::kLarge: return "large";
  }
  return "medium";
}

std::string position_variant(const std::string& base, Rng& rng) {
  static const std::map<std::string, std::string> alt = {
      {"top left", "upper left"},     {"top", "upper region"},   {"top right", "upper right"},
      {"left", "left side"},          {"center", "middle"},      {"right", "right side"},
      {"bottom left", "lower left"},  {"bottom", "lower region"}, {"bottom right", "lower right"}};
  auto it = alt.find(base);
  if (it != alt.end() && rng.bernoulli(0.5)) return it->second;
  return base;
}

std::string article_for(const std::string& next_word, Rng& rng) {
  if (rng.bernoulli(0.25)) return "one";
  char c = next_word.empty() ? 'x' : next_word[0];
  bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return vowel ? "an" : "a";
}

std::string replace_all(std::string text, const std::string& slot, const std::string& value) {
  std::size_t pos = 0;
  while ((pos = text.find(slot, pos)) != std::string::npos) {
    text.replace(pos, slot.size(), value);
    pos += value.size();
  }
  return text;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (w.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

}  // namespace

std::string position_name(int cx, int cy, int image_size) {
  int col = std::min(2, cx * 3 / image_size);
  int row = std::min(2, cy * 3 / image_size);
  static const char* names[3][3] = {{"top left", "top", "top right"},
                                    {"left", "center", "right"},
                                    {"bottom left", "bottom", "bottom right"}};
  return names[row][col];
}

const std::map<std::string, std::string>& CaptionGrammar::alias_nouns() {
  static const std::map<std::string, std::string> aliases = {
      {"circle", "disk"}, {"square", "box"}, {"cross", "plus"}, {"ring", "hoop"}, {"bar", "stripe"}};
  return aliases;
}

CaptionGrammar::CaptionGrammar(const std::string& templates_path) {
  std::ifstream f(templates_path);
  if (!f) throw std::runtime_error("caption templates: cannot open " + templates_path);
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t bar = line.find('|');
    if (bar == std::string::npos) throw std::runtime_error("caption templates: malformed line: " + line);
    templates_[line.substr(0, bar)].push_back(line.substr(bar + 1));
  }
  for (const auto& [cls, tpls] : templates_)
    if (tpls.size() != 100)
      throw std::runtime_error("caption templates: class " + cls + " has " +
                               std::to_string(tpls.size()) + " templates, expected 100");
}

const std::vector<std::string>& CaptionGrammar::templates_for(const std::string& class_name) const {
  auto it = templates_.find(class_name);
  if (it == templates_.end())
    throw std::invalid_argument("caption templates: unknown class " + class_name);
  return it->second;
}

std::string CaptionGrammar::render(const Sample& sample, Variability variability, Rng& rng) const {
  if (sample.objects.empty())
    throw std::invalid_argument("render_caption: sample has no objects");
  switch (variability) {
    case Variability::kLow: return render_low(sample);
    case Variability::kMiddle: return render_middle(sample, rng);
    case Variability::kHigh: return render_high(sample, rng);
  }
  throw std::invalid_argument("render_caption: unknown variability");
}

std::string CaptionGrammar::render_low(const Sample& sample) const {
  std::string out;
  for (const auto& obj : sample.objects) {
    if (!out.empty()) out += ", ";
    out += obj.class_name;
  }
  return out;
}

std::string CaptionGrammar::render_middle(const Sample& sample, Rng& rng) const {
  std::string out;
  for (const auto& obj : sample.objects) {
    const auto& tpls = templates_for(obj.class_name);
    std::string t = tpls[rng.below(tpls.size())];
    t = replace_all(t, "{class}", obj.class_name);
    t = replace_all(t, "{color}", obj.color_name);
    t = replace_all(t, "{size}", size_word_fixed(obj.size_class));
    t = replace_all(t, "{position}", position_name(obj.center_x, obj.center_y, sample.image.width));
    if (!out.empty()) out += " and ";
    out += t;
  }
  return out;
}

std::string CaptionGrammar::render_high(const Sample& sample, Rng& rng) const {
  const int n = static_cast<int>(sample.objects.size());
  std::vector<std::string> clauses;
  for (const auto& obj : sample.objects) {
    std::string noun = obj.class_name;
    auto alias = alias_nouns().find(obj.class_name);
    if (alias != alias_nouns().end() && rng.bernoulli(0.2)) noun = alias->second;

    std::string size_adj = rng.bernoulli(0.5) ? size_word(obj.size_class, rng) : "";
    std::string color_adj = rng.bernoulli(0.6) ? obj.color_name : "";
    std::string pos = std::string(kPreps[rng.below(kPreps.size())]) + " " +
                      position_variant(position_name(obj.center_x, obj.center_y, sample.image.width), rng);
    std::string verb = kVerbs[rng.below(kVerbs.size())];

    // three-object scenes keep clauses short so captions stay inside T_max
    if (n >= 3 && !size_adj.empty() && !color_adj.empty()) {
      if (rng.bernoulli(0.5))
        size_adj.clear();
      else
        color_adj.clear();
    }

    std::string first_word = !size_adj.empty() ? size_adj : (!color_adj.empty() ? color_adj : noun);
    std::string art = article_for(first_word, rng);

    int frame = static_cast<int>(rng.below(n >= 3 ? 2 : 5));
    std::string clause;
    switch (frame) {
      case 0: clause = join_words({art, size_adj, color_adj, noun, pos}); break;
      case 1: clause = join_words({art, size_adj, color_adj, noun, verb, pos}); break;
      case 2: clause = join_words({"there is", art, size_adj, color_adj, noun, pos}); break;
      case 3: clause = join_words({pos, verb, art, size_adj, color_adj, noun}); break;
      default: clause = join_words({art, color_adj, noun, verb, pos}); break;
    }
    clauses.push_back(clause);
  }

  std::string out = clauses[0];
  for (std::size_t i = 1; i < clauses.size(); ++i) {
    if (n >= 3) {
      out += " and ";
    } else {
      switch (rng.below(3)) {
        case 0: out += " and "; break;
        case 1: out += ", and "; break;
        default: out += " while "; break;
      }
    }
    out += clauses[i];
  }
  return out;
}

}  // namespace groundiff::corpus
