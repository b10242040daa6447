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
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace groundiff::toml {

// Subset of TOML sufficient for this project's config surface: [table]
// headers, key = value pairs with string/int/float/bool scalars and
// single-line arrays, and # comments. Dotted table names flatten into
// "table.key" lookups.

using Value = std::variant<std::string, std::int64_t, double, bool, std::vector<std::string>,
                           std::vector<std::int64_t>, std::vector<double>>;

class Table {
 public:
  static Table parse_file(const std::string& path);
  static Table parse_string(const std::string& text, const std::string& origin = "<string>");

  bool contains(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::string require_string(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::string> get_string_array(const std::string& key) const;
  std::vector<std::int64_t> get_int_array(const std::string& key) const;
  std::vector<double> get_double_array(const std::string& key) const;

  // Keys under "prefix." with the prefix stripped, in file order.
  std::vector<std::string> keys_under(const std::string& prefix) const;

 private:
  const Value* find(const std::string& key) const;

  std::map<std::string, Value> values_;
  std::vector<std::string> ordered_keys_;
  std::string origin_;
};

}  // namespace groundiff::toml
