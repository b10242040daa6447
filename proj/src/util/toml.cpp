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

#include "groundiff/util/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace groundiff::toml {
namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Removes a trailing comment that is not inside a string literal.
std::string strip_comment(const std::string& s) {
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_str = !in_str;
    if (s[i] == '#' && !in_str) return s.substr(0, i);
  }
  return s;
}

bool looks_like_int(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '_') return false;
  return true;
}

std::string drop_underscores(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '_') out.push_back(c);
  return out;
}

Value parse_scalar(const std::string& raw, const std::string& origin, int line) {
  std::string s = strip(raw);
  if (s.empty()) fail(origin, line, "empty value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"') fail(origin, line, "unterminated string");
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == '\\' && i + 2 < s.size()) {
        ++i;
        switch (s[i]) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default: fail(origin, line, "unsupported escape");
        }
      } else {
        out.push_back(s[i]);
      }
    }
    return out;
  }
  if (s == "true") return true;
  if (s == "false") return false;
  if (looks_like_int(s)) return static_cast<std::int64_t>(std::stoll(drop_underscores(s)));
  try {
    std::size_t used = 0;
    double d = std::stod(drop_underscores(s), &used);
    if (used == drop_underscores(s).size()) return d;
  } catch (const std::exception&) {
  }
  fail(origin, line, "cannot parse value: " + s);
}

std::vector<std::string> split_array_items(const std::string& body, const std::string& origin, int line) {
  std::vector<std::string> items;
  std::string cur;
  bool in_str = false;
  for (char c : body) {
    if (c == '"') in_str = !in_str;
    if (c == ',' && !in_str) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (in_str) fail(origin, line, "unterminated string in array");
  if (!strip(cur).empty()) items.push_back(cur);
  return items;
}

Value parse_array(const std::string& raw, const std::string& origin, int line) {
  std::string body = strip(raw);
  body = body.substr(1, body.size() - 2);  // drop [ ]
  std::vector<Value> scalars;
  for (const auto& item : split_array_items(body, origin, line)) {
    if (strip(item).empty()) continue;
    scalars.push_back(parse_scalar(item, origin, line));
  }
  if (scalars.empty()) return std::vector<std::string>{};
  if (std::holds_alternative<std::string>(scalars[0])) {
    std::vector<std::string> out;
    for (auto& v : scalars) out.push_back(std::get<std::string>(v));
    return out;
  }
  if (std::holds_alternative<std::int64_t>(scalars[0])) {
    bool all_int = true;
    for (auto& v : scalars)
      if (!std::holds_alternative<std::int64_t>(v)) all_int = false;
    if (all_int) {
      std::vector<std::int64_t> out;
      for (auto& v : scalars) out.push_back(std::get<std::int64_t>(v));
      return out;
    }
  }
  std::vector<double> out;
  for (auto& v : scalars) {
    if (std::holds_alternative<double>(v))
      out.push_back(std::get<double>(v));
    else if (std::holds_alternative<std::int64_t>(v))
      out.push_back(static_cast<double>(std::get<std::int64_t>(v)));
    else
      fail(origin, line, "mixed array types");
  }
  return out;
}

}  // namespace

Table Table::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("toml: cannot open: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_string(ss.str(), path);
}

Table Table::parse_string(const std::string& text, const std::string& origin) {
  Table t;
  t.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(strip_comment(line));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(origin, lineno, "malformed table header");
      section = strip(s.substr(1, s.size() - 2));
      if (section.empty()) fail(origin, lineno, "empty table name");
      continue;
    }
    std::size_t eq = std::string::npos;
    bool in_str = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '"') in_str = !in_str;
      if (s[i] == '=' && !in_str) {
        eq = i;
        break;
      }
    }
    if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
    std::string key = strip(s.substr(0, eq));
    std::string raw = strip(s.substr(eq + 1));
    if (key.empty()) fail(origin, lineno, "empty key");
    if (key.front() == '"' && key.back() == '"' && key.size() >= 2) key = key.substr(1, key.size() - 2);
    std::string full = section.empty() ? key : section + "." + key;
    Value v = (!raw.empty() && raw.front() == '[') ? parse_array(raw, origin, lineno)
                                                   : parse_scalar(raw, origin, lineno);
    if (t.values_.count(full)) fail(origin, lineno, "duplicate key: " + full);
    t.values_.emplace(full, std::move(v));
    t.ordered_keys_.push_back(full);
  }
  return t;
}

const Value* Table::find(const std::string& key) const {
  auto it = values_.find(key);
  return it == values_.end() ? nullptr : &it->second;
}

std::string Table::get_string(const std::string& key, const std::string& fallback) const {
  const Value* v = find(key);
  if (!v) return fallback;
  if (auto* s = std::get_if<std::string>(v)) return *s;
  throw std::runtime_error(origin_ + ": key " + key + " is not a string");
}

std::string Table::require_string(const std::string& key) const {
  const Value* v = find(key);
  if (!v) throw std::runtime_error(origin_ + ": missing required key " + key);
  if (auto* s = std::get_if<std::string>(v)) return *s;
  throw std::runtime_error(origin_ + ": key " + key + " is not a string");
}

std::int64_t Table::get_int(const std::string& key, std::int64_t fallback) const {
  const Value* v = find(key);
  if (!v) return fallback;
  if (auto* i = std::get_if<std::int64_t>(v)) return *i;
  throw std::runtime_error(origin_ + ": key " + key + " is not an integer");
}

double Table::get_double(const std::string& key, double fallback) const {
  const Value* v = find(key);
  if (!v) return fallback;
  if (auto* d = std::get_if<double>(v)) return *d;
  if (auto* i = std::get_if<std::int64_t>(v)) return static_cast<double>(*i);
  throw std::runtime_error(origin_ + ": key " + key + " is not a number");
}

bool Table::get_bool(const std::string& key, bool fallback) const {
  const Value* v = find(key);
  if (!v) return fallback;
  if (auto* b = std::get_if<bool>(v)) return *b;
  throw std::runtime_error(origin_ + ": key " + key + " is not a bool");
}

std::vector<std::string> Table::get_string_array(const std::string& key) const {
  const Value* v = find(key);
  if (!v) return {};
  if (auto* a = std::get_if<std::vector<std::string>>(v)) return *a;
  if (auto* s = std::get_if<std::string>(v)) return {*s};
  throw std::runtime_error(origin_ + ": key " + key + " is not a string array");
}

std::vector<std::int64_t> Table::get_int_array(const std::string& key) const {
  const Value* v = find(key);
  if (!v) return {};
  if (auto* a = std::get_if<std::vector<std::int64_t>>(v)) return *a;
  if (auto* i = std::get_if<std::int64_t>(v)) return {*i};
  throw std::runtime_error(origin_ + ": key " + key + " is not an int array");
}

std::vector<double> Table::get_double_array(const std::string& key) const {
  const Value* v = find(key);
  if (!v) return {};
  if (auto* a = std::get_if<std::vector<double>>(v)) return *a;
  if (auto* ia = std::get_if<std::vector<std::int64_t>>(v)) {
    std::vector<double> out(ia->begin(), ia->end());
    return out;
  }
  if (auto* d = std::get_if<double>(v)) return {*d};
  if (auto* i = std::get_if<std::int64_t>(v)) return {static_cast<double>(*i)};
  throw std::runtime_error(origin_ + ": key " + key + " is not a number array");
}

std::vector<std::string> Table::keys_under(const std::string& prefix) const {
  std::string p = prefix + ".";
  std::vector<std::string> out;
  for (const auto& k : ordered_keys_)
    if (k.rfind(p, 0) == 0) out.push_back(k.substr(p.size()));
  return out;
}

}  // namespace groundiff::toml
