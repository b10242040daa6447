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

#include <cstdlib>
#include <string>

namespace groundiff {

// Repo data directory holding keywords.toml and the middle-variability
// caption templates. GROUNDIFF_DATA env var overrides the compiled-in path.
inline std::string data_dir() {
  if (const char* env = std::getenv("GROUNDIFF_DATA")) return env;
#ifdef GROUNDIFF_DATA_DIR
  return GROUNDIFF_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

}  // namespace groundiff
