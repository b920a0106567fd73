// Copyright 2026 The HullForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "util/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hullforge::detail {

int WorkerCount() {
  int count = static_cast<int>(std::thread::hardware_concurrency());
  if (count < 1) count = 1;
  if (const char* env = std::getenv("HULLFORGE_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) count = std::min(count, cap);
    } catch (...) {
      // Ignore malformed values.
    }
  }
  return count;
}

}  // namespace hullforge::detail
