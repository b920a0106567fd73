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

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hullforge::detail {

/// Worker count: hardware concurrency, capped by HULLFORGE_THREADS when set.
int WorkerCount();

/// Splits [0, n) into contiguous chunks, one per worker, and calls
/// body(begin, end, chunk). Chunk boundaries depend only on n and the worker
/// count. The first exception by chunk order is rethrown after all workers
/// finish.
template <class Body>
void ParallelChunks(size_t n, Body&& body) {
  const size_t workers = std::min<size_t>(static_cast<size_t>(WorkerCount()), std::max<size_t>(n, 1));
  if (workers <= 1) {
    body(size_t{0}, n, size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = n * w / workers;
    const size_t end = n * (w + 1) / workers;
    threads.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace hullforge::detail
