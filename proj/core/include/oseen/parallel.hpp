// Copyright 2026 The oseen-ns Authors
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

#ifndef OSEEN_PARALLEL_HPP
#define OSEEN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace oseen {

/// Sets the worker count used by parallel_for. 0 selects
/// std::thread::hardware_concurrency().
void set_thread_count(unsigned n);

[[nodiscard]] unsigned thread_count();

/// Calls fn(i) for every i in [begin, end), split into contiguous chunks over
/// the configured workers. Each index must write only its own outputs; results
/// are then independent of the worker count.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& fn);

}  // namespace oseen

#endif
