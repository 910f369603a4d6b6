// Copyright 2026 The lpdm Authors.
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

#ifndef LPDM_PARALLEL_HPP_
#define LPDM_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace lpdm {

// Worker count: LPDM_THREADS if set and positive, else the hardware count.
unsigned ThreadCount();

// Calls body(i) for i in [0, count) across ThreadCount() workers. Callers
// write results into index i of a preallocated buffer, which keeps the merged
// output independent of scheduling. The first exception thrown is rethrown.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace lpdm

#endif  // LPDM_PARALLEL_HPP_
