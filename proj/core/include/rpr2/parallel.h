// Copyright 2026 The rpr2 Authors
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

#ifndef RPR2_PARALLEL_H_
#define RPR2_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace rpr2 {

// Worker count used by ParallelFor. Initialized from RPR2_THREADS when set,
// otherwise std::thread::hardware_concurrency().
int ThreadCount();
void SetThreadCount(int threads);

// Calls body(i) for every i in [0, n). Indices are handed out dynamically, so
// body must only write to state owned by index i. Exceptions thrown by body
// are rethrown on the calling thread (the first one wins).
void ParallelFor(size_t n, const std::function<void(size_t)>& body);

}  // namespace rpr2

#endif  // RPR2_PARALLEL_H_
