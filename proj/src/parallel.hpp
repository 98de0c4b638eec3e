// Copyright 2026 The airfleet Authors
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

#include <cstddef>
#include <functional>

namespace airfleet {

// Worker count for candidate evaluation: AIRFLEET_THREADS when set to a
// positive integer, otherwise the hardware concurrency. Read once.
int EvaluationThreads();

// Runs body(i) for i in [0, n) on the evaluation arena. Each index must only
// write to its own output slot; callers reduce the slots serially.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace airfleet
