// Copyright 2026 The tirs Authors
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

#ifndef TIRS_SUITE_HPP_
#define TIRS_SUITE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tirs/report.hpp"

namespace tirs {

inline constexpr std::size_t kDefaultSuiteMaxSize = 6;

// Reads TIRS_SUITE_MAXSIZE, clamped to [2, kMaxLatticeSize].
std::size_t suite_max_size_from_env();

// One entry per module battery, ordered by task name.
std::vector<std::pair<std::string, CheckReport>> run_suite(std::uint64_t seed,
                                                           std::size_t max_size);

}  // namespace tirs

#endif  // TIRS_SUITE_HPP_
