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

#ifndef TIRS_REPORT_HPP_
#define TIRS_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace tirs {

/// Whether a checker stops at the first violation or collects them all.
/// First-witness mode scans in lexicographic index order.
enum class WitnessMode { First, All };

struct Witness {
  std::string condition;
  std::vector<std::string> elements;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a condition check. The verdict is true iff no witness was
/// recorded.
class CheckReport {
 public:
  bool verdict() const noexcept { return witnesses_.empty(); }
  explicit operator bool() const noexcept { return verdict(); }

  const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }

  void add(std::string condition, std::vector<std::string> elements) {
    witnesses_.push_back({std::move(condition), std::move(elements)});
  }

  void merge(const CheckReport& other) {
    witnesses_.insert(witnesses_.end(), other.witnesses_.begin(),
                      other.witnesses_.end());
  }

  /// True while a scan in `mode` should keep looking for violations.
  bool wants_more(WitnessMode mode) const noexcept {
    return mode == WitnessMode::All || witnesses_.empty();
  }

 private:
  std::vector<Witness> witnesses_;
};

}  // namespace tirs

#endif  // TIRS_REPORT_HPP_
