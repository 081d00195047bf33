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

#ifndef TIRS_BITS_HPP_
#define TIRS_BITS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tirs {

/// Subset of a finite carrier {0, ..., n-1}.
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline Bits full_bits(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

inline Bits singleton(std::size_t n, std::size_t i) {
  Bits b(n);
  b.set(i);
  return b;
}

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(i);
}

inline std::vector<std::size_t> indices_of(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for_each_bit(b, [&](std::size_t i) { out.push_back(i); });
  return out;
}

inline Bits bits_of(std::size_t n, const std::vector<std::size_t>& idx) {
  Bits b(n);
  for (auto i : idx) b.set(i);
  return b;
}

/// Orders subsets by cardinality, then by their sorted index lists.
struct BitsSizeLess {
  bool operator()(const Bits& a, const Bits& b) const {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return indices_of(a) < indices_of(b);
  }
};

}  // namespace tirs

#endif  // TIRS_BITS_HPP_
