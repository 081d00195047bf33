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

#include "tirs/fixtures.hpp"

namespace tirs::fixtures {

FiniteLattice c2() { return build_lattice({"0", "1"}, {{"0", "1"}}); }

FiniteLattice c3() { return build_lattice({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}); }

FiniteLattice b2() {
  return build_lattice({"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}});
}

FiniteLattice m3() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice n5() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"c", "1"}, {"b", "1"}});
}

std::vector<std::pair<std::string, FiniteLattice>> lattices() {
  return {{"C2", c2()}, {"C3", c3()}, {"B2", b2()}, {"M3", m3()}, {"N5", n5()}};
}

Graph loop1() { return Graph({"v"}, {{0, 0}}); }

Graph nt4() {
  // x=0, y=1, w=2, t=3
  return Graph({"x", "y", "w", "t"}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {2, 0}, {1, 3}});
}

Frame f2x1() { return Frame({"x", "x'"}, {"y"}, {}); }

Frame diagonal3() { return Frame({"a", "b", "c"}, {"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}}); }

Frame truncated_rs_frame(std::size_t n) {
  std::vector<std::string> x1, x2;
  for (std::size_t i = 0; i <= n; ++i) {
    x1.push_back("a" + std::to_string(i));
    x2.push_back("b" + std::to_string(i));
  }
  std::vector<IndexPair> r{{1, 0}, {0, 1}};
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) r.emplace_back(i, j);
  return Frame(std::move(x1), std::move(x2), r);
}

Frame empty1x1() { return Frame({"x"}, {"y"}, {}); }

}  // namespace tirs::fixtures
