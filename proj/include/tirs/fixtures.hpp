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

#ifndef TIRS_FIXTURES_HPP_
#define TIRS_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tirs/lattice.hpp"
#include "tirs/structures.hpp"

namespace tirs::fixtures {

FiniteLattice c2();  // 0 < 1
FiniteLattice c3();  // 0 < m < 1
FiniteLattice b2();  // 0 < p, q < 1
FiniteLattice m3();  // 0 < a, b, c < 1
FiniteLattice n5();  // 0 < a < c < 1, 0 < b < 1

/// C2, C3, B2, M3, N5 with their short names.
std::vector<std::pair<std::string, FiniteLattice>> lattices();

/// One vertex with a loop.
Graph loop1();
/// Vertices x, y, w, t; all loops plus (x,y), (w,x), (y,t). RS but not Ti.
Graph nt4();

/// X1 = {x, x'}, X2 = {y}, R empty.
Frame f2x1();
/// R = identity on {a, b, c}.
Frame diagonal3();
/// X1 = {a0..an}, X2 = {b0..bn},
/// R = {(a1,b0), (a0,b1)} u {(ai,bj) : 2 <= i, 1 <= j <= i}.
Frame truncated_rs_frame(std::size_t n);
/// X1 = {x}, X2 = {y}, R empty.
Frame empty1x1();

}  // namespace tirs::fixtures

#endif  // TIRS_FIXTURES_HPP_
