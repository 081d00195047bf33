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

#ifndef TIRS_PLOSCICA_HPP_
#define TIRS_PLOSCICA_HPP_

#include <cstddef>
#include <vector>

#include "tirs/bits.hpp"
#include "tirs/lattice.hpp"
#include "tirs/structures.hpp"

namespace tirs {

/// A maximal disjoint filter-ideal pair, i.e. a maximal partial
/// homomorphism f into the two-element lattice with ones = f^-1(1) and
/// zeros = f^-1(0). Both parts are principal in a finite lattice.
struct MaximalPair {
  std::size_t filter_generator;
  std::size_t ideal_generator;
  Bits ones;
  Bits zeros;

  friend bool operator==(const MaximalPair&, const MaximalPair&) = default;
};

/// All pairs (up x, down y) with x not below y such that every x' < x lies
/// below y and every y' > y lies above x. Sorted by (x, y) index. Throws
/// DegenerateLattice on a one-element lattice.
std::vector<MaximalPair> maximal_pairs(const FiniteLattice& lattice);

/// The flat dual graph together with the pair behind each vertex. Vertex i
/// is named "p<i>".
struct DualGraph {
  Graph graph;
  std::vector<MaximalPair> pairs;
};

DualGraph dual_graph(const FiniteLattice& lattice);

/// (f, g) in E iff f^-1(1) and g^-1(0) are disjoint.
bool dual_edge_by_intersection(const MaximalPair& f, const MaximalPair& g);
/// (f, g) in E iff f(a) <= g(a) on the common domain.
bool dual_edge_pointwise(const MaximalPair& f, const MaximalPair& g);

/// f <= g iff f^-1(1) is contained in g^-1(1). Throws MismatchedCarrier for
/// pairs over carriers of different size.
bool mph_leq(const MaximalPair& f, const MaximalPair& g);

}  // namespace tirs

#endif  // TIRS_PLOSCICA_HPP_
