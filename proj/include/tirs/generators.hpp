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

#ifndef TIRS_GENERATORS_HPP_
#define TIRS_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tirs/functors.hpp"
#include "tirs/lattice.hpp"
#include "tirs/structures.hpp"

namespace tirs {

enum class GenKind { Poset, Lattice, DistributiveLattice, TiRSGraph, RSFrame };

std::string_view to_string(GenKind kind);
std::optional<GenKind> parse_gen_kind(std::string_view text);

/// Exhaustive modes enumerate structures up to isomorphism (posets,
/// lattices, graphs) or all labelled relations (frames); `count` and `seed`
/// are then ignored.
struct GenSpec {
  GenKind kind = GenKind::Poset;
  std::size_t size = 1;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  bool exhaustive = false;
};

inline constexpr std::size_t kMaxRandomPosetSize = 12;
inline constexpr std::size_t kMaxExhaustivePosetSize = 6;
inline constexpr std::size_t kMaxLatticeSize = 8;
inline constexpr std::size_t kMaxFrameSide = 5;
inline constexpr std::size_t kMaxExhaustiveFrameSide = 4;

/// Random posets as graphs (E = <=): a shuffled order, each forward pair
/// kept with probability 1/2, then closed transitively. Vertices "v<i>".
std::vector<Graph> gen_poset(const GenSpec& spec);

/// Distributive mode: down-set lattices of random posets. General mode:
/// Dedekind-MacNeille completions of random posets. Only lattices of the
/// requested size are kept; throws SizeUnreachable when attempts run out.
/// Elements are renamed "e<i>".
std::vector<FiniteLattice> gen_lattice(const GenSpec& spec);

/// Random relations on size x size kept when RS; exhaustive mode keeps every
/// RS relation. X1 points "x<i>", X2 points "y<j>".
std::vector<Frame> gen_rs_frame(const GenSpec& spec);

/// Dual graphs of generated lattices of the given size, interleaved with
/// generated posets of the same size.
std::vector<Graph> gen_tirs_graph(const GenSpec& spec);

/// Lattice of down-sets of a poset graph, ordered by inclusion.
FiniteLattice downset_lattice(const Graph& poset);

/// Dedekind-MacNeille completion of a poset graph.
FiniteLattice macneille_completion(const Graph& poset);

/// A random edge-preserving map found by randomised backtracking, or nothing
/// if no such map exists.
std::optional<GraphMorphism> random_monotone_map(const Graph& from, const Graph& to,
                                                 std::uint64_t seed);

}  // namespace tirs

#endif  // TIRS_GENERATORS_HPP_
