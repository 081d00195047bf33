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

#ifndef TIRS_FUNCTORS_HPP_
#define TIRS_FUNCTORS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tirs/lattice.hpp"
#include "tirs/report.hpp"
#include "tirs/structures.hpp"

namespace tirs {

struct GraphMorphism {
  Graph source;
  Graph target;
  std::vector<std::size_t> map;
};

struct FrameMorphism {
  Frame source;
  Frame target;
  std::vector<std::size_t> map1;
  std::vector<std::size_t> map2;
};

/// The associated frame together with the quotient maps. X1 is the set of
/// row classes, X2 the set of column classes; each class is named after its
/// minimal-index member.
struct RhoResult {
  Frame frame;
  std::vector<std::size_t> class1;  // vertex -> X1 index
  std::vector<std::size_t> class2;  // vertex -> X2 index
};

RhoResult rho(const Graph& g);

/// The associated graph: vertices are the H-pairs (x, y), named "(x,y)",
/// and ((x,y),(w,z)) is an edge iff not xRz.
struct GrResult {
  Graph graph;
  std::vector<IndexPair> pairs;  // vertex -> (x, y)
  /// Vertex index of an H-pair, if (x, y) is in H.
  std::optional<std::size_t> vertex_of(std::size_t x, std::size_t y) const;
};

GrResult gr(const Frame& f);

/// x -> ([x]1, [x]2) into gr(rho(g)), verified to be a graph isomorphism.
/// Throws NotTiRS if g is not TiRS.
GraphMorphism alpha(const Graph& g);

/// x -> [(x, y)]1 and y -> [(x, y)]2 into rho(gr(f)) via H-membership,
/// verified to be a frame isomorphism. Throws NotTiRS if f is not TiRS.
FrameMorphism beta(const Frame& f);

/// Backtracking search for a graph isomorphism, pruned by row and column
/// cardinalities. Returns the first one found in index order.
std::optional<std::vector<std::size_t>> graph_iso(const Graph& a, const Graph& b);

/// Same for frames; returns the bijection pair (X1 map, X2 map).
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> frame_iso(
    const Frame& a, const Frame& b);

/// Order isomorphism between two finite lattices.
std::optional<std::vector<std::size_t>> lattice_iso(const FiniteLattice& a,
                                                    const FiniteLattice& b);

/// Bijection that preserves and reflects the relation.
bool is_graph_isomorphism(const GraphMorphism& m);
bool is_frame_isomorphism(const FrameMorphism& m);

/// Clauses (i)-(iii) of a TiRS graph morphism.
CheckReport validate_graph_morphism(const GraphMorphism& m,
                                    WitnessMode mode = WitnessMode::First);

/// Clauses (i)-(iv) of a TiRS frame morphism. Clause (i) is contravariant:
/// psi1(x) R psi2(y) must imply x R y.
CheckReport validate_frame_morphism(const FrameMorphism& m,
                                    WitnessMode mode = WitnessMode::First);

GraphMorphism identity_morphism(const Graph& g);
FrameMorphism identity_morphism(const Frame& f);

/// second after first. Throws InvalidMorphism if first.target differs from
/// second.source.
GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second);
FrameMorphism compose(const FrameMorphism& first, const FrameMorphism& second);

/// rho on morphisms: [x]1 -> [phi(x)]1, [x]2 -> [phi(x)]2. Checks that the
/// class maps are well defined (NotWellDefined) and that the result is a
/// frame morphism (PostconditionFailed).
FrameMorphism rho_mor(const GraphMorphism& m);

/// gr on morphisms: (x, y) -> (psi1(x), psi2(y)). Throws HNotPreserved if an
/// H-pair lands outside H of the target, PostconditionFailed if the result is
/// not a graph morphism.
GraphMorphism gr_mor(const FrameMorphism& m);

/// gr(rho(phi)) . alpha_X = alpha_Y . phi, pointwise on X.
CheckReport check_naturality(const GraphMorphism& m, WitnessMode mode = WitnessMode::First);
/// rho(gr(psi)) . beta_F = beta_G . psi, pointwise on X1 and X2.
CheckReport check_naturality(const FrameMorphism& m, WitnessMode mode = WitnessMode::First);

}  // namespace tirs

#endif  // TIRS_FUNCTORS_HPP_
