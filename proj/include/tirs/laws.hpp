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

#ifndef TIRS_LAWS_HPP_
#define TIRS_LAWS_HPP_

#include "tirs/functors.hpp"
#include "tirs/lattice.hpp"
#include "tirs/report.hpp"
#include "tirs/structures.hpp"

// Invariant batteries shared by the `suite` command and the test suites.
// Each returns a report whose witnesses name the law that failed.
namespace tirs::laws {

/// Order/table coherence, commutativity, associativity, idempotence,
/// absorption, bounds, |Filt| = |Idl| = |L|, identity dense, compactness.
CheckReport lattice_laws(const FiniteLattice& lattice);

/// D(L) is TiRS and both edge definitions agree; for distributive L it is
/// also a poset graph with |J(L)| vertices.
CheckReport dual_graph_laws(const FiniteLattice& lattice);

/// For distributive L: the closed-set lattice of rho(D(L)) is isomorphic to
/// the down-sets of D(L), read with (f, g) in E as g <= f.
CheckReport birkhoff_laws(const FiniteLattice& lattice);

/// Adjunction A <= down(B) iff B <= up(A) (all subsets while |X1|+|X2| <=
/// 14, singletons otherwise), up.down.up = up and down.up.down = down, and
/// for singleton closures: w in cl{x} iff xR <= wR iff cl{w} <= cl{x}, and
/// cl{x} <= Ry iff xRy.
CheckReport galois_laws(const Frame& frame);

/// alpha verifies and H of rho(g) is exactly {([x]1, [x]2)}.
CheckReport graph_round_trip(const Graph& g);

/// beta verifies.
CheckReport frame_round_trip(const Frame& f);

/// For composable graph morphisms first: X -> Y, second: Y -> Z between
/// TiRS graphs: identity and composition laws for rho and gr, closure of
/// morphisms under composition, naturality of first, second and the
/// composite on both sides.
CheckReport functor_laws(const GraphMorphism& first, const GraphMorphism& second);

/// canext_tandem(L) and canext_polarity(L) are isomorphic to L and to each
/// other by isomorphisms commuting with the embeddings; irreducibles of the
/// Galois lattice and the maximal-pair description agree.
CheckReport canext_laws(const FiniteLattice& lattice);

}  // namespace tirs::laws

#endif  // TIRS_LAWS_HPP_
