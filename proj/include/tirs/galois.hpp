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

#ifndef TIRS_GALOIS_HPP_
#define TIRS_GALOIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tirs/bits.hpp"
#include "tirs/lattice.hpp"
#include "tirs/report.hpp"
#include "tirs/structures.hpp"

namespace tirs {

/// {y : a R y for all a in A}
Bits galois_up(const Frame& f, const Bits& a);
/// {x : x R b for all b in B}
Bits galois_down(const Frame& f, const Bits& b);
/// galois_down(galois_up(A))
Bits galois_closure(const Frame& f, const Bits& a);

/// The complete lattice of Galois-closed subsets of X1, ordered by
/// inclusion. Closed sets are listed by cardinality then index order, and
/// element i of `lattice` is `closed_sets[i]`, named "{a,b,...}".
struct GaloisLattice {
  Frame base;
  std::vector<Bits> closed_sets;
  FiniteLattice lattice;
  /// Closures of singletons, as lattice element indices.
  Bits j_infty;
  /// Extents Ry, as lattice element indices.
  Bits m_infty;

  std::optional<std::size_t> find(const Bits& set) const;
};

/// Intersection-closure of the extents {Ry} together with X1. Each member
/// is re-verified to be Galois-closed.
GaloisLattice closed_sets(const Frame& f);

std::string set_name(const Frame& f, const Bits& set);

struct GaloisIrreducibles {
  Bits j_infty;
  Bits m_infty;
};

/// The irreducibles given by the closure/extent formulas, cross-checked
/// against the irreducibles of the lattice view. Throws IrreducibleMismatch
/// if they differ.
GaloisIrreducibles irreducibles_of_galois(const GaloisLattice& gl);

/// The frame (J, M, <=) of a perfect lattice, carriers in index order.
/// Throws NotPerfect.
Frame frame_of_perfect(const FiniteLattice& lattice);

/// A completion with its Galois-lattice realisation.
struct CanonicalExtension {
  LatticeEmbedding embedding;
  GaloisLattice galois;
};

/// G(rho(D(L))) with a -> {[f]1 : f(a) = 1}. The embedding is checked to be
/// a bounded-lattice embedding, dense and compact, and (finite case) onto.
CanonicalExtension canext_tandem(const FiniteLattice& lattice);

/// Galois-stable sets of the filter/ideal polarity F R I iff F meets I,
/// with a -> closure of {up a}. Same verification as canext_tandem.
CanonicalExtension canext_polarity(const FiniteLattice& lattice);

/// The meets of e[F] and joins of e[I] over maximal pairs (F, I) must be
/// exactly the join- and meet-irreducibles of the target, and every target
/// element must be a join of the former and a meet of the latter.
CheckReport jinfty_via_maximal_pairs(const LatticeEmbedding& emb);

}  // namespace tirs

#endif  // TIRS_GALOIS_HPP_
