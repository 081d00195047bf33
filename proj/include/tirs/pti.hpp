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

#ifndef TIRS_PTI_HPP_
#define TIRS_PTI_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "tirs/bits.hpp"
#include "tirs/lattice.hpp"
#include "tirs/report.hpp"
#include "tirs/structures.hpp"

namespace tirs {

/// Outcome for one pair x not below y. `w`/`z` are set when a witness pair
/// was found. For the frame form, x, w index X1 and y, z index X2.
struct PTiWitness {
  std::size_t x;
  std::size_t y;
  std::optional<std::size_t> w;
  std::optional<std::size_t> z;

  bool satisfied() const { return w.has_value(); }
};

struct PTiReport {
  CheckReport report;
  /// One entry per pair in first-witness mode; in all-witness mode one entry
  /// per satisfying (w, z), or a single unsatisfied entry.
  std::vector<PTiWitness> pairs;

  bool verdict() const { return report.verdict(); }
};

/// For all join-irreducible x and meet-irreducible y with x not below y,
/// searches join-irreducible w and meet-irreducible z (lexicographically)
/// with
///   (i)   w <= x and y <= z
///   (ii)  w not below z
///   (iii) every join-irreducible u < w has u <= z
///   (iv)  every meet-irreducible v > z has w <= v.
/// Throws NotPerfect.
PTiReport check_pti(const FiniteLattice& lattice, WitnessMode mode = WitnessMode::First);

/// check_pti with the witnesses w and z drawn from the supplied candidate
/// sets. Pairs and the u, v quantifiers still range over J and M.
PTiReport check_pti_with(const FiniteLattice& lattice, const Bits& join_candidates,
                         const Bits& meet_candidates, WitnessMode mode = WitnessMode::First);

/// Frame form: for all x, y with not xRy, searches p, q with
///   (i)   xR <= pR and Ry <= Rq
///   (ii)  not pRq
///   (iii) pR strictly inside uR implies uRq
///   (iv)  Rq strictly inside Rv implies pRv.
PTiReport check_pti_frame_form(const Frame& f, WitnessMode mode = WitnessMode::First);

/// Frame form with p restricted to `p_candidates` and q to `q_candidates`;
/// pairs and the u, v quantifiers still range over X1 and X2.
PTiReport check_pti_frame_form_with(const Frame& f, const Bits& p_candidates,
                                    const Bits& q_candidates,
                                    WitnessMode mode = WitnessMode::First);

/// For an RS frame F with G = closed_sets(F).lattice, checks
///   (a) F satisfies (Ti)  implies  G satisfies PTi,
///   (b) G satisfies PTi   implies  frame_of_perfect(G) satisfies (Ti),
///   (c) frame_of_perfect(G) is isomorphic to F.
/// Throws NotRS if F is not RS.
CheckReport pti_bridge_suite(const Frame& f);

}  // namespace tirs

#endif  // TIRS_PTI_HPP_
