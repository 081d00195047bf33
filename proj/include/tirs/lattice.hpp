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

#ifndef TIRS_LATTICE_HPP_
#define TIRS_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tirs/bits.hpp"
#include "tirs/report.hpp"

namespace tirs {

/// A finite bounded lattice over named elements.
///
/// Elements are addressed by their index in the construction order. The
/// order is stored as principal up-sets and down-sets; join and meet are
/// precomputed tables. Instances are immutable once built and only come out
/// of the validating factories below.
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return names_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Index of a named element; throws InvalidInput if unknown.
  std::size_t index(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  /// Join of a subset; the empty join is bot.
  std::size_t join_all(const Bits& s) const;
  /// Meet of a subset; the empty meet is top.
  std::size_t meet_all(const Bits& s) const;

  std::size_t bot() const noexcept { return bot_; }
  std::size_t top() const noexcept { return top_; }

  /// {b : a <= b}
  const Bits& up(std::size_t a) const { return up_[a]; }
  /// {b : b <= a}
  const Bits& down(std::size_t a) const { return down_[a]; }
  const Bits& upper_covers(std::size_t a) const { return upper_covers_[a]; }
  const Bits& lower_covers(std::size_t a) const { return lower_covers_[a]; }

  /// Cover pairs (a, b) with a covered by b, lexicographic by index.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// All pairs (a, b) with a <= b, lexicographic by index.
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  friend FiniteLattice lattice_from_relation(std::vector<std::string>, std::vector<Bits>);

  std::vector<std::string> names_;
  std::vector<Bits> up_, down_, upper_covers_, lower_covers_;
  std::vector<std::size_t> join_, meet_;
  std::size_t bot_ = 0, top_ = 0;
};

/// Builds a lattice from element names and cover pairs (lower, upper).
///
/// The order is the reflexive-transitive closure of the covers. Throws
/// InvalidInput for duplicate or unknown names, NotAPartialOrder on a cycle,
/// NoBounds on an empty carrier and NotALattice for the first pair lacking a
/// unique join or meet.
FiniteLattice build_lattice(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers);

/// Same as build_lattice, from a relation given as rows: `above[a]` holds
/// elements known to be above `a`. The closure is taken here.
FiniteLattice lattice_from_relation(std::vector<std::string> elements,
                                    std::vector<Bits> above);

struct Irreducibles {
  Bits join_irreducible;
  Bits meet_irreducible;
};

/// Join-irreducibles have exactly one lower cover, meet-irreducibles exactly
/// one upper cover. In a finite lattice these are also the completely
/// irreducible elements.
Irreducibles irreducibles(const FiniteLattice& lattice);

struct FiltersIdeals {
  std::vector<Bits> filters;
  std::vector<Bits> ideals;
};

/// All nonempty filters and ideals; entry i is the principal filter/ideal
/// of element i.
FiltersIdeals filters_ideals(const FiniteLattice& lattice);

/// A map between finite lattices, meant to be an embedding.
struct LatticeEmbedding {
  FiniteLattice source;
  FiniteLattice target;
  std::vector<std::size_t> map;
};

LatticeEmbedding identity_embedding(const FiniteLattice& lattice);

/// Injectivity and preservation of join, meet, bot and top.
CheckReport validate_embedding(const LatticeEmbedding& emb,
                               WitnessMode mode = WitnessMode::First);

/// Elements of the target that are meets (filter elements) or joins (ideal
/// elements) of image elements.
Bits filter_elements(const LatticeEmbedding& emb);
Bits ideal_elements(const LatticeEmbedding& emb);

/// Every target element must be a join of filter elements and a meet of
/// ideal elements. Each failing target element is a witness.
CheckReport check_dense(const LatticeEmbedding& emb,
                        WitnessMode mode = WitnessMode::First);

/// Compactness of a completion. For finite carriers every set is finite, so
/// A' = A and B' = B always work; the quantifier over subsets of the image
/// is still executed when the source has at most `kCompactSweepLimit`
/// elements, and skipped (with a true verdict) above that.
CheckReport check_compact(const LatticeEmbedding& emb);
inline constexpr std::size_t kCompactSweepLimit = 10;

/// a ^ (b v c) = (a ^ b) v (a ^ c) over all triples.
CheckReport is_distributive(const FiniteLattice& lattice,
                            WitnessMode mode = WitnessMode::First);

/// Every element is a join of join-irreducibles and a meet of
/// meet-irreducibles. Always true for finite lattices; checked anyway.
CheckReport check_perfect(const FiniteLattice& lattice);

}  // namespace tirs

#endif  // TIRS_LATTICE_HPP_
