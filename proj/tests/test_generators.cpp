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

#include <gtest/gtest.h>

#include "tirs/errors.hpp"
#include "tirs/fixtures.hpp"
#include "tirs/functors.hpp"
#include "tirs/generators.hpp"
#include "tirs/ploscica.hpp"

namespace tirs {
namespace {

TEST(GenPoset, SizeOneIsLoop) {
  const auto g = gen_poset({GenKind::Poset, 1, 3, 1, false});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].edge_count(), 1u);
}

TEST(GenPoset, Deterministic) {
  const GenSpec s{GenKind::Poset, 4, 7, 5, false};
  EXPECT_EQ(gen_poset(s), gen_poset(s));
  for (const auto& p : gen_poset(s)) EXPECT_TRUE(is_poset_graph(p).verdict());
}

// Known counts of unlabelled posets: 1, 2, 5, 16, 63, 318.
TEST(GenPoset, ExhaustiveCountsUpToIsomorphism) {
  const std::vector<std::size_t> counts{1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    const auto all = gen_poset({GenKind::Poset, n, 0, 1, true});
    EXPECT_EQ(all.size(), counts[n - 1]) << n;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) ASSERT_FALSE(graph_iso(all[i], all[j]));
  }
}

// Known counts of unlabelled lattices: 1, 1, 1, 2, 5, 15, 53.
TEST(GenLattice, ExhaustiveCounts) {
  const std::vector<std::size_t> counts{1, 1, 1, 2, 5, 15};
  for (std::size_t n = 1; n <= counts.size(); ++n)
    EXPECT_EQ(gen_lattice({GenKind::Lattice, n, 0, 1, true}).size(), counts[n - 1]) << n;
  // Distributive ones: 1, 1, 1, 2, 3, 5.
  const std::vector<std::size_t> dcounts{1, 1, 1, 2, 3, 5};
  for (std::size_t n = 1; n <= dcounts.size(); ++n)
    EXPECT_EQ(gen_lattice({GenKind::DistributiveLattice, n, 0, 1, true}).size(), dcounts[n - 1]) << n;
}

TEST(GenLattice, SizeTwoIsC2) {
  for (const auto& l : gen_lattice({GenKind::Lattice, 2, 4, 3, false}))
    EXPECT_TRUE(lattice_iso(l, fixtures::c2()));
}

TEST(GenLattice, RandomHasRequestedSize) {
  for (std::size_t n = 1; n <= kMaxLatticeSize; ++n) {
    const GenSpec s{GenKind::Lattice, n, 99, 4, false};
    const auto ls = gen_lattice(s);
    EXPECT_EQ(ls, gen_lattice(s));
    for (const auto& l : ls) EXPECT_EQ(l.size(), n);
    for (const auto& l : gen_lattice({GenKind::DistributiveLattice, n, 99, 4, false})) {
      EXPECT_EQ(l.size(), n);
      EXPECT_TRUE(is_distributive(l).verdict());
    }
  }
}

TEST(GenLattice, GeneralModeReachesNonDistributive) {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 50 && !found; ++seed)
    for (const auto& l : gen_lattice({GenKind::Lattice, 5, seed, 4, false}))
      found = found || !is_distributive(l).verdict();
  EXPECT_TRUE(found);
}

TEST(GenLattice, RejectsOutOfRange) {
  EXPECT_THROW(gen_lattice({GenKind::Lattice, 9, 0, 1, false}), Error);
  EXPECT_THROW(gen_lattice({GenKind::Lattice, 0, 0, 1, false}), Error);
  EXPECT_THROW(gen_poset({GenKind::Poset, 7, 0, 1, true}), Error);
}

TEST(Downsets, AntichainGivesB2) {
  const Graph anti({"u", "v"}, {{0, 0}, {1, 1}});
  EXPECT_TRUE(lattice_iso(downset_lattice(anti), fixtures::b2()));
}

TEST(MacNeille, Bowtie) {
  const Graph bowtie({"a", "b", "c", "d"},
                     {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto l = macneille_completion(bowtie);
  EXPECT_EQ(l.size(), 7u);
  EXPECT_TRUE(is_distributive(l).verdict());
}

TEST(MacNeille, ThreeAntichainIsM3) {
  const Graph anti({"u", "v", "w"}, {{0, 0}, {1, 1}, {2, 2}});
  const auto l = macneille_completion(anti);
  EXPECT_TRUE(lattice_iso(l, fixtures::m3()));
  EXPECT_FALSE(is_distributive(l).verdict());
}

TEST(MacNeille, LatticeIsItsOwnCompletion) {
  for (const auto& [name, l] : fixtures::lattices())
    EXPECT_TRUE(lattice_iso(macneille_completion(order_graph(l)), l)) << name;
}

TEST(GenFrames, ExhaustiveThreeByThreeAreTiRS) {
  const auto all = gen_rs_frame({GenKind::RSFrame, 3, 0, 1, true});
  EXPECT_FALSE(all.empty());
  for (const auto& f : all) EXPECT_TRUE(check_frame(f).is_tirs());
}

TEST(GenFrames, OneByOne) {
  const auto all = gen_rs_frame({GenKind::RSFrame, 1, 0, 1, true});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].pairs().empty());
}

TEST(GenFrames, RandomAreRS) {
  for (std::size_t n = 1; n <= kMaxFrameSide; ++n) {
    const GenSpec s{GenKind::RSFrame, n, 5, 5, false};
    const auto fs = gen_rs_frame(s);
    EXPECT_EQ(fs, gen_rs_frame(s));
    for (const auto& f : fs) EXPECT_TRUE(check_frame(f).is_rs());
  }
}

TEST(GenGraphs, TiRSAndIncludesN5Dual) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& g : gen_tirs_graph({GenKind::TiRSGraph, n, 13, 6, false}))
      EXPECT_TRUE(check_graph(g).is_tirs());
  const auto d5 = dual_graph(fixtures::n5()).graph;
  bool found = false;
  for (const auto& g : gen_tirs_graph({GenKind::TiRSGraph, 5, 0, 1, true}))
    found = found || graph_iso(g, d5).has_value();
  EXPECT_TRUE(found);
}

TEST(MonotoneMap, IsMonotone) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = gen_poset({GenKind::Poset, 5, seed, 1, false})[0];
    const auto b = gen_poset({GenKind::Poset, 4, seed + 1, 1, false})[0];
    const auto m = random_monotone_map(a, b, seed);
    ASSERT_TRUE(m.has_value());
    for (auto [x, y] : a.edges()) EXPECT_TRUE(b.has_edge(m->map[x], m->map[y]));
  }
}

}  // namespace
}  // namespace tirs
