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

#include "oracles.hpp"
#include "tirs/errors.hpp"
#include "tirs/fixtures.hpp"
#include "tirs/generators.hpp"
#include "tirs/ploscica.hpp"
#include "tirs/structures.hpp"

namespace tirs {
namespace {

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph({"a", "a"}, {}), Error);
  EXPECT_THROW(Graph({"a"}, {{0, 1}}), Error);
  EXPECT_THROW(Frame({"x"}, {"y"}, {{1, 0}}), Error);
}

TEST(CheckGraph, PosetsAreTiRS) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : gen_poset({GenKind::Poset, n, 0, 1, true})) {
      const auto r = check_graph(p);
      EXPECT_TRUE(r.is_tirs()) << r.first_failure();
      EXPECT_TRUE(is_poset_graph(p).verdict());
    }
}

TEST(CheckGraph, NT4FailsTiAtXY) {
  const auto r = check_graph(fixtures::nt4());
  EXPECT_TRUE(r.reflexive.verdict());
  EXPECT_TRUE(r.separation.verdict());
  EXPECT_TRUE(r.reduction.verdict());
  ASSERT_FALSE(r.ti.verdict());
  EXPECT_EQ(r.ti.witnesses()[0].elements, (std::vector<std::string>{"x", "y"}));
}

TEST(CheckGraph, CompleteTwoVertexGraphFailsS) {
  const Graph g({"a", "b"}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_FALSE(check_graph(g).separation.verdict());
}

TEST(CheckGraph, AllWitnessMode) {
  const Graph g({"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0},
                                  {2, 1}});
  EXPECT_EQ(check_graph(g).separation.witnesses().size(), 1u);
  EXPECT_EQ(check_graph(g, WitnessMode::All).separation.witnesses().size(), 3u);
}

// Every reflexive graph on three vertices against the literal definitions.
TEST(CheckGraph, MatchesOracleExhaustivelyOnThreeVertices) {
  const std::size_t n = 3;
  std::vector<IndexPair> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask)
    for (int loops = 0; loops < 2; ++loops) {
      std::vector<IndexPair> edges;
      for (std::size_t i = 0; i < n; ++i)
        if (loops || i != 0) edges.emplace_back(i, i);
      for (std::size_t k = 0; k < off.size(); ++k)
        if (mask >> k & 1) edges.push_back(off[k]);
      const Graph g({"u", "v", "w"}, edges);
      const auto expect = oracle::graph_conditions(oracle::graph_matrix(g));
      const auto got = check_graph(g);
      ASSERT_EQ(got.reflexive.verdict(), expect.reflexive) << mask;
      ASSERT_EQ(got.separation.verdict(), expect.s) << mask;
      ASSERT_EQ(got.reduction.verdict(), expect.r) << mask;
      ASSERT_EQ(got.ti.verdict(), expect.ti) << mask;
    }
}

TEST(CheckFrame, F2x1FailsSAndTi) {
  const auto r = check_frame(fixtures::f2x1());
  ASSERT_FALSE(r.separation.verdict());
  EXPECT_EQ(r.separation.witnesses()[0].condition, "S(i)");
  ASSERT_FALSE(r.ti.verdict());
  EXPECT_EQ(r.ti.witnesses()[0].elements[1], "y");
}

TEST(CheckFrame, DiagonalIsTiRS) { EXPECT_TRUE(check_frame(fixtures::diagonal3()).is_tirs()); }

TEST(CheckFrame, TruncatedFramesAreTiRS) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = check_frame(fixtures::truncated_rs_frame(n));
    EXPECT_TRUE(r.is_tirs()) << n << " " << r.first_failure();
  }
}

TEST(CheckFrame, OneByOne) {
  EXPECT_TRUE(check_frame(fixtures::empty1x1()).is_rs());
  const Frame full({"x"}, {"y"}, {{0, 0}});
  const auto r = check_frame(full);
  EXPECT_TRUE(r.separation.verdict());
  EXPECT_FALSE(r.reduction.verdict());
}

TEST(CheckFrame, MatchesOracleExhaustivelyOnThreeByThree) {
  std::size_t rs = 0;
  for (std::uint32_t mask = 0; mask < 512; ++mask) {
    std::vector<IndexPair> rel;
    for (std::size_t k = 0; k < 9; ++k)
      if (mask >> k & 1) rel.emplace_back(k / 3, k % 3);
    const Frame f({"x0", "x1", "x2"}, {"y0", "y1", "y2"}, rel);
    const auto expect = oracle::frame_conditions(oracle::frame_matrix(f));
    const auto got = check_frame(f);
    ASSERT_EQ(got.separation.verdict(), expect.s) << mask;
    ASSERT_EQ(got.reduction.verdict(), expect.r) << mask;
    ASSERT_EQ(got.ti.verdict(), expect.ti) << mask;
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y)
        ASSERT_EQ(in_h(f, x, y), oracle::in_h(oracle::frame_matrix(f), x, y));
    if (got.is_rs()) {
      ++rs;
      EXPECT_TRUE(got.ti.verdict()) << mask;
    }
  }
  EXPECT_GT(rs, 0u);
}

TEST(PosetGraph, Examples) {
  EXPECT_TRUE(is_poset_graph(dual_graph(fixtures::b2()).graph).verdict());
  EXPECT_TRUE(is_poset_graph(fixtures::loop1()).verdict());
  const auto r = is_poset_graph(dual_graph(fixtures::n5()).graph);
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.witnesses()[0].elements, (std::vector<std::string>{"p1", "p2", "p0"}));
}

TEST(OrderGraph, IsPoset) {
  for (const auto& [name, l] : fixtures::lattices()) {
    const auto g = order_graph(l);
    EXPECT_TRUE(is_poset_graph(g).verdict()) << name;
    EXPECT_EQ(g.edge_count(), l.order_pairs().size()) << name;
    EXPECT_EQ(converse(converse(g)), g);
  }
}

}  // namespace
}  // namespace tirs
