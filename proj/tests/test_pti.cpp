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
#include "tirs/functors.hpp"
#include "tirs/galois.hpp"
#include "tirs/generators.hpp"
#include "tirs/ploscica.hpp"
#include "tirs/pti.hpp"

namespace tirs {
namespace {

// PTi evaluated from the order matrix and the oracle's irreducibles.
bool pti_oracle(const FiniteLattice& l) {
  const auto le = oracle::order_from_covers(l);
  const auto j = oracle::join_irreducibles(le, l.bot());
  const auto m = oracle::meet_irreducibles(le, l.top());
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!j[x] || !m[y] || le[x][y]) continue;
      bool found = false;
      for (std::size_t w = 0; w < n && !found; ++w)
        for (std::size_t z = 0; z < n && !found; ++z) {
          if (!j[w] || !m[z] || !le[w][x] || !le[y][z] || le[w][z]) continue;
          bool ok = true;
          for (std::size_t u = 0; u < n; ++u)
            if (j[u] && u != w && le[u][w] && !le[u][z]) ok = false;
          for (std::size_t v = 0; v < n; ++v)
            if (m[v] && v != z && le[z][v] && !le[w][v]) ok = false;
          found = ok;
        }
      if (!found) return false;
    }
  return true;
}

TEST(Pti, C2) {
  const auto l = fixtures::c2();
  const auto r = check_pti(l);
  ASSERT_TRUE(r.verdict());
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(l.name(r.pairs[0].x), "1");
  EXPECT_EQ(l.name(*r.pairs[0].w), "1");
  EXPECT_EQ(l.name(*r.pairs[0].z), "0");
}

TEST(Pti, N5PairBAIsWitnessedByBC) {
  const auto l = fixtures::n5();
  const auto r = check_pti(l);
  ASSERT_TRUE(r.verdict());
  bool seen = false;
  for (const auto& p : r.pairs)
    if (l.name(p.x) == "b" && l.name(p.y) == "a") {
      seen = true;
      EXPECT_EQ(l.name(*p.w), "b");
      EXPECT_EQ(l.name(*p.z), "c");
    }
  EXPECT_TRUE(seen);
}

TEST(Pti, M3) {
  const auto l = fixtures::m3();
  const auto r = check_pti(l, WitnessMode::All);
  ASSERT_TRUE(r.verdict());
  for (const auto& p : r.pairs) {
    EXPECT_EQ(*p.w, p.x);
    EXPECT_NE(*p.z, *p.w);
  }
}

TEST(Pti, CorruptedCandidatesFail) {
  const auto l = fixtures::n5();
  auto irr = irreducibles(l);
  Bits m = irr.meet_irreducible;
  m.reset(l.index("c"));
  const auto r = check_pti_with(l, irr.join_irreducible, m);
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.report.witnesses()[0].elements, (std::vector<std::string>{"b", "a"}));
}

TEST(Pti, MatchesOracleEverywhere) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& l : gen_lattice({GenKind::Lattice, n, 0, 1, true}))
      ASSERT_EQ(check_pti(l).verdict(), pti_oracle(l));
  for (std::size_t n = 6; n <= 7; ++n)
    for (const auto& l : gen_lattice({GenKind::Lattice, n, n, 10, false})) {
      EXPECT_TRUE(pti_oracle(l));
      EXPECT_TRUE(check_pti(l).verdict());
    }
}

TEST(PtiFrame, Examples) {
  EXPECT_TRUE(check_pti_frame_form(fixtures::diagonal3()).verdict());
  EXPECT_TRUE(check_pti_frame_form(rho(dual_graph(fixtures::n5()).graph).frame).verdict());
}

// With strict inclusion in clauses (iii) and (iv), the equal empty rows of
// F2x1 make both clauses vacuous and (x,y) is witnessed by (x,y) itself.
TEST(PtiFrame, F2x1HoldsLiterally) {
  const auto f = fixtures::f2x1();
  const auto r = check_pti_frame_form(f, WitnessMode::All);
  EXPECT_TRUE(r.verdict());
  for (const auto& p : r.pairs) EXPECT_TRUE(p.satisfied());
}

TEST(PtiFrame, CorruptedCandidatesFail) {
  const auto f = fixtures::diagonal3();
  Bits ps = full_bits(3);
  Bits qs(3);
  qs.set(0);
  const auto r = check_pti_frame_form_with(f, ps, qs);
  EXPECT_FALSE(r.verdict());
}

TEST(Bridge, Examples) {
  EXPECT_TRUE(pti_bridge_suite(rho(dual_graph(fixtures::m3()).graph).frame).verdict());
  EXPECT_TRUE(pti_bridge_suite(rho(dual_graph(fixtures::n5()).graph).frame).verdict());
  for (const auto& f : gen_rs_frame({GenKind::RSFrame, 3, 0, 1, true}))
    EXPECT_TRUE(pti_bridge_suite(f).verdict());
}

TEST(Bridge, RejectsNonRS) {
  try {
    pti_bridge_suite(fixtures::f2x1());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRS);
  }
}

}  // namespace
}  // namespace tirs
