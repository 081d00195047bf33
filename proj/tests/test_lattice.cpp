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
#include "tirs/laws.hpp"
#include "tirs/lattice.hpp"

namespace tirs {
namespace {

std::vector<std::string> names_of(const FiniteLattice& l, const Bits& b) {
  std::vector<std::string> out;
  for_each_bit(b, [&](std::size_t i) { out.push_back(l.name(i)); });
  return out;
}

std::vector<FiniteLattice> corpus() {
  std::vector<FiniteLattice> out;
  for (auto& [name, l] : fixtures::lattices()) out.push_back(l);
  for (std::size_t n = 1; n <= 7; ++n)
    for (auto& l : gen_lattice({GenKind::Lattice, n, 100 + n, 6, false})) out.push_back(l);
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& l : gen_lattice({GenKind::Lattice, n, 0, 1, true})) out.push_back(l);
  return out;
}

TEST(BuildLattice, TwoChain) {
  const auto l = fixtures::c2();
  EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(l.join(l.index("0"), l.index("1")), l.index("1"));
  EXPECT_EQ(l.meet(l.index("0"), l.index("1")), l.index("0"));
}

TEST(BuildLattice, N5OrderHasThirteenPairs) {
  const auto l = fixtures::n5();
  EXPECT_EQ(l.order_pairs().size(), 13u);
  const auto le = oracle::order_from_covers(l);
  std::size_t count = 0;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      count += le[a][b];
      EXPECT_EQ(le[a][b], l.leq(a, b));
    }
  EXPECT_EQ(count, 13u);
}

TEST(BuildLattice, BowtieHasNoJoin) {
  try {
    build_lattice({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    FAIL() << "bowtie accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
    ASSERT_EQ(e.witness().size(), 2u);
  }
}

TEST(BuildLattice, RejectsCycleAndEmpty) {
  try {
    build_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAPartialOrder);
  }
  try {
    build_lattice({}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoBounds);
  }
  EXPECT_THROW(build_lattice({"a", "a"}, {}), Error);
  EXPECT_THROW(build_lattice({"a"}, {{"a", "z"}}), Error);
}

TEST(BuildLattice, TablesMatchOracle) {
  for (const auto& l : corpus()) {
    const auto le = oracle::order_from_covers(l);
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        ASSERT_EQ(l.leq(a, b), le[a][b]);
        ASSERT_EQ(l.join(a, b), oracle::lub(le, a, b));
        ASSERT_EQ(l.meet(a, b), oracle::glb(le, a, b));
      }
  }
}

TEST(Irreducibles, Examples) {
  auto c2 = fixtures::c2();
  EXPECT_EQ(names_of(c2, irreducibles(c2).join_irreducible), std::vector<std::string>{"1"});
  EXPECT_EQ(names_of(c2, irreducibles(c2).meet_irreducible), std::vector<std::string>{"0"});
  auto n5 = fixtures::n5();
  const std::vector<std::string> abc{"a", "b", "c"};
  EXPECT_EQ(names_of(n5, irreducibles(n5).join_irreducible), abc);
  EXPECT_EQ(names_of(n5, irreducibles(n5).meet_irreducible), abc);
  auto b2 = fixtures::b2();
  const std::vector<std::string> pq{"p", "q"};
  EXPECT_EQ(names_of(b2, irreducibles(b2).join_irreducible), pq);
  EXPECT_EQ(names_of(b2, irreducibles(b2).meet_irreducible), pq);
}

TEST(Irreducibles, MatchOracle) {
  for (const auto& l : corpus()) {
    const auto le = oracle::order_from_covers(l);
    const auto j = oracle::join_irreducibles(le, l.bot());
    const auto m = oracle::meet_irreducibles(le, l.top());
    const auto irr = irreducibles(l);
    for (std::size_t a = 0; a < l.size(); ++a) {
      ASSERT_EQ(irr.join_irreducible.test(a), j[a]);
      ASSERT_EQ(irr.meet_irreducible.test(a), m[a]);
    }
  }
}

TEST(FiltersIdeals, CountsMatchSubsetEnumeration) {
  for (const auto& [name, l] : fixtures::lattices()) {
    const auto le = oracle::order_from_covers(l);
    const auto fi = filters_ideals(l);
    EXPECT_EQ(fi.filters.size(), oracle::filters(le).size()) << name;
    EXPECT_EQ(fi.ideals.size(), oracle::ideals(le).size()) << name;
    for (const auto& f : fi.filters) {
      oracle::Set s(l.size());
      for_each_bit(f, [&](std::size_t i) { s[i] = true; });
      const auto all = oracle::filters(le);
      EXPECT_NE(std::find(all.begin(), all.end(), s), all.end()) << name;
    }
  }
  EXPECT_EQ(filters_ideals(fixtures::n5()).filters.size(), 5u);
  EXPECT_EQ(filters_ideals(fixtures::m3()).ideals.size(), 5u);
}

LatticeEmbedding c2_into_c3() {
  const auto c2 = fixtures::c2();
  const auto c3 = fixtures::c3();
  return {c2, c3, {c3.index("0"), c3.index("1")}};
}

TEST(Dense, Examples) {
  EXPECT_TRUE(check_dense(identity_embedding(fixtures::n5())).verdict());
  const auto r = check_dense(c2_into_c3());
  ASSERT_FALSE(r.verdict());
  EXPECT_EQ(r.witnesses()[0].elements, std::vector<std::string>{"m"});
}

// Density by brute force: every target element is a join of meets of image
// subsets and a meet of joins of image subsets.
bool dense_oracle(const LatticeEmbedding& e) {
  const auto le = oracle::order_from_covers(e.target);
  const std::size_t n = e.target.size();
  oracle::Set meets(n), joins(n);
  for (const auto& s : oracle::all_subsets(e.source.size())) {
    oracle::Set img(n);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) img[e.map[i]] = true;
    meets[oracle::meet_of(le, img, e.target.top())] = true;
    joins[oracle::join_of(le, img, e.target.bot())] = true;
  }
  std::set<std::size_t> jm, mj;
  for (const auto& s : oracle::all_subsets(n)) {
    if (oracle::subset(s, meets)) jm.insert(oracle::join_of(le, s, e.target.bot()));
    if (oracle::subset(s, joins)) mj.insert(oracle::meet_of(le, s, e.target.top()));
  }
  return jm.size() == n && mj.size() == n;
}

TEST(Dense, MatchesOracleOnChainEmbeddings) {
  EXPECT_FALSE(dense_oracle(c2_into_c3()));
  EXPECT_TRUE(dense_oracle(identity_embedding(fixtures::n5())));
  // Chains C2 into C4 at every strictly monotone position pair.
  const auto c4 = build_lattice({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}});
  const auto c3 = fixtures::c3();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      for (std::size_t c = b + 1; c < 4; ++c) {
        LatticeEmbedding e{c3, c4, {a, b, c}};
        EXPECT_EQ(check_dense(e).verdict(), dense_oracle(e)) << a << b << c;
      }
}

TEST(Compact, Examples) {
  EXPECT_TRUE(check_compact(identity_embedding(fixtures::c2())).verdict());
  EXPECT_TRUE(check_compact(c2_into_c3()).verdict());
  EXPECT_TRUE(check_compact(identity_embedding(fixtures::m3())).verdict());
}

TEST(Embedding, ValidateRejectsNonHomomorphism) {
  const auto b2 = fixtures::b2();
  const auto c3 = fixtures::c3();
  // p, q both to m breaks injectivity.
  LatticeEmbedding e{b2, c3, {c3.index("0"), c3.index("m"), c3.index("m"), c3.index("1")}};
  EXPECT_FALSE(validate_embedding(e).verdict());
  EXPECT_TRUE(validate_embedding(c2_into_c3()).verdict());
}

TEST(Distributive, Examples) {
  EXPECT_TRUE(is_distributive(fixtures::b2()).verdict());
  const auto n5 = is_distributive(fixtures::n5());
  ASSERT_FALSE(n5.verdict());
  EXPECT_EQ(n5.witnesses()[0].elements.size(), 3u);
  const auto m3 = is_distributive(fixtures::m3());
  ASSERT_FALSE(m3.verdict());
  const auto& w = m3.witnesses()[0].elements;
  ASSERT_EQ(w.size(), 3u);
  const std::set<std::string> atoms{"a", "b", "c"};
  EXPECT_EQ(std::set<std::string>(w.begin(), w.end()), atoms);
}

TEST(Distributive, MatchesOracle) {
  for (const auto& l : corpus())
    EXPECT_EQ(is_distributive(l).verdict(), oracle::distributive(oracle::order_from_covers(l)));
}

TEST(Laws, HoldOnCorpus) {
  for (const auto& l : corpus()) {
    const auto r = laws::lattice_laws(l);
    EXPECT_TRUE(r.verdict()) << (r.witnesses().empty() ? "" : r.witnesses()[0].condition);
  }
}

TEST(Perfect, FiniteLatticesArePerfect) {
  for (const auto& l : corpus()) EXPECT_TRUE(check_perfect(l).verdict());
}

}  // namespace
}  // namespace tirs
