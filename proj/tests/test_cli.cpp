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

#include <sstream>

#include "tirs/cli.hpp"
#include "tirs/errors.hpp"
#include "tirs/fixtures.hpp"
#include "tirs/generators.hpp"
#include "tirs/io.hpp"
#include "tirs/ploscica.hpp"

#ifndef TIRS_FIXTURE_DIR
#error "TIRS_FIXTURE_DIR must be defined"
#endif

namespace tirs {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TIRS_FIXTURE_DIR) + "/" + name; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

TEST(Cli, DualN5) {
  const auto r = cli({"dual", fixture("n5.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["vertices"].size(), 3u);
  EXPECT_EQ(doc["edges"].size(), 5u);
  EXPECT_EQ(doc["vertex_meta"]["p0"]["ones"], (Json{"a", "c", "1"}));
}

TEST(Cli, RoundtripM3) {
  const auto r = cli({"roundtrip", fixture("m3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["isomorphism"].size(), 5u);
}

TEST(Cli, CheckNT4FailsTi) {
  const auto r = cli({"check", fixture("nt4.json")});
  ASSERT_EQ(r.code, 1);
  const auto doc = Json::parse(r.out);
  EXPECT_FALSE(doc["Ti"]["verdict"].get<bool>());
  EXPECT_EQ(doc["Ti"]["witnesses"][0]["elements"], (Json{"x", "y"}));
}

TEST(Cli, CheckFrames) {
  EXPECT_EQ(cli({"check", fixture("f2x1.json")}).code, 1);
  EXPECT_EQ(cli({"check", fixture("truncated3.json")}).code, 0);
  EXPECT_EQ(cli({"check", fixture("diag3.json")}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"dual", fixture("missing.json")}).code, 2);
  EXPECT_EQ(cli({"check", fixture("bowtie.json")}).code, 2);
  EXPECT_EQ(cli({"dual", fixture("nt4.json")}).code, 2);
  EXPECT_EQ(cli({"gen", "--kind", "lattice", "--size", "4"}).code, 2);
  EXPECT_EQ(cli({"gen", "--kind", "nonsense", "--size", "4", "--seed", "1"}).code, 2);
  EXPECT_EQ(cli({"suite"}).code, 2);
  EXPECT_EQ(cli({"canext", "--method", "other", fixture("c2.json")}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, NotTiRSIsAPropertyFailure) {
  const auto r = cli({"roundtrip", fixture("nt4.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["error"], "NotTiRS");
}

TEST(Cli, ExportDot) {
  const auto loop = cli({"export-dot", fixture("loop1.json")});
  ASSERT_EQ(loop.code, 0);
  EXPECT_EQ(count(loop.out, "->"), 0u);
  EXPECT_EQ(count(cli({"export-dot", "--include-loops", fixture("loop1.json")}).out, "->"), 1u);
  EXPECT_EQ(cli({"export-dot", fixture("n5.json")}).code, 2);
  const auto hasse = cli({"export-dot", "--hasse", fixture("n5.json")});
  ASSERT_EQ(hasse.code, 0);
  EXPECT_EQ(count(hasse.out, "->"), 5u);
  EXPECT_EQ(count(hasse.out, ";\n") - count(hasse.out, "->") - 1, 5u);  // nodes
  const auto frame = cli({"export-dot", fixture("diag3.json")});
  EXPECT_EQ(count(frame.out, "->"), 3u);
}

TEST(Cli, DualGraphDotHasTwoArcs) {
  const auto d = dual_graph(fixtures::n5());
  const auto dot = to_dot(d.graph);
  EXPECT_EQ(count(dot, "->"), 2u);
  EXPECT_NE(dot.find("\"p1\" -> \"p2\""), std::string::npos);
  EXPECT_NE(dot.find("\"p2\" -> \"p0\""), std::string::npos);
}

TEST(Cli, CanextBoth) {
  const auto r = cli({"canext", "--method", "both", fixture("n5.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["verdict"].get<bool>());
}

TEST(Cli, Pti) {
  EXPECT_EQ(cli({"check-pti", fixture("n5.json")}).code, 0);
  EXPECT_EQ(cli({"check-pti", "--frame", fixture("m3.json")}).code, 0);
  const auto r = cli({"check-pti", fixture("diag3.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["pairs"][0]["status"], "satisfied");
}

TEST(Cli, Morphisms) {
  const auto c2 = fixture("chain2.json"), c3 = fixture("chain3.json");
  EXPECT_EQ(cli({"check-morphism", c2, c3, fixture("chain2_to_chain3.json")}).code, 0);
  const auto bad = cli({"check-morphism", c3, c2, fixture("chain3_to_chain2_bad.json")});
  ASSERT_EQ(bad.code, 1);
  EXPECT_EQ(Json::parse(bad.out)["witnesses"][0]["condition"], "(i)");
  EXPECT_EQ(cli({"check-naturality", c2, c3, fixture("chain2_to_chain3.json")}).code, 0);
  const auto rm = cli({"rho-mor", c2, c3, fixture("chain2_to_chain3.json")});
  ASSERT_EQ(rm.code, 0) << rm.err;
  EXPECT_TRUE(Json::parse(rm.out)["morphism"].contains("map1"));
  EXPECT_EQ(cli({"rho-mor", c3, c2, fixture("chain3_to_chain2_bad.json")}).code, 1);
}

TEST(Cli, GenIsDeterministicAndParses) {
  const std::vector<std::string> args{"gen", "--kind", "lattice", "--size", "6", "--seed", "3",
                                      "--count", "4"};
  const auto a = cli(args), b = cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = Json::parse(a.out);
  ASSERT_EQ(doc.size(), 4u);
  for (const auto& item : doc) EXPECT_EQ(lattice_from_json(item).size(), 6u);
  const auto ex = cli({"gen", "--kind", "poset", "--size", "3", "--exhaustive"});
  EXPECT_EQ(Json::parse(ex.out).size(), 5u);
}

TEST(Cli, Suite) {
  const auto r = cli({"suite", "--seed", "5", "--size", "4"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = Json::parse(r.out);
  std::vector<std::string> tasks;
  for (const auto& t : doc["tasks"]) tasks.push_back(t["task"]);
  EXPECT_EQ(tasks, (std::vector<std::string>{"core-lattice", "functors", "galois", "generators",
                                             "ploscica", "pti", "structures"}));
}

// parse(serialize(x)) == x for each structure kind.
TEST(Io, RoundTrips) {
  for (const auto& [name, l] : fixtures::lattices()) EXPECT_EQ(lattice_from_json(to_json(l)), l);
  for (const auto& g : gen_tirs_graph({GenKind::TiRSGraph, 5, 2, 6, false}))
    EXPECT_EQ(graph_from_json(to_json(g)), g);
  for (const auto& f : gen_rs_frame({GenKind::RSFrame, 4, 2, 6, false}))
    EXPECT_EQ(frame_from_json(to_json(f)), f);
  const auto g = fixtures::nt4();
  const GraphMorphism id{g, g, {0, 1, 2, 3}};
  EXPECT_EQ(graph_morphism_from_json(to_json(id), g, g).map, id.map);
  const auto f = fixtures::diagonal3();
  const FrameMorphism fid{f, f, {0, 1, 2}, {0, 1, 2}};
  const auto back = frame_morphism_from_json(to_json(fid), f, f);
  EXPECT_EQ(back.map1, fid.map1);
  EXPECT_EQ(back.map2, fid.map2);
}

TEST(Io, DetectKind) {
  EXPECT_EQ(detect_kind(to_json(fixtures::c2())), StructureKind::Lattice);
  EXPECT_EQ(detect_kind(to_json(fixtures::nt4())), StructureKind::Graph);
  EXPECT_EQ(detect_kind(to_json(fixtures::f2x1())), StructureKind::Frame);
  EXPECT_THROW(detect_kind(Json::object()), Error);
  EXPECT_THROW(lattice_from_json(Json{{"elements", {"0", "1"}}, {"covers", {{"0", "1"}}}, {"leq", {{"1", "0"}}}}), Error);
}

}  // namespace
}  // namespace tirs
