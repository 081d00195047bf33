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

#include "tirs/io.hpp"

#include <fstream>
#include <sstream>

#include "tirs/errors.hpp"

namespace tirs {

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Lattice: return "lattice";
    case StructureKind::Graph: return "graph";
    case StructureKind::Frame: return "frame";
    case StructureKind::GraphMorphism: return "graph-morphism";
    case StructureKind::FrameMorphism: return "frame-morphism";
  }
  return "?";
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::InvalidInput, what);
}

std::vector<std::string> string_list(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) schema_error(std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : doc[key]) {
    if (!v.is_string()) schema_error(std::string("non-string entry in '") + key + "'");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& doc, const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!doc.contains(key)) return out;
  if (!doc[key].is_array()) schema_error(std::string("'") + key + "' must be an array");
  for (const auto& p : doc[key]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      schema_error(std::string("entries of '") + key + "' must be [string, string]");
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

Json names_of(const Bits& set, const std::vector<std::string>& names) {
  Json out = Json::array();
  for_each_bit(set, [&](std::size_t i) { out.push_back(names[i]); });
  return out;
}

std::vector<std::size_t> map_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs,
                                        const std::vector<std::string>& from,
                                        const std::vector<std::string>& to, const char* key) {
  auto lookup = [](const std::vector<std::string>& names, const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    throw Error(ErrorKind::InvalidInput, "unknown point '" + n + "' in morphism", {n});
  };
  std::vector<std::size_t> map(from.size(), Bits::npos);
  for (const auto& [a, b] : pairs) {
    auto i = lookup(from, a);
    if (map[i] != Bits::npos)
      throw Error(ErrorKind::InvalidInput, "point '" + a + "' mapped twice", {a});
    map[i] = lookup(to, b);
  }
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] == Bits::npos)
      throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' misses point '" + from[i] + "'",
                  {from[i]});
  return map;
}

Json map_to_pairs(const std::vector<std::size_t>& map, const std::vector<std::string>& from,
                  const std::vector<std::string>& to) {
  Json out = Json::array();
  for (std::size_t i = 0; i < map.size(); ++i) out.push_back({from[i], to[map[i]]});
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

StructureKind detect_kind(const Json& doc) {
  if (!doc.is_object()) schema_error("structure document must be a JSON object");
  if (doc.contains("elements")) return StructureKind::Lattice;
  if (doc.contains("vertices")) return StructureKind::Graph;
  if (doc.contains("x1")) return StructureKind::Frame;
  if (doc.contains("map1")) return StructureKind::FrameMorphism;
  if (doc.contains("map")) return StructureKind::GraphMorphism;
  schema_error("cannot determine structure kind");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, "malformed JSON in '" + path.string() + "': " + e.what());
  }
}

Json to_json(const FiniteLattice& l) {
  Json doc;
  doc["elements"] = l.names();
  doc["covers"] = Json::array();
  for (auto [a, b] : l.covers()) doc["covers"].push_back({l.name(a), l.name(b)});
  doc["leq"] = Json::array();
  for (auto [a, b] : l.order_pairs()) doc["leq"].push_back({l.name(a), l.name(b)});
  return doc;
}

FiniteLattice lattice_from_json(const Json& doc) {
  auto l = build_lattice(string_list(doc, "elements"), pair_list(doc, "covers"));
  if (doc.contains("leq")) {
    std::size_t count = 0;
    for (const auto& [a, b] : pair_list(doc, "leq")) {
      if (!l.leq(l.index(a), l.index(b)))
        throw Error(ErrorKind::InvalidInput, "'leq' disagrees with the covers", {a, b});
      ++count;
    }
    if (count != l.order_pairs().size())
      throw Error(ErrorKind::InvalidInput, "'leq' is not the closure of the covers");
  }
  return l;
}

Json to_json(const Graph& g) {
  Json doc;
  doc["vertices"] = g.names();
  doc["edges"] = Json::array();
  for (auto [x, y] : g.edges()) doc["edges"].push_back({g.name(x), g.name(y)});
  return doc;
}

Graph graph_from_json(const Json& doc) {
  auto names = string_list(doc, "vertices");
  Graph shell(names, {});
  std::vector<IndexPair> edges;
  for (const auto& [a, b] : pair_list(doc, "edges")) edges.emplace_back(shell.index(a), shell.index(b));
  return Graph(std::move(names), edges);
}

Json to_json(const DualGraph& d, const FiniteLattice& l) {
  Json doc = to_json(d.graph);
  Json meta = Json::object();
  for (std::size_t i = 0; i < d.pairs.size(); ++i)
    meta[d.graph.name(i)] = {{"ones", names_of(d.pairs[i].ones, l.names())},
                             {"zeros", names_of(d.pairs[i].zeros, l.names())}};
  doc["vertex_meta"] = meta;
  return doc;
}

Json to_json(const Frame& f) {
  Json doc;
  doc["x1"] = f.names1();
  doc["x2"] = f.names2();
  doc["r"] = Json::array();
  for (auto [x, y] : f.pairs()) doc["r"].push_back({f.name1(x), f.name2(y)});
  return doc;
}

Frame frame_from_json(const Json& doc) {
  auto x1 = string_list(doc, "x1");
  auto x2 = string_list(doc, "x2");
  Frame shell(x1, x2, {});
  std::vector<IndexPair> rel;
  for (const auto& [a, b] : pair_list(doc, "r")) rel.emplace_back(shell.index1(a), shell.index2(b));
  return Frame(std::move(x1), std::move(x2), rel);
}

Json to_json(const GraphMorphism& m) {
  return Json{{"map", map_to_pairs(m.map, m.source.names(), m.target.names())}};
}

GraphMorphism graph_morphism_from_json(const Json& doc, const Graph& source, const Graph& target) {
  if (!doc.contains("map")) schema_error("graph morphism needs 'map'");
  return {source, target, map_from_pairs(pair_list(doc, "map"), source.names(), target.names(), "map")};
}

Json to_json(const FrameMorphism& m) {
  return Json{{"map1", map_to_pairs(m.map1, m.source.names1(), m.target.names1())},
              {"map2", map_to_pairs(m.map2, m.source.names2(), m.target.names2())}};
}

FrameMorphism frame_morphism_from_json(const Json& doc, const Frame& source, const Frame& target) {
  if (!doc.contains("map1") || !doc.contains("map2")) schema_error("frame morphism needs 'map1' and 'map2'");
  return {source, target,
          map_from_pairs(pair_list(doc, "map1"), source.names1(), target.names1(), "map1"),
          map_from_pairs(pair_list(doc, "map2"), source.names2(), target.names2(), "map2")};
}

Json to_json(const GaloisLattice& gl) {
  Json doc = to_json(gl.lattice);
  doc["closed_sets"] = Json::array();
  for (const auto& s : gl.closed_sets) doc["closed_sets"].push_back(names_of(s, gl.base.names1()));
  doc["j_infty"] = names_of(gl.j_infty, gl.lattice.names());
  doc["m_infty"] = names_of(gl.m_infty, gl.lattice.names());
  return doc;
}

Json to_json(const LatticeEmbedding& e) {
  return Json{{"map", map_to_pairs(e.map, e.source.names(), e.target.names())}};
}

Json to_json(const CheckReport& r) {
  Json doc;
  doc["verdict"] = r.verdict();
  doc["witnesses"] = Json::array();
  for (const auto& w : r.witnesses())
    doc["witnesses"].push_back({{"condition", w.condition}, {"elements", w.elements}});
  return doc;
}

Json to_json(const ConditionReport& r) {
  return Json{{"reflexive", to_json(r.reflexive)},
              {"S", to_json(r.separation)},
              {"R", to_json(r.reduction)},
              {"Ti", to_json(r.ti)},
              {"rs", r.is_rs()},
              {"tirs", r.is_tirs()}};
}

namespace {

template <class Name1, class Name2>
Json pti_json(const PTiReport& r, Name1 n1, Name2 n2, const char* wk, const char* zk) {
  Json doc = to_json(r.report);
  doc["pairs"] = Json::array();
  for (const auto& p : r.pairs) {
    Json e{{"x", n1(p.x)}, {"y", n2(p.y)}, {"status", p.satisfied() ? "satisfied" : "unsatisfiable"}};
    if (p.satisfied()) {
      e[wk] = n1(*p.w);
      e[zk] = n2(*p.z);
    }
    doc["pairs"].push_back(e);
  }
  return doc;
}

}  // namespace

Json pti_to_json(const PTiReport& r, const FiniteLattice& l) {
  auto n = [&](std::size_t i) { return l.name(i); };
  return pti_json(r, n, n, "w", "z");
}

Json pti_to_json(const PTiReport& r, const Frame& f) {
  return pti_json(r, [&](std::size_t i) { return f.name1(i); },
                  [&](std::size_t i) { return f.name2(i); }, "p", "q");
}

std::string to_dot(const Graph& g, bool include_loops) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& n : g.names()) out << "  " << quoted(n) << ";\n";
  for (auto [x, y] : g.edges())
    if (x != y || include_loops) out << "  " << quoted(g.name(x)) << " -> " << quoted(g.name(y)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Frame& f) {
  std::ostringstream out;
  out << "digraph F {\n  rankdir=LR;\n";
  out << "  subgraph cluster_x1 {\n    label=\"X1\";\n";
  for (const auto& n : f.names1()) out << "    " << quoted("1:" + n) << " [label=" << quoted(n) << "];\n";
  out << "  }\n  subgraph cluster_x2 {\n    label=\"X2\";\n";
  for (const auto& n : f.names2()) out << "    " << quoted("2:" + n) << " [label=" << quoted(n) << "];\n";
  out << "  }\n";
  for (auto [x, y] : f.pairs())
    out << "  " << quoted("1:" + f.name1(x)) << " -> " << quoted("2:" + f.name2(y)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const FiniteLattice& l) {
  std::ostringstream out;
  out << "digraph L {\n  rankdir=BT;\n";
  for (const auto& n : l.names()) out << "  " << quoted(n) << ";\n";
  for (auto [a, b] : l.covers()) out << "  " << quoted(l.name(a)) << " -> " << quoted(l.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tirs
