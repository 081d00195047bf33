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

#include "tirs/functors.hpp"

#include <functional>
#include <string>
#include <tuple>

#include "tirs/errors.hpp"

namespace tirs {

namespace {

// Groups indices by equal keys; returns (index -> class, class -> representative).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> classes_by(
    const std::vector<Bits>& keys) {
  std::vector<std::size_t> cls(keys.size()), reps;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::size_t c = 0;
    while (c < reps.size() && keys[reps[c]] != keys[i]) ++c;
    if (c == reps.size()) reps.push_back(i);
    cls[i] = c;
  }
  return {cls, reps};
}

void require_tirs(const ConditionReport& rep, const char* what) {
  if (rep.is_tirs()) return;
  const auto cond = rep.first_failure();
  const CheckReport* failing = cond == "reflexive" ? &rep.reflexive
                               : cond == "S"       ? &rep.separation
                               : cond == "R"       ? &rep.reduction
                                                   : &rep.ti;
  throw Error(ErrorKind::NotTiRS, std::string(what) + " fails condition " + cond,
              failing->witnesses().front().elements);
}

bool maps_into(const std::vector<std::size_t>& map, std::size_t domain, std::size_t codomain) {
  if (map.size() != domain) return false;
  for (auto v : map)
    if (v >= codomain) return false;
  return true;
}

bool is_bijection(const std::vector<std::size_t>& map, std::size_t n) {
  if (!maps_into(map, n, n)) return false;
  std::vector<bool> hit(n, false);
  for (auto v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

RhoResult rho(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Bits> rows, cols;
  for (std::size_t x = 0; x < n; ++x) {
    rows.push_back(g.row(x));
    cols.push_back(g.col(x));
  }
  auto [class1, reps1] = classes_by(rows);
  auto [class2, reps2] = classes_by(cols);
  std::vector<std::string> x1, x2;
  for (auto r : reps1) x1.push_back(g.name(r));
  for (auto r : reps2) x2.push_back(g.name(r));
  std::vector<Bits> rel(reps1.size(), Bits(reps2.size()));
  for (std::size_t a = 0; a < reps1.size(); ++a)
    for (std::size_t b = 0; b < reps2.size(); ++b)
      if (!g.has_edge(reps1[a], reps2[b])) rel[a].set(b);
  return {Frame::from_rows(std::move(x1), std::move(x2), std::move(rel)), std::move(class1),
          std::move(class2)};
}

std::optional<std::size_t> GrResult::vertex_of(std::size_t x, std::size_t y) const {
  for (std::size_t v = 0; v < pairs.size(); ++v)
    if (pairs[v] == IndexPair{x, y}) return v;
  return std::nullopt;
}

GrResult gr(const Frame& f) {
  GrResult out;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < f.size1(); ++x)
    for (std::size_t y = 0; y < f.size2(); ++y)
      if (in_h(f, x, y)) {
        out.pairs.emplace_back(x, y);
        names.push_back("(" + f.name1(x) + "," + f.name2(y) + ")");
      }
  const std::size_t n = out.pairs.size();
  std::vector<Bits> rows(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!f.related(out.pairs[a].first, out.pairs[b].second)) rows[a].set(b);
  out.graph = Graph::from_rows(std::move(names), std::move(rows));
  return out;
}

bool is_graph_isomorphism(const GraphMorphism& m) {
  const std::size_t n = m.source.size();
  if (m.target.size() != n || !is_bijection(m.map, n)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (m.source.has_edge(a, b) != m.target.has_edge(m.map[a], m.map[b])) return false;
  return true;
}

bool is_frame_isomorphism(const FrameMorphism& m) {
  const auto& s = m.source;
  const auto& t = m.target;
  if (s.size1() != t.size1() || s.size2() != t.size2()) return false;
  if (!is_bijection(m.map1, s.size1()) || !is_bijection(m.map2, s.size2())) return false;
  for (std::size_t x = 0; x < s.size1(); ++x)
    for (std::size_t y = 0; y < s.size2(); ++y)
      if (s.related(x, y) != t.related(m.map1[x], m.map2[y])) return false;
  return true;
}

GraphMorphism alpha(const Graph& g) {
  require_tirs(check_graph(g), "graph");
  const auto r = rho(g);
  const auto back = gr(r.frame);
  GraphMorphism m{g, back.graph, {}};
  for (std::size_t x = 0; x < g.size(); ++x) {
    auto v = back.vertex_of(r.class1[x], r.class2[x]);
    if (!v)
      throw Error(ErrorKind::IsoVerificationFailed, "([x]1, [x]2) is not an H-pair", {g.name(x)});
    m.map.push_back(*v);
  }
  if (!is_graph_isomorphism(m))
    throw Error(ErrorKind::IsoVerificationFailed, "alpha is not a graph isomorphism");
  return m;
}

FrameMorphism beta(const Frame& f) {
  require_tirs(check_frame(f), "frame");
  const auto g = gr(f);
  const auto r = rho(g.graph);
  FrameMorphism m{f, r.frame, {}, {}};
  for (std::size_t x = 0; x < f.size1(); ++x) {
    std::optional<std::size_t> cls;
    for (std::size_t y = 0; y < f.size2(); ++y) {
      auto v = g.vertex_of(x, y);
      if (!v) continue;
      if (cls && *cls != r.class1[*v])
        throw Error(ErrorKind::IsoVerificationFailed, "beta1 is not well defined", {f.name1(x)});
      cls = r.class1[*v];
    }
    if (!cls) throw Error(ErrorKind::IsoVerificationFailed, "no H-pair through point", {f.name1(x)});
    m.map1.push_back(*cls);
  }
  for (std::size_t y = 0; y < f.size2(); ++y) {
    std::optional<std::size_t> cls;
    for (std::size_t x = 0; x < f.size1(); ++x) {
      auto v = g.vertex_of(x, y);
      if (!v) continue;
      if (cls && *cls != r.class2[*v])
        throw Error(ErrorKind::IsoVerificationFailed, "beta2 is not well defined", {f.name2(y)});
      cls = r.class2[*v];
    }
    if (!cls) throw Error(ErrorKind::IsoVerificationFailed, "no H-pair through point", {f.name2(y)});
    m.map2.push_back(*cls);
  }
  if (!is_frame_isomorphism(m))
    throw Error(ErrorKind::IsoVerificationFailed, "beta is not a frame isomorphism");
  return m;
}

std::optional<std::vector<std::size_t>> graph_iso(const Graph& a, const Graph& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.edge_count() != b.edge_count()) return std::nullopt;
  auto signature = [](const Graph& g, std::size_t v) {
    return std::tuple{g.row(v).count(), g.col(v).count(), g.has_edge(v, v)};
  };
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || signature(a, i) != signature(b, c)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a.has_edge(i, j) == b.has_edge(c, map[j]) && a.has_edge(j, i) == b.has_edge(map[j], c);
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> frame_iso(
    const Frame& a, const Frame& b) {
  const std::size_t n1 = a.size1(), n2 = a.size2();
  if (b.size1() != n1 || b.size2() != n2 || a.pairs().size() != b.pairs().size())
    return std::nullopt;
  std::vector<std::size_t> m1(n1), m2(n2);
  std::vector<bool> used1(n1, false), used2(n2, false);

  std::function<bool(std::size_t)> extend2 = [&](std::size_t y) {
    if (y == n2) return true;
    for (std::size_t c = 0; c < n2; ++c) {
      if (used2[c] || a.col(y).count() != b.col(c).count()) continue;
      bool ok = true;
      for (std::size_t x = 0; x < n1 && ok; ++x) ok = a.related(x, y) == b.related(m1[x], c);
      if (!ok) continue;
      m2[y] = c;
      used2[c] = true;
      if (extend2(y + 1)) return true;
      used2[c] = false;
    }
    return false;
  };
  std::function<bool(std::size_t)> extend1 = [&](std::size_t x) {
    if (x == n1) return extend2(0);
    for (std::size_t c = 0; c < n1; ++c) {
      if (used1[c] || a.row(x).count() != b.row(c).count()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < x && ok; ++j)
        ok = (a.row(x) & a.row(j)).count() == (b.row(c) & b.row(m1[j])).count();
      if (!ok) continue;
      m1[x] = c;
      used1[c] = true;
      if (extend1(x + 1)) return true;
      used1[c] = false;
    }
    return false;
  };
  if (!extend1(0)) return std::nullopt;
  return std::pair{m1, m2};
}

std::optional<std::vector<std::size_t>> lattice_iso(const FiniteLattice& a,
                                                    const FiniteLattice& b) {
  return graph_iso(order_graph(a), order_graph(b));
}

CheckReport validate_graph_morphism(const GraphMorphism& m, WitnessMode mode) {
  CheckReport r;
  const auto& s = m.source;
  const auto& t = m.target;
  if (!maps_into(m.map, s.size(), t.size())) {
    r.add("map", {});
    return r;
  }
  const auto& phi = m.map;
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n && r.wants_more(mode); ++a)
    for (std::size_t b = 0; b < n && r.wants_more(mode); ++b)
      if (s.has_edge(a, b) && !t.has_edge(phi[a], phi[b])) r.add("(i)", {s.name(a), s.name(b)});
  for (std::size_t a = 0; a < n && r.wants_more(mode); ++a)
    for (std::size_t b = 0; b < n && r.wants_more(mode); ++b)
      if (s.row(a).is_subset_of(s.row(b)) && !t.row(phi[a]).is_subset_of(t.row(phi[b])))
        r.add("(ii)", {s.name(a), s.name(b)});
  for (std::size_t a = 0; a < n && r.wants_more(mode); ++a)
    for (std::size_t b = 0; b < n && r.wants_more(mode); ++b)
      if (s.col(a).is_subset_of(s.col(b)) && !t.col(phi[a]).is_subset_of(t.col(phi[b])))
        r.add("(iii)", {s.name(a), s.name(b)});
  return r;
}

CheckReport validate_frame_morphism(const FrameMorphism& m, WitnessMode mode) {
  CheckReport r;
  const auto& s = m.source;
  const auto& t = m.target;
  if (!maps_into(m.map1, s.size1(), t.size1()) || !maps_into(m.map2, s.size2(), t.size2())) {
    r.add("map", {});
    return r;
  }
  const auto& p1 = m.map1;
  const auto& p2 = m.map2;
  for (std::size_t x = 0; x < s.size1() && r.wants_more(mode); ++x)
    for (std::size_t y = 0; y < s.size2() && r.wants_more(mode); ++y)
      if (t.related(p1[x], p2[y]) && !s.related(x, y)) r.add("(i)", {s.name1(x), s.name2(y)});
  for (std::size_t x = 0; x < s.size1() && r.wants_more(mode); ++x)
    for (std::size_t w = 0; w < s.size1() && r.wants_more(mode); ++w)
      if (s.row(x).is_subset_of(s.row(w)) && !t.row(p1[x]).is_subset_of(t.row(p1[w])))
        r.add("(ii)", {s.name1(x), s.name1(w)});
  for (std::size_t y = 0; y < s.size2() && r.wants_more(mode); ++y)
    for (std::size_t z = 0; z < s.size2() && r.wants_more(mode); ++z)
      if (s.col(y).is_subset_of(s.col(z)) && !t.col(p2[y]).is_subset_of(t.col(p2[z])))
        r.add("(iii)", {s.name2(y), s.name2(z)});
  for (std::size_t x = 0; x < s.size1() && r.wants_more(mode); ++x)
    for (std::size_t y = 0; y < s.size2() && r.wants_more(mode); ++y)
      if (in_h(s, x, y) && !in_h(t, p1[x], p2[y])) r.add("(iv)", {s.name1(x), s.name2(y)});
  return r;
}

GraphMorphism identity_morphism(const Graph& g) {
  GraphMorphism m{g, g, {}};
  for (std::size_t x = 0; x < g.size(); ++x) m.map.push_back(x);
  return m;
}

FrameMorphism identity_morphism(const Frame& f) {
  FrameMorphism m{f, f, {}, {}};
  for (std::size_t x = 0; x < f.size1(); ++x) m.map1.push_back(x);
  for (std::size_t y = 0; y < f.size2(); ++y) m.map2.push_back(y);
  return m;
}

GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second) {
  if (!(first.target == second.source))
    throw Error(ErrorKind::InvalidMorphism, "morphisms are not composable");
  GraphMorphism m{first.source, second.target, {}};
  for (auto v : first.map) m.map.push_back(second.map.at(v));
  return m;
}

FrameMorphism compose(const FrameMorphism& first, const FrameMorphism& second) {
  if (!(first.target == second.source))
    throw Error(ErrorKind::InvalidMorphism, "morphisms are not composable");
  FrameMorphism m{first.source, second.target, {}, {}};
  for (auto v : first.map1) m.map1.push_back(second.map1.at(v));
  for (auto v : first.map2) m.map2.push_back(second.map2.at(v));
  return m;
}

FrameMorphism rho_mor(const GraphMorphism& m) {
  if (auto pre = validate_graph_morphism(m); !pre)
    throw Error(ErrorKind::InvalidMorphism, "input is not a graph morphism (clause " +
                                                pre.witnesses().front().condition + ")",
                pre.witnesses().front().elements);
  const auto src = rho(m.source);
  const auto dst = rho(m.target);
  FrameMorphism out{src.frame, dst.frame, {}, {}};
  out.map1.assign(src.frame.size1(), Bits::npos);
  out.map2.assign(src.frame.size2(), Bits::npos);
  for (std::size_t x = 0; x < m.source.size(); ++x) {
    const auto c1 = dst.class1[m.map[x]];
    const auto c2 = dst.class2[m.map[x]];
    auto& slot1 = out.map1[src.class1[x]];
    auto& slot2 = out.map2[src.class2[x]];
    if ((slot1 != Bits::npos && slot1 != c1) || (slot2 != Bits::npos && slot2 != c2))
      throw Error(ErrorKind::NotWellDefined, "class map depends on the representative",
                  {m.source.name(x)});
    slot1 = c1;
    slot2 = c2;
  }
  if (auto post = validate_frame_morphism(out); !post)
    throw Error(ErrorKind::PostconditionFailed,
                "rho(phi) violates frame morphism clause " + post.witnesses().front().condition,
                post.witnesses().front().elements);
  return out;
}

GraphMorphism gr_mor(const FrameMorphism& m) {
  if (auto pre = validate_frame_morphism(m); !pre)
    throw Error(ErrorKind::InvalidMorphism, "input is not a frame morphism (clause " +
                                                pre.witnesses().front().condition + ")",
                pre.witnesses().front().elements);
  const auto src = gr(m.source);
  const auto dst = gr(m.target);
  GraphMorphism out{src.graph, dst.graph, {}};
  for (std::size_t v = 0; v < src.pairs.size(); ++v) {
    const auto [x, y] = src.pairs[v];
    auto image = dst.vertex_of(m.map1[x], m.map2[y]);
    if (!image)
      throw Error(ErrorKind::HNotPreserved, "image of an H-pair is not an H-pair",
                  {src.graph.name(v)});
    out.map.push_back(*image);
  }
  if (auto post = validate_graph_morphism(out); !post)
    throw Error(ErrorKind::PostconditionFailed,
                "gr(psi) violates graph morphism clause " + post.witnesses().front().condition,
                post.witnesses().front().elements);
  return out;
}

CheckReport check_naturality(const GraphMorphism& m, WitnessMode mode) {
  const auto ax = alpha(m.source);
  const auto ay = alpha(m.target);
  const auto grp = gr_mor(rho_mor(m));
  CheckReport r;
  if (!(grp.source == ax.target) || !(grp.target == ay.target)) {
    r.add("codomain", {});
    return r;
  }
  for (std::size_t x = 0; x < m.source.size() && r.wants_more(mode); ++x)
    if (grp.map[ax.map[x]] != ay.map[m.map[x]]) r.add("square", {m.source.name(x)});
  return r;
}

CheckReport check_naturality(const FrameMorphism& m, WitnessMode mode) {
  const auto bf = beta(m.source);
  const auto bg = beta(m.target);
  const auto rgp = rho_mor(gr_mor(m));
  CheckReport r;
  if (!(rgp.source == bf.target) || !(rgp.target == bg.target)) {
    r.add("codomain", {});
    return r;
  }
  for (std::size_t x = 0; x < m.source.size1() && r.wants_more(mode); ++x)
    if (rgp.map1[bf.map1[x]] != bg.map1[m.map1[x]]) r.add("square-X1", {m.source.name1(x)});
  for (std::size_t y = 0; y < m.source.size2() && r.wants_more(mode); ++y)
    if (rgp.map2[bf.map2[y]] != bg.map2[m.map2[y]]) r.add("square-X2", {m.source.name2(y)});
  return r;
}

}  // namespace tirs
