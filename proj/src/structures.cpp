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

#include "tirs/structures.hpp"

#include <unordered_set>

#include "tirs/errors.hpp"
#include "tirs/lattice.hpp"

namespace tirs {

namespace {

void require_distinct(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw Error(ErrorKind::InvalidInput, std::string("duplicate ") + what + " '" + n + "'", {n});
}

std::optional<std::size_t> find_name(const std::vector<std::string>& names,
                                     std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::size_t index_or_throw(const std::vector<std::string>& names, std::string_view name,
                           const char* what) {
  if (auto i = find_name(names, name)) return *i;
  throw Error(ErrorKind::InvalidInput, std::string("unknown ") + what + " '" + std::string(name) + "'",
              {std::string(name)});
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices, const std::vector<IndexPair>& edges)
    : names_(std::move(vertices)) {
  require_distinct(names_, "vertex");
  const std::size_t n = names_.size();
  rows_.assign(n, Bits(n));
  for (auto [x, y] : edges) {
    if (x >= n || y >= n) throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    rows_[x].set(y);
  }
  index_columns();
}

Graph Graph::from_rows(std::vector<std::string> vertices, std::vector<Bits> rows) {
  Graph g;
  g.names_ = std::move(vertices);
  require_distinct(g.names_, "vertex");
  if (rows.size() != g.names_.size())
    throw Error(ErrorKind::InvalidInput, "row count does not match vertex count");
  for (auto& r : rows)
    if (r.size() != g.names_.size()) throw Error(ErrorKind::InvalidInput, "row width mismatch");
  g.rows_ = std::move(rows);
  g.index_columns();
  return g;
}

void Graph::index_columns() {
  const std::size_t n = names_.size();
  cols_.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for_each_bit(rows_[x], [&](std::size_t y) { cols_[y].set(x); });
}

std::optional<std::size_t> Graph::find(std::string_view name) const {
  return find_name(names_, name);
}

std::size_t Graph::index(std::string_view name) const {
  return index_or_throw(names_, name, "vertex");
}

std::vector<IndexPair> Graph::edges() const {
  std::vector<IndexPair> out;
  for (std::size_t x = 0; x < size(); ++x)
    for_each_bit(rows_[x], [&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

Frame::Frame(std::vector<std::string> x1, std::vector<std::string> x2,
             const std::vector<IndexPair>& relation)
    : x1_(std::move(x1)), x2_(std::move(x2)) {
  require_distinct(x1_, "X1 point");
  require_distinct(x2_, "X2 point");
  rows_.assign(x1_.size(), Bits(x2_.size()));
  for (auto [x, y] : relation) {
    if (x >= x1_.size() || y >= x2_.size())
      throw Error(ErrorKind::InvalidInput, "relation pair out of range");
    rows_[x].set(y);
  }
  index_columns();
}

Frame Frame::from_rows(std::vector<std::string> x1, std::vector<std::string> x2,
                       std::vector<Bits> rows) {
  Frame f;
  f.x1_ = std::move(x1);
  f.x2_ = std::move(x2);
  require_distinct(f.x1_, "X1 point");
  require_distinct(f.x2_, "X2 point");
  if (rows.size() != f.x1_.size())
    throw Error(ErrorKind::InvalidInput, "row count does not match X1");
  for (auto& r : rows)
    if (r.size() != f.x2_.size()) throw Error(ErrorKind::InvalidInput, "row width mismatch");
  f.rows_ = std::move(rows);
  f.index_columns();
  return f;
}

void Frame::index_columns() {
  cols_.assign(x2_.size(), Bits(x1_.size()));
  for (std::size_t x = 0; x < x1_.size(); ++x)
    for_each_bit(rows_[x], [&](std::size_t y) { cols_[y].set(x); });
}

std::size_t Frame::index1(std::string_view name) const {
  return index_or_throw(x1_, name, "X1 point");
}

std::size_t Frame::index2(std::string_view name) const {
  return index_or_throw(x2_, name, "X2 point");
}

std::vector<IndexPair> Frame::pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t x = 0; x < size1(); ++x)
    for_each_bit(rows_[x], [&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

std::string ConditionReport::first_failure() const {
  if (!reflexive) return "reflexive";
  if (!separation) return "S";
  if (!reduction) return "R";
  if (!ti) return "Ti";
  return {};
}

ConditionReport check_graph(const Graph& g, WitnessMode mode) {
  ConditionReport rep;
  const std::size_t n = g.size();
  const auto nm = [&](std::size_t i) { return g.name(i); };

  for (std::size_t x = 0; x < n && rep.reflexive.wants_more(mode); ++x)
    if (!g.has_edge(x, x)) rep.reflexive.add("reflexive", {nm(x)});

  for (std::size_t x = 0; x < n && rep.separation.wants_more(mode); ++x)
    for (std::size_t y = x + 1; y < n && rep.separation.wants_more(mode); ++y)
      if (g.row(x) == g.row(y) && g.col(x) == g.col(y)) rep.separation.add("S", {nm(x), nm(y)});

  // (R)(i): zE strictly inside xE forces (z, x) not in E.
  for (std::size_t x = 0; x < n && rep.reduction.wants_more(mode); ++x)
    for (std::size_t z = 0; z < n && rep.reduction.wants_more(mode); ++z)
      if (g.row(z).is_proper_subset_of(g.row(x)) && g.has_edge(z, x))
        rep.reduction.add("R(i)", {nm(x), nm(z)});
  // (R)(ii): Ez strictly inside Ey forces (y, z) not in E.
  for (std::size_t y = 0; y < n && rep.reduction.wants_more(mode); ++y)
    for (std::size_t z = 0; z < n && rep.reduction.wants_more(mode); ++z)
      if (g.col(z).is_proper_subset_of(g.col(y)) && g.has_edge(y, z))
        rep.reduction.add("R(ii)", {nm(y), nm(z)});

  for (std::size_t x = 0; x < n && rep.ti.wants_more(mode); ++x)
    for (std::size_t y = 0; y < n && rep.ti.wants_more(mode); ++y) {
      if (!g.has_edge(x, y)) continue;
      bool found = false;
      for (std::size_t z = 0; z < n && !found; ++z)
        found = g.row(z).is_subset_of(g.row(x)) && g.col(z).is_subset_of(g.col(y));
      if (!found) rep.ti.add("Ti", {nm(x), nm(y)});
    }
  return rep;
}

bool in_h(const Frame& f, std::size_t x, std::size_t y) {
  if (f.related(x, y)) return false;
  for (std::size_t u = 0; u < f.size1(); ++u)
    if (u != x && f.row(x).is_subset_of(f.row(u)) && !f.related(u, y)) return false;
  for (std::size_t v = 0; v < f.size2(); ++v)
    if (v != y && f.col(y).is_subset_of(f.col(v)) && !f.related(x, v)) return false;
  return true;
}

ConditionReport check_frame(const Frame& f, WitnessMode mode) {
  ConditionReport rep;
  const std::size_t n1 = f.size1(), n2 = f.size2();

  for (std::size_t a = 0; a < n1 && rep.separation.wants_more(mode); ++a)
    for (std::size_t b = a + 1; b < n1 && rep.separation.wants_more(mode); ++b)
      if (f.row(a) == f.row(b)) rep.separation.add("S(i)", {f.name1(a), f.name1(b)});
  for (std::size_t a = 0; a < n2 && rep.separation.wants_more(mode); ++a)
    for (std::size_t b = a + 1; b < n2 && rep.separation.wants_more(mode); ++b)
      if (f.col(a) == f.col(b)) rep.separation.add("S(ii)", {f.name2(a), f.name2(b)});

  // (R)(i): every x has some y with not xRy that every w != x with
  // xR <= wR is related to.
  for (std::size_t x = 0; x < n1 && rep.reduction.wants_more(mode); ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n2 && !found; ++y) {
      if (f.related(x, y)) continue;
      bool all = true;
      for (std::size_t w = 0; w < n1 && all; ++w)
        if (w != x && f.row(x).is_subset_of(f.row(w)) && !f.related(w, y)) all = false;
      found = all;
    }
    if (!found) rep.reduction.add("R(i)", {f.name1(x)});
  }
  for (std::size_t y = 0; y < n2 && rep.reduction.wants_more(mode); ++y) {
    bool found = false;
    for (std::size_t x = 0; x < n1 && !found; ++x) {
      if (f.related(x, y)) continue;
      bool all = true;
      for (std::size_t z = 0; z < n2 && all; ++z)
        if (z != y && f.col(y).is_subset_of(f.col(z)) && !f.related(x, z)) all = false;
      found = all;
    }
    if (!found) rep.reduction.add("R(ii)", {f.name2(y)});
  }

  for (std::size_t x = 0; x < n1 && rep.ti.wants_more(mode); ++x)
    for (std::size_t y = 0; y < n2 && rep.ti.wants_more(mode); ++y) {
      if (f.related(x, y)) continue;
      bool found = false;
      for (std::size_t w = 0; w < n1 && !found; ++w) {
        if (!f.row(x).is_subset_of(f.row(w))) continue;
        for (std::size_t z = 0; z < n2 && !found; ++z) {
          if (f.related(w, z) || !f.col(y).is_subset_of(f.col(z))) continue;
          bool ok = true;
          for (std::size_t u = 0; u < n1 && ok; ++u)
            if (u != w && f.row(w).is_subset_of(f.row(u)) && !f.related(u, z)) ok = false;
          for (std::size_t v = 0; v < n2 && ok; ++v)
            if (v != z && f.col(z).is_subset_of(f.col(v)) && !f.related(w, v)) ok = false;
          found = ok;
        }
      }
      if (!found) rep.ti.add("Ti", {f.name1(x), f.name2(y)});
    }
  return rep;
}

CheckReport is_poset_graph(const Graph& g, WitnessMode mode) {
  CheckReport r;
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n && r.wants_more(mode); ++x)
    if (!g.has_edge(x, x)) r.add("reflexive", {g.name(x)});
  for (std::size_t x = 0; x < n && r.wants_more(mode); ++x)
    for (std::size_t y = x + 1; y < n && r.wants_more(mode); ++y)
      if (g.has_edge(x, y) && g.has_edge(y, x)) r.add("antisymmetric", {g.name(x), g.name(y)});
  for (std::size_t x = 0; x < n && r.wants_more(mode); ++x)
    for (std::size_t y = 0; y < n && r.wants_more(mode); ++y) {
      if (!g.has_edge(x, y)) continue;
      for (std::size_t z = 0; z < n && r.wants_more(mode); ++z)
        if (g.has_edge(y, z) && !g.has_edge(x, z))
          r.add("transitive", {g.name(x), g.name(y), g.name(z)});
    }
  return r;
}

Graph converse(const Graph& g) {
  std::vector<Bits> rows;
  for (std::size_t x = 0; x < g.size(); ++x) rows.push_back(g.col(x));
  return Graph::from_rows(g.names(), std::move(rows));
}

Graph order_graph(const FiniteLattice& l) {
  std::vector<Bits> rows;
  for (std::size_t a = 0; a < l.size(); ++a) rows.push_back(l.up(a));
  return Graph::from_rows(l.names(), std::move(rows));
}

}  // namespace tirs
