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

#ifndef TIRS_STRUCTURES_HPP_
#define TIRS_STRUCTURES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tirs/bits.hpp"
#include "tirs/report.hpp"

namespace tirs {

class FiniteLattice;

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A finite graph (X, E). Row xE and column Ex bitsets are cached.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, const std::vector<IndexPair>& edges);
  /// `rows[x]` is the set xE.
  static Graph from_rows(std::vector<std::string> vertices, std::vector<Bits> rows);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;

  bool has_edge(std::size_t x, std::size_t y) const { return rows_[x].test(y); }
  /// xE = {y : (x, y) in E}
  const Bits& row(std::size_t x) const { return rows_[x]; }
  /// Ex = {y : (y, x) in E}
  const Bits& col(std::size_t x) const { return cols_[x]; }
  std::vector<IndexPair> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.rows_ == b.rows_;
  }

 private:
  void index_columns();

  std::vector<std::string> names_;
  std::vector<Bits> rows_, cols_;
};

/// A finite frame (X1, X2, R) with R a subset of X1 x X2. Rows xR are
/// subsets of X2, columns Ry subsets of X1.
class Frame {
 public:
  Frame() = default;
  Frame(std::vector<std::string> x1, std::vector<std::string> x2,
        const std::vector<IndexPair>& relation);
  /// `rows[x]` is the set xR, a subset of X2.
  static Frame from_rows(std::vector<std::string> x1, std::vector<std::string> x2,
                         std::vector<Bits> rows);

  std::size_t size1() const noexcept { return x1_.size(); }
  std::size_t size2() const noexcept { return x2_.size(); }
  const std::vector<std::string>& names1() const noexcept { return x1_; }
  const std::vector<std::string>& names2() const noexcept { return x2_; }
  const std::string& name1(std::size_t i) const { return x1_.at(i); }
  const std::string& name2(std::size_t i) const { return x2_.at(i); }
  std::size_t index1(std::string_view name) const;
  std::size_t index2(std::string_view name) const;

  bool related(std::size_t x, std::size_t y) const { return rows_[x].test(y); }
  const Bits& row(std::size_t x) const { return rows_[x]; }
  const Bits& col(std::size_t y) const { return cols_[y]; }
  std::vector<IndexPair> pairs() const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.x1_ == b.x1_ && a.x2_ == b.x2_ && a.rows_ == b.rows_;
  }

 private:
  void index_columns();

  std::vector<std::string> x1_, x2_;
  std::vector<Bits> rows_, cols_;
};

/// Per-condition results. For frames `reflexive` is always passing since
/// frames carry no reflexivity requirement.
struct ConditionReport {
  CheckReport reflexive;
  CheckReport separation;
  CheckReport reduction;
  CheckReport ti;

  bool is_rs() const { return separation.verdict() && reduction.verdict(); }
  bool is_tirs() const { return reflexive.verdict() && is_rs() && ti.verdict(); }
  /// Name of the first failing condition, or empty.
  std::string first_failure() const;
};

/// Reflexivity, (S), (R)(i)-(ii) and (Ti) for a graph, by direct sweep.
ConditionReport check_graph(const Graph& g, WitnessMode mode = WitnessMode::First);

/// (S), (R) and (Ti) for a frame, including the inner universal clauses.
ConditionReport check_frame(const Frame& f, WitnessMode mode = WitnessMode::First);

/// True iff E is reflexive, transitive and antisymmetric.
CheckReport is_poset_graph(const Graph& g, WitnessMode mode = WitnessMode::First);

/// Membership of (x, y) in the vertex set H of the associated graph:
/// not xRy; every u != x with xR <= uR has uRy; every v != y with Ry <= Rv
/// has xRv.
bool in_h(const Frame& f, std::size_t x, std::size_t y);

/// The graph with every edge reversed.
Graph converse(const Graph& g);

/// The order of a lattice as a graph (E = <=).
Graph order_graph(const FiniteLattice& lattice);

}  // namespace tirs

#endif  // TIRS_STRUCTURES_HPP_
