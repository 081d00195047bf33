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

#include "tirs/ploscica.hpp"

#include <string>

#include "tirs/errors.hpp"

namespace tirs {

std::vector<MaximalPair> maximal_pairs(const FiniteLattice& l) {
  const std::size_t n = l.size();
  if (n < 2) throw Error(ErrorKind::DegenerateLattice, "maximal pairs need at least two elements");
  std::vector<MaximalPair> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (l.leq(x, y)) continue;
      // Enlarging the filter means going to some x' < x, enlarging the
      // ideal means some y' > y; either must break disjointness.
      Bits below_x = l.down(x);
      below_x.reset(x);
      Bits above_y = l.up(y);
      above_y.reset(y);
      if (!below_x.is_subset_of(l.down(y))) continue;
      if (!above_y.is_subset_of(l.up(x))) continue;
      out.push_back({x, y, l.up(x), l.down(y)});
    }
  return out;
}

bool dual_edge_by_intersection(const MaximalPair& f, const MaximalPair& g) {
  return !f.ones.intersects(g.zeros);
}

bool dual_edge_pointwise(const MaximalPair& f, const MaximalPair& g) {
  const Bits common = (f.ones | f.zeros) & (g.ones | g.zeros);
  for (auto a = common.find_first(); a != Bits::npos; a = common.find_next(a)) {
    const int fa = f.ones.test(a) ? 1 : 0;
    const int ga = g.ones.test(a) ? 1 : 0;
    if (fa > ga) return false;
  }
  return true;
}

DualGraph dual_graph(const FiniteLattice& l) {
  DualGraph d;
  d.pairs = maximal_pairs(l);
  const std::size_t n = d.pairs.size();
  std::vector<std::string> names;
  std::vector<Bits> rows(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const bool a = dual_edge_by_intersection(d.pairs[i], d.pairs[j]);
      if (a != dual_edge_pointwise(d.pairs[i], d.pairs[j]))
        throw Error(ErrorKind::PostconditionFailed, "edge definitions disagree",
                    {names.back(), "p" + std::to_string(j)});
      if (a) rows[i].set(j);
    }
  }
  d.graph = Graph::from_rows(std::move(names), std::move(rows));
  return d;
}

bool mph_leq(const MaximalPair& f, const MaximalPair& g) {
  if (f.ones.size() != g.ones.size())
    throw Error(ErrorKind::MismatchedCarrier, "maximal pairs over different lattices");
  return f.ones.is_subset_of(g.ones);
}

}  // namespace tirs
