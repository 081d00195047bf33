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

#include "tirs/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

#include "tirs/errors.hpp"
#include "tirs/galois.hpp"
#include "tirs/ploscica.hpp"

namespace tirs {

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Poset: return "poset";
    case GenKind::Lattice: return "lattice";
    case GenKind::DistributiveLattice: return "distributive-lattice";
    case GenKind::TiRSGraph: return "tirs-graph";
    case GenKind::RSFrame: return "rs-frame";
  }
  return "?";
}

std::optional<GenKind> parse_gen_kind(std::string_view text) {
  for (auto k : {GenKind::Poset, GenKind::Lattice, GenKind::DistributiveLattice,
                 GenKind::TiRSGraph, GenKind::RSFrame})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

namespace {

constexpr std::size_t kAttemptsPerLattice = 20000;
constexpr std::size_t kAttemptsPerFrame = 200000;

using Rng = std::mt19937_64;

// Portable across standard libraries, unlike std::uniform_int_distribution.
std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void close_transitively(std::vector<Bits>& above) {
  const std::size_t n = above.size();
  for (std::size_t i = 0; i < n; ++i) above[i].set(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (above[i].test(k)) above[i] |= above[k];
}

Graph random_poset(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
  std::vector<Bits> above(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() & 1) above[perm[i]].set(perm[j]);
  close_transitively(above);
  return Graph::from_rows(numbered("v", n), std::move(above));
}

// Posets on n points up to isomorphism. Every poset has a linear extension,
// so relations compatible with the index order cover all classes.
std::vector<Graph> all_posets(std::size_t n) {
  std::vector<IndexPair> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::map<std::vector<std::tuple<std::size_t, std::size_t>>, std::vector<Graph>> buckets;
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Bits> above(n, Bits(n));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) above[slots[s].first].set(slots[s].second);
    auto closed = above;
    close_transitively(closed);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      Bits strict = closed[i];
      strict.reset(i);
      transitive = strict == above[i];
    }
    if (!transitive) continue;
    Graph g = Graph::from_rows(numbered("v", n), std::move(closed));
    std::vector<std::tuple<std::size_t, std::size_t>> sig;
    for (std::size_t v = 0; v < n; ++v) sig.emplace_back(g.row(v).count(), g.col(v).count());
    std::sort(sig.begin(), sig.end());
    auto& bucket = buckets[sig];
    bool seen = false;
    for (const auto& h : bucket)
      if (graph_iso(g, h)) {
        seen = true;
        break;
      }
    if (seen) continue;
    bucket.push_back(g);
    out.push_back(std::move(g));
  }
  return out;
}

FiniteLattice renamed(const FiniteLattice& l) {
  std::vector<Bits> above;
  for (std::size_t a = 0; a < l.size(); ++a) above.push_back(l.up(a));
  return lattice_from_relation(numbered("e", l.size()), std::move(above));
}

FiniteLattice random_lattice(Rng& rng, std::size_t n, bool distributive) {
  for (std::size_t attempt = 0; attempt < kAttemptsPerLattice; ++attempt) {
    // A distributive lattice of size n has fewer than n join-irreducibles;
    // a completion never shrinks its poset.
    const std::size_t k = distributive ? below(rng, n) : below(rng, n + 1);
    const Graph p = random_poset(rng, k);
    auto l = distributive ? downset_lattice(p) : macneille_completion(p);
    if (l.size() == n) return renamed(l);
  }
  throw Error(ErrorKind::SizeUnreachable,
              "no lattice of size " + std::to_string(n) + " after bounded attempts");
}

std::vector<FiniteLattice> all_lattices(std::size_t n, bool distributive) {
  std::vector<FiniteLattice> out;
  if (n == 1) {
    out.push_back(build_lattice({"e0"}, {}));
  } else {
    // Bounds e0 and e<n-1> around every inner poset of size n - 2.
    for (const auto& inner : all_posets(n - 2)) {
      std::vector<Bits> above(n, Bits(n));
      above[0] = full_bits(n);
      for (std::size_t v = 0; v < inner.size(); ++v) {
        for_each_bit(inner.row(v), [&](std::size_t w) { above[v + 1].set(w + 1); });
        above[v + 1].set(n - 1);
      }
      try {
        out.push_back(lattice_from_relation(numbered("e", n), std::move(above)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotALattice) throw;
      }
    }
  }
  if (distributive)
    std::erase_if(out, [](const FiniteLattice& l) { return !is_distributive(l).verdict(); });
  return out;
}

Frame frame_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Bits> rows(n, Bits(n));
  for (std::size_t i = 0; i < n * n; ++i)
    if (mask >> i & 1) rows[i / n].set(i % n);
  return Frame::from_rows(numbered("x", n), numbered("y", n), std::move(rows));
}

void require_size(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidInput, "size out of range for " + what);
}

}  // namespace

FiniteLattice downset_lattice(const Graph& poset) {
  const std::size_t n = poset.size();
  require_size(n < 20, "down-set lattice");
  std::vector<Bits> sets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bits s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.set(i);
    bool down = true;
    for_each_bit(s, [&](std::size_t v) { down = down && poset.col(v).is_subset_of(s); });
    if (down) sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), BitsSizeLess{});
  std::vector<std::string> names;
  std::vector<Bits> above(sets.size(), Bits(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string name = "{";
    bool first = true;
    for_each_bit(sets[i], [&](std::size_t v) {
      name += (first ? "" : ",") + poset.name(v);
      first = false;
    });
    names.push_back(name + "}");
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (sets[i].is_subset_of(sets[j])) above[i].set(j);
  }
  return lattice_from_relation(std::move(names), std::move(above));
}

FiniteLattice macneille_completion(const Graph& poset) {
  std::vector<Bits> rows;
  for (std::size_t v = 0; v < poset.size(); ++v) rows.push_back(poset.row(v));
  return closed_sets(Frame::from_rows(poset.names(), poset.names(), std::move(rows))).lattice;
}

std::vector<Graph> gen_poset(const GenSpec& spec) {
  if (spec.exhaustive) {
    require_size(spec.size <= kMaxExhaustivePosetSize, "exhaustive posets");
    return all_posets(spec.size);
  }
  require_size(spec.size >= 1 && spec.size <= kMaxRandomPosetSize, "posets");
  Rng rng(spec.seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(random_poset(rng, spec.size));
  return out;
}

std::vector<FiniteLattice> gen_lattice(const GenSpec& spec) {
  require_size(spec.size >= 1 && spec.size <= kMaxLatticeSize, "lattices");
  const bool distributive = spec.kind == GenKind::DistributiveLattice;
  if (spec.exhaustive) return all_lattices(spec.size, distributive);
  Rng rng(spec.seed);
  std::vector<FiniteLattice> out;
  for (std::size_t i = 0; i < spec.count; ++i)
    out.push_back(random_lattice(rng, spec.size, distributive));
  return out;
}

std::vector<Frame> gen_rs_frame(const GenSpec& spec) {
  const std::size_t n = spec.size;
  std::vector<Frame> out;
  if (spec.exhaustive) {
    require_size(n >= 1 && n <= kMaxExhaustiveFrameSide, "exhaustive frames");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      auto f = frame_from_mask(n, mask);
      if (check_frame(f).is_rs()) out.push_back(std::move(f));
    }
    return out;
  }
  require_size(n >= 1 && n <= kMaxFrameSide, "frames");
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < spec.count; ++i) {
    bool found = false;
    for (std::size_t attempt = 0; attempt < kAttemptsPerFrame && !found; ++attempt) {
      auto f = frame_from_mask(n, rng() & ((std::uint64_t{1} << (n * n)) - 1));
      if (check_frame(f).is_rs()) {
        out.push_back(std::move(f));
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::SizeUnreachable, "no RS frame found after bounded attempts");
  }
  return out;
}

std::vector<Graph> gen_tirs_graph(const GenSpec& spec) {
  std::vector<Graph> out;
  if (spec.exhaustive) {
    if (spec.size >= 2)
      for (const auto& l : all_lattices(spec.size, false)) out.push_back(dual_graph(l).graph);
    for (auto& p : gen_poset(spec)) out.push_back(std::move(p));
    return out;
  }
  require_size(spec.size >= 1 && spec.size <= kMaxLatticeSize, "TiRS graphs");
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < spec.count; ++i) {
    if (i % 2 == 0 && spec.size >= 2)
      out.push_back(dual_graph(random_lattice(rng, spec.size, false)).graph);
    else
      out.push_back(random_poset(rng, spec.size));
  }
  return out;
}

std::optional<GraphMorphism> random_monotone_map(const Graph& from, const Graph& to,
                                                 std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> order(from.size());
  std::iota(order.begin(), order.end(), 0);
  // Down-set size increases strictly along the order, giving a linear extension.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return from.col(a).count() < from.col(b).count();
  });
  GraphMorphism m{from, to, std::vector<std::size_t>(from.size())};
  Bits assigned(from.size());
  // Randomised backtracking; edges are checked once both ends are placed.
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == order.size()) return true;
    const std::size_t x = order[k];
    std::vector<std::size_t> picks(to.size());
    std::iota(picks.begin(), picks.end(), 0);
    std::shuffle(picks.begin(), picks.end(), rng);
    for (auto t : picks) {
      m.map[x] = t;
      assigned.set(x);
      bool ok = true;
      for (std::size_t p = 0; p < from.size() && ok; ++p) {
        if (!assigned.test(p)) continue;
        if (from.has_edge(p, x) && !to.has_edge(m.map[p], t)) ok = false;
        if (from.has_edge(x, p) && !to.has_edge(t, m.map[p])) ok = false;
      }
      if (ok && place(k + 1)) return true;
      assigned.reset(x);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return m;
}

}  // namespace tirs
