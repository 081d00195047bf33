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

#include "tirs/lattice.hpp"

#include <unordered_map>

#include "tirs/errors.hpp"

namespace tirs {

std::optional<std::size_t> FiniteLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t FiniteLattice::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::InvalidInput, "unknown lattice element '" + std::string(name) + "'",
              {std::string(name)});
}

std::size_t FiniteLattice::join_all(const Bits& s) const {
  std::size_t acc = bot_;
  for_each_bit(s, [&](std::size_t i) { acc = join(acc, i); });
  return acc;
}

std::size_t FiniteLattice::meet_all(const Bits& s) const {
  std::size_t acc = top_;
  for_each_bit(s, [&](std::size_t i) { acc = meet(acc, i); });
  return acc;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for_each_bit(upper_covers_[a], [&](std::size_t b) { out.emplace_back(a, b); });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::order_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for_each_bit(up_[a], [&](std::size_t b) { out.emplace_back(a, b); });
  return out;
}

namespace {

// Least element of `s` with respect to the order given by `up`, if any.
std::optional<std::size_t> least_of(const Bits& s, const std::vector<Bits>& up) {
  for (auto u = s.find_first(); u != Bits::npos; u = s.find_next(u))
    if (s.is_subset_of(up[u])) return u;
  return std::nullopt;
}

}  // namespace

FiniteLattice lattice_from_relation(std::vector<std::string> elements,
                                    std::vector<Bits> above) {
  const std::size_t n = elements.size();
  if (above.size() != n)
    throw Error(ErrorKind::InvalidInput, "relation rows do not match element count");
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.emplace(elements[i], i).second)
        throw Error(ErrorKind::InvalidInput, "duplicate element '" + elements[i] + "'",
                    {elements[i]});
  }
  if (n == 0) throw Error(ErrorKind::NoBounds, "empty carrier has no bounds");

  // Reflexive-transitive closure (Warshall over rows).
  for (std::size_t i = 0; i < n; ++i) {
    above[i].resize(n);
    above[i].set(i);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (above[i].test(k)) above[i] |= above[k];

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (above[a].test(b) && above[b].test(a))
        throw Error(ErrorKind::NotAPartialOrder,
                    "cycle through '" + elements[a] + "' and '" + elements[b] + "'",
                    {elements[a], elements[b]});

  FiniteLattice l;
  l.up_ = std::move(above);
  l.down_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for_each_bit(l.up_[a], [&](std::size_t b) { l.down_[b].set(a); });

  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto j = least_of(l.up_[a] & l.up_[b], l.up_);
      if (!j)
        throw Error(ErrorKind::NotALattice,
                    "no least upper bound for '" + elements[a] + "' and '" + elements[b] + "'",
                    {elements[a], elements[b]});
      auto m = least_of(l.down_[a] & l.down_[b], l.down_);
      if (!m)
        throw Error(ErrorKind::NotALattice,
                    "no greatest lower bound for '" + elements[a] + "' and '" + elements[b] + "'",
                    {elements[a], elements[b]});
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
    }
  }
  // A nonempty finite lattice is bounded.
  l.bot_ = *least_of(full_bits(n), l.up_);
  l.top_ = *least_of(full_bits(n), l.down_);

  l.upper_covers_.assign(n, Bits(n));
  l.lower_covers_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    Bits strict = l.up_[a];
    strict.reset(a);
    Bits covers = strict;
    for_each_bit(strict, [&](std::size_t c) {
      Bits beyond = l.up_[c];
      beyond.reset(c);
      covers -= beyond;
    });
    l.upper_covers_[a] = covers;
    for_each_bit(covers, [&](std::size_t b) { l.lower_covers_[b].set(a); });
  }
  l.names_ = std::move(elements);
  return l;
}

FiniteLattice build_lattice(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate element '" + elements[i] + "'",
                  {elements[i]});
  std::vector<Bits> above(elements.size(), Bits(elements.size()));
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      const auto& bad = a == index.end() ? lo : hi;
      throw Error(ErrorKind::InvalidInput, "cover references unknown element '" + bad + "'",
                  {bad});
    }
    above[a->second].set(b->second);
  }
  return lattice_from_relation(elements, std::move(above));
}

Irreducibles irreducibles(const FiniteLattice& l) {
  Irreducibles out{Bits(l.size()), Bits(l.size())};
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (l.lower_covers(a).count() == 1) out.join_irreducible.set(a);
    if (l.upper_covers(a).count() == 1) out.meet_irreducible.set(a);
  }
  return out;
}

FiltersIdeals filters_ideals(const FiniteLattice& l) {
  FiltersIdeals out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    out.filters.push_back(l.up(a));
    out.ideals.push_back(l.down(a));
  }
  return out;
}

LatticeEmbedding identity_embedding(const FiniteLattice& l) {
  LatticeEmbedding e{l, l, {}};
  for (std::size_t a = 0; a < l.size(); ++a) e.map.push_back(a);
  return e;
}

CheckReport validate_embedding(const LatticeEmbedding& emb, WitnessMode mode) {
  const auto& s = emb.source;
  const auto& t = emb.target;
  CheckReport r;
  if (emb.map.size() != s.size()) {
    r.add("map-size", {});
    return r;
  }
  for (auto v : emb.map)
    if (v >= t.size()) {
      r.add("map-range", {});
      return r;
    }
  const auto& f = emb.map;
  for (std::size_t a = 0; a < s.size() && r.wants_more(mode); ++a)
    for (std::size_t b = a + 1; b < s.size() && r.wants_more(mode); ++b)
      if (f[a] == f[b]) r.add("injective", {s.name(a), s.name(b)});
  if (r.wants_more(mode) && f[s.bot()] != t.bot()) r.add("bot", {s.name(s.bot())});
  if (r.wants_more(mode) && f[s.top()] != t.top()) r.add("top", {s.name(s.top())});
  for (std::size_t a = 0; a < s.size() && r.wants_more(mode); ++a)
    for (std::size_t b = 0; b < s.size() && r.wants_more(mode); ++b) {
      if (f[s.join(a, b)] != t.join(f[a], f[b])) r.add("join", {s.name(a), s.name(b)});
      else if (f[s.meet(a, b)] != t.meet(f[a], f[b])) r.add("meet", {s.name(a), s.name(b)});
    }
  return r;
}

namespace {

Bits image_of(const LatticeEmbedding& emb) {
  Bits img(emb.target.size());
  for (auto v : emb.map) img.set(v);
  return img;
}

// Closure of `seed` under a binary operation, plus the given unit.
template <class Op>
Bits close_under(Bits seed, std::size_t unit, Op op) {
  seed.set(unit);
  bool grown = true;
  while (grown) {
    grown = false;
    auto members = indices_of(seed);
    for (auto a : members)
      for (auto b : members) {
        auto c = op(a, b);
        if (!seed.test(c)) {
          seed.set(c);
          grown = true;
        }
      }
  }
  return seed;
}

}  // namespace

Bits filter_elements(const LatticeEmbedding& emb) {
  const auto& t = emb.target;
  return close_under(image_of(emb), t.top(),
                     [&](std::size_t a, std::size_t b) { return t.meet(a, b); });
}

Bits ideal_elements(const LatticeEmbedding& emb) {
  const auto& t = emb.target;
  return close_under(image_of(emb), t.bot(),
                     [&](std::size_t a, std::size_t b) { return t.join(a, b); });
}

CheckReport check_dense(const LatticeEmbedding& emb, WitnessMode mode) {
  const auto& t = emb.target;
  const Bits filt = filter_elements(emb);
  const Bits idl = ideal_elements(emb);
  CheckReport r;
  for (std::size_t x = 0; x < t.size() && r.wants_more(mode); ++x) {
    // x is a join of filter elements iff it is the join of those below it.
    const bool join_of_meets = t.join_all(filt & t.down(x)) == x;
    const bool meet_of_joins = t.meet_all(idl & t.up(x)) == x;
    if (!join_of_meets) r.add("join-of-meets", {t.name(x)});
    else if (!meet_of_joins) r.add("meet-of-joins", {t.name(x)});
  }
  return r;
}

CheckReport check_compact(const LatticeEmbedding& emb) {
  CheckReport r;
  const auto& s = emb.source;
  const auto& t = emb.target;
  const std::size_t n = s.size();
  if (n > kCompactSweepLimit) return r;
  // A and B range over subsets of the image. Both are finite, so the finite
  // subsets A' = A, B' = B are always available; the sweep confirms it.
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::size_t> meets(subsets), joins(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Bits img(t.size());
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) img.set(emb.map[i]);
    meets[mask] = t.meet_all(img);
    joins[mask] = t.join_all(img);
  }
  // Submasks are visited from the full set downwards, so A' = A, B' = B is
  // the first candidate tried.
  auto finite_witness = [&](std::size_t a, std::size_t b) {
    for (std::size_t sa = a;; sa = (sa - 1) & a) {
      for (std::size_t sb = b;; sb = (sb - 1) & b) {
        if (t.leq(meets[sa], joins[sb])) return true;
        if (sb == 0) break;
      }
      if (sa == 0) break;
    }
    return false;
  };
  for (std::size_t a = 0; a < subsets; ++a)
    for (std::size_t b = 0; b < subsets; ++b)
      if (t.leq(meets[a], joins[b]) && !finite_witness(a, b)) {
        r.add("compact", {t.name(meets[a]), t.name(joins[b])});
        return r;
      }
  return r;
}

CheckReport is_distributive(const FiniteLattice& l, WitnessMode mode) {
  CheckReport r;
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n && r.wants_more(mode); ++a)
    for (std::size_t b = 0; b < n && r.wants_more(mode); ++b)
      for (std::size_t c = 0; c < n && r.wants_more(mode); ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          r.add("distributive", {l.name(a), l.name(b), l.name(c)});
  return r;
}

CheckReport check_perfect(const FiniteLattice& l) {
  CheckReport r;
  const auto irr = irreducibles(l);
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.join_all(irr.join_irreducible & l.down(x)) != x) r.add("join-of-J", {l.name(x)});
    if (l.meet_all(irr.meet_irreducible & l.up(x)) != x) r.add("meet-of-M", {l.name(x)});
  }
  return r;
}

}  // namespace tirs
