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

#include "tirs/galois.hpp"

#include <algorithm>
#include <set>

#include "tirs/errors.hpp"
#include "tirs/functors.hpp"
#include "tirs/ploscica.hpp"

namespace tirs {

Bits galois_up(const Frame& f, const Bits& a) {
  Bits out = full_bits(f.size2());
  for_each_bit(a, [&](std::size_t x) { out &= f.row(x); });
  return out;
}

Bits galois_down(const Frame& f, const Bits& b) {
  Bits out = full_bits(f.size1());
  for_each_bit(b, [&](std::size_t y) { out &= f.col(y); });
  return out;
}

Bits galois_closure(const Frame& f, const Bits& a) { return galois_down(f, galois_up(f, a)); }

std::optional<std::size_t> GaloisLattice::find(const Bits& set) const {
  for (std::size_t i = 0; i < closed_sets.size(); ++i)
    if (closed_sets[i] == set) return i;
  return std::nullopt;
}

std::string set_name(const Frame& f, const Bits& set) {
  std::string s = "{";
  bool first = true;
  for_each_bit(set, [&](std::size_t x) {
    if (!first) s += ",";
    s += f.name1(x);
    first = false;
  });
  return s + "}";
}

GaloisLattice closed_sets(const Frame& f) {
  std::set<Bits, BitsSizeLess> family{full_bits(f.size1())};
  for (std::size_t y = 0; y < f.size2(); ++y) {
    std::vector<Bits> fresh;
    for (const auto& s : family) fresh.push_back(s & f.col(y));
    family.insert(fresh.begin(), fresh.end());
  }
  GaloisLattice gl{f, {family.begin(), family.end()}, {}, {}, {}};
  for (const auto& s : gl.closed_sets)
    if (galois_closure(f, s) != s)
      throw Error(ErrorKind::PostconditionFailed, "generated set is not Galois-closed",
                  {set_name(f, s)});

  const std::size_t n = gl.closed_sets.size();
  std::vector<std::string> names;
  std::vector<Bits> above(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(set_name(f, gl.closed_sets[i]));
    for (std::size_t j = 0; j < n; ++j)
      if (gl.closed_sets[i].is_subset_of(gl.closed_sets[j])) above[i].set(j);
  }
  gl.lattice = lattice_from_relation(std::move(names), std::move(above));

  gl.j_infty.resize(n);
  gl.m_infty.resize(n);
  for (std::size_t x = 0; x < f.size1(); ++x)
    gl.j_infty.set(*gl.find(galois_closure(f, singleton(f.size1(), x))));
  for (std::size_t y = 0; y < f.size2(); ++y) gl.m_infty.set(*gl.find(f.col(y)));
  return gl;
}

GaloisIrreducibles irreducibles_of_galois(const GaloisLattice& gl) {
  const auto irr = irreducibles(gl.lattice);
  if (irr.join_irreducible != gl.j_infty) {
    std::vector<std::string> diff;
    for_each_bit(irr.join_irreducible ^ gl.j_infty,
                 [&](std::size_t i) { diff.push_back(gl.lattice.name(i)); });
    throw Error(ErrorKind::IrreducibleMismatch, "closures of singletons are not the join-irreducibles",
                diff);
  }
  if (irr.meet_irreducible != gl.m_infty) {
    std::vector<std::string> diff;
    for_each_bit(irr.meet_irreducible ^ gl.m_infty,
                 [&](std::size_t i) { diff.push_back(gl.lattice.name(i)); });
    throw Error(ErrorKind::IrreducibleMismatch, "extents are not the meet-irreducibles", diff);
  }
  return {gl.j_infty, gl.m_infty};
}

Frame frame_of_perfect(const FiniteLattice& l) {
  if (auto p = check_perfect(l); !p)
    throw Error(ErrorKind::NotPerfect, "lattice is not perfect", p.witnesses().front().elements);
  const auto irr = irreducibles(l);
  const auto js = indices_of(irr.join_irreducible);
  const auto ms = indices_of(irr.meet_irreducible);
  std::vector<std::string> x1, x2;
  for (auto j : js) x1.push_back(l.name(j));
  for (auto m : ms) x2.push_back(l.name(m));
  std::vector<Bits> rows(js.size(), Bits(ms.size()));
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (l.leq(js[a], ms[b])) rows[a].set(b);
  return Frame::from_rows(std::move(x1), std::move(x2), std::move(rows));
}

namespace {

void verify_completion(const LatticeEmbedding& e) {
  if (auto r = validate_embedding(e); !r)
    throw Error(ErrorKind::PostconditionFailed,
                "map is not a lattice embedding (" + r.witnesses().front().condition + ")",
                r.witnesses().front().elements);
  if (auto r = check_dense(e); !r)
    throw Error(ErrorKind::PostconditionFailed, "completion is not dense",
                r.witnesses().front().elements);
  if (auto r = check_compact(e); !r)
    throw Error(ErrorKind::PostconditionFailed, "completion is not compact",
                r.witnesses().front().elements);
  if (e.source.size() != e.target.size())
    throw Error(ErrorKind::EmbeddingNotOnto, "finite lattice is not its own canonical extension");
}

}  // namespace

CanonicalExtension canext_tandem(const FiniteLattice& l) {
  const auto dual = dual_graph(l);
  const auto r = rho(dual.graph);
  auto gl = closed_sets(r.frame);
  LatticeEmbedding e{l, gl.lattice, {}};
  for (std::size_t a = 0; a < l.size(); ++a) {
    // {[f]1 : f(a) = 1}; membership must not depend on the representative.
    Bits set(r.frame.size1());
    Bits seen(r.frame.size1());
    for (std::size_t f = 0; f < dual.pairs.size(); ++f) {
      const auto c = r.class1[f];
      const bool one = dual.pairs[f].ones.test(a);
      if (seen.test(c) && set.test(c) != one)
        throw Error(ErrorKind::PostconditionFailed, "f(a) = 1 is not constant on a row class",
                    {l.name(a), dual.graph.name(f)});
      seen.set(c);
      if (one) set.set(c);
    }
    auto idx = gl.find(set);
    if (!idx)
      throw Error(ErrorKind::PostconditionFailed, "image of an element is not Galois-closed",
                  {l.name(a)});
    e.map.push_back(*idx);
  }
  verify_completion(e);
  return {std::move(e), std::move(gl)};
}

CanonicalExtension canext_polarity(const FiniteLattice& l) {
  const auto fi = filters_ideals(l);
  std::vector<std::string> x1, x2;
  for (std::size_t a = 0; a < l.size(); ++a) {
    x1.push_back("F" + l.name(a));
    x2.push_back("I" + l.name(a));
  }
  std::vector<Bits> rows(fi.filters.size(), Bits(fi.ideals.size()));
  for (std::size_t i = 0; i < fi.filters.size(); ++i)
    for (std::size_t j = 0; j < fi.ideals.size(); ++j)
      if (fi.filters[i].intersects(fi.ideals[j])) rows[i].set(j);
  const auto polarity = Frame::from_rows(std::move(x1), std::move(x2), std::move(rows));
  auto gl = closed_sets(polarity);
  LatticeEmbedding e{l, gl.lattice, {}};
  for (std::size_t a = 0; a < l.size(); ++a)
    e.map.push_back(*gl.find(galois_closure(polarity, singleton(polarity.size1(), a))));
  verify_completion(e);
  return {std::move(e), std::move(gl)};
}

CheckReport jinfty_via_maximal_pairs(const LatticeEmbedding& emb) {
  const auto& s = emb.source;
  const auto& t = emb.target;
  const auto pairs = maximal_pairs(s);
  Bits meets(t.size()), joins(t.size());
  for (const auto& p : pairs) {
    Bits img_f(t.size()), img_i(t.size());
    for_each_bit(p.ones, [&](std::size_t a) { img_f.set(emb.map[a]); });
    for_each_bit(p.zeros, [&](std::size_t a) { img_i.set(emb.map[a]); });
    meets.set(t.meet_all(img_f));
    joins.set(t.join_all(img_i));
  }
  const auto irr = irreducibles(t);
  CheckReport r;
  for_each_bit(meets ^ irr.join_irreducible, [&](std::size_t x) { r.add("J-via-meets", {t.name(x)}); });
  for_each_bit(joins ^ irr.meet_irreducible, [&](std::size_t x) { r.add("M-via-joins", {t.name(x)}); });
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t.join_all(irr.join_irreducible & t.down(x)) != x) r.add("join-of-J", {t.name(x)});
    if (t.meet_all(irr.meet_irreducible & t.up(x)) != x) r.add("meet-of-M", {t.name(x)});
  }
  return r;
}

}  // namespace tirs
