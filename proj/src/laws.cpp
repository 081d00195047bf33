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

#include "tirs/laws.hpp"

#include <string>

#include "tirs/errors.hpp"
#include "tirs/galois.hpp"
#include "tirs/generators.hpp"
#include "tirs/ploscica.hpp"

namespace tirs::laws {

namespace {

template <class F>
CheckReport guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    CheckReport r;
    r.add(std::string("error:") + std::string(to_string(e.kind())) + ": " + e.what(), e.witness());
    return r;
  }
}

void expect(CheckReport& r, bool ok, const std::string& law, std::vector<std::string> who = {}) {
  if (!ok) r.add(law, std::move(who));
}

void absorb(CheckReport& r, const CheckReport& inner, const std::string& prefix) {
  for (const auto& w : inner.witnesses()) r.add(prefix + w.condition, w.elements);
}

}  // namespace

CheckReport lattice_laws(const FiniteLattice& l) {
  return guarded([&] {
    CheckReport r;
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a) {
      expect(r, l.leq(l.bot(), a) && l.leq(a, l.top()), "bounds", {l.name(a)});
      expect(r, l.join(a, a) == a && l.meet(a, a) == a, "idempotent", {l.name(a)});
      for (std::size_t b = 0; b < n; ++b) {
        const bool le = l.leq(a, b);
        expect(r, le == (l.join(a, b) == b) && le == (l.meet(a, b) == a), "order/table coherence",
               {l.name(a), l.name(b)});
        expect(r, l.join(a, b) == l.join(b, a) && l.meet(a, b) == l.meet(b, a), "commutative",
               {l.name(a), l.name(b)});
        expect(r, l.join(a, l.meet(a, b)) == a && l.meet(a, l.join(a, b)) == a, "absorption",
               {l.name(a), l.name(b)});
        for (std::size_t c = 0; c < n; ++c)
          expect(r,
                 l.join(a, l.join(b, c)) == l.join(l.join(a, b), c) &&
                     l.meet(a, l.meet(b, c)) == l.meet(l.meet(a, b), c),
                 "associative", {l.name(a), l.name(b), l.name(c)});
      }
    }
    const auto fi = filters_ideals(l);
    expect(r, fi.filters.size() == n && fi.ideals.size() == n, "filter/ideal count");
    const auto id = identity_embedding(l);
    absorb(r, check_dense(id), "identity dense: ");
    absorb(r, check_compact(id), "identity compact: ");
    return r;
  });
}

CheckReport dual_graph_laws(const FiniteLattice& l) {
  return guarded([&] {
    CheckReport r;
    const auto d = dual_graph(l);
    const auto cond = check_graph(d.graph);
    expect(r, cond.is_tirs(), "dual graph TiRS (" + cond.first_failure() + ")");
    for (std::size_t i = 0; i < d.pairs.size(); ++i)
      for (std::size_t j = 0; j < d.pairs.size(); ++j)
        expect(r,
               dual_edge_by_intersection(d.pairs[i], d.pairs[j]) ==
                   dual_edge_pointwise(d.pairs[i], d.pairs[j]),
               "edge forms agree", {d.graph.name(i), d.graph.name(j)});
    if (is_distributive(l).verdict()) {
      absorb(r, is_poset_graph(d.graph), "distributive dual is a poset: ");
      expect(r, d.graph.size() == irreducibles(l).join_irreducible.count(),
             "distributive dual has |J| vertices");
    }
    return r;
  });
}

CheckReport birkhoff_laws(const FiniteLattice& l) {
  return guarded([&] {
    CheckReport r;
    const auto d = dual_graph(l);
    absorb(r, is_poset_graph(d.graph), "poset: ");
    expect(r, d.graph.size() == irreducibles(l).join_irreducible.count(), "|V| = |J(L)|");
    const auto g = closed_sets(rho(d.graph).frame).lattice;
    expect(r, lattice_iso(g, downset_lattice(converse(d.graph))).has_value(),
           "closed sets iso down-sets");
    return r;
  });
}

CheckReport galois_laws(const Frame& f) {
  return guarded([&] {
    CheckReport r;
    const std::size_t n1 = f.size1(), n2 = f.size2();
    std::vector<Bits> as, bs;
    if (n1 + n2 <= 14) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n1); ++m) {
        Bits a(n1);
        for (std::size_t i = 0; i < n1; ++i)
          if (m >> i & 1) a.set(i);
        as.push_back(a);
      }
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n2); ++m) {
        Bits b(n2);
        for (std::size_t i = 0; i < n2; ++i)
          if (m >> i & 1) b.set(i);
        bs.push_back(b);
      }
    } else {
      as.push_back(Bits(n1));
      bs.push_back(Bits(n2));
      for (std::size_t i = 0; i < n1; ++i) as.push_back(singleton(n1, i));
      for (std::size_t i = 0; i < n2; ++i) bs.push_back(singleton(n2, i));
    }
    for (const auto& a : as)
      for (const auto& b : bs)
        if (a.is_subset_of(galois_down(f, b)) != b.is_subset_of(galois_up(f, a))) {
          r.add("adjunction", {set_name(f, a)});
          return r;
        }
    for (const auto& a : as)
      expect(r, galois_up(f, galois_down(f, galois_up(f, a))) == galois_up(f, a), "up.down.up = up",
             {set_name(f, a)});
    for (const auto& b : bs)
      expect(r, galois_down(f, galois_up(f, galois_down(f, b))) == galois_down(f, b),
             "down.up.down = down");
    if (check_frame(f).is_rs()) irreducibles_of_galois(closed_sets(f));
    // Singleton closures are the row-inclusion up-sets.
    for (std::size_t x = 0; x < n1; ++x) {
      const Bits cx = galois_closure(f, singleton(n1, x));
      for (std::size_t w = 0; w < n1; ++w) {
        const bool row_inc = f.row(x).is_subset_of(f.row(w));
        expect(r, cx.test(w) == row_inc, "closure (i)", {f.name1(x), f.name1(w)});
        const Bits cw = galois_closure(f, singleton(n1, w));
        expect(r, cw.is_subset_of(cx) == row_inc, "closure (ii)", {f.name1(x), f.name1(w)});
      }
      for (std::size_t y = 0; y < n2; ++y)
        expect(r, cx.is_subset_of(f.col(y)) == f.related(x, y), "closure (iii)",
               {f.name1(x), f.name2(y)});
    }
    return r;
  });
}

CheckReport graph_round_trip(const Graph& g) {
  return guarded([&] {
    CheckReport r;
    const auto a = alpha(g);
    expect(r, is_graph_isomorphism(a), "alpha iso");
    const auto rr = rho(g);
    // H(rho(g)) = {([x]1, [x]2)} by double inclusion.
    const auto back = gr(rr.frame);
    for (std::size_t x = 0; x < g.size(); ++x)
      expect(r, in_h(rr.frame, rr.class1[x], rr.class2[x]), "H contains ([x]1,[x]2)", {g.name(x)});
    for (auto [c1, c2] : back.pairs) {
      bool hit = false;
      for (std::size_t x = 0; x < g.size() && !hit; ++x)
        hit = rr.class1[x] == c1 && rr.class2[x] == c2;
      expect(r, hit, "H pair comes from a vertex", {rr.frame.name1(c1), rr.frame.name2(c2)});
    }
    expect(r, graph_iso(g, back.graph).has_value(), "graph_iso(g, gr(rho(g)))");
    return r;
  });
}

CheckReport frame_round_trip(const Frame& f) {
  return guarded([&] {
    CheckReport r;
    const auto b = beta(f);
    expect(r, is_frame_isomorphism(b), "beta iso");
    absorb(r, validate_frame_morphism(b), "beta is a morphism: ");
    expect(r, frame_iso(f, rho(gr(f).graph).frame).has_value(), "frame_iso(f, rho(gr(f)))");
    return r;
  });
}

CheckReport functor_laws(const GraphMorphism& first, const GraphMorphism& second) {
  return guarded([&] {
    CheckReport r;
    const auto composite = compose(first, second);
    absorb(r, validate_graph_morphism(composite), "composite is a morphism: ");

    const auto fx = rho(first.source).frame;
    expect(r, rho_mor(identity_morphism(first.source)).map1 == identity_morphism(fx).map1 &&
                  rho_mor(identity_morphism(first.source)).map2 == identity_morphism(fx).map2,
           "rho preserves identity");
    expect(r, gr_mor(identity_morphism(fx)).map == identity_morphism(gr(fx).graph).map,
           "gr preserves identity");

    const auto r1 = rho_mor(first);
    const auto r2 = rho_mor(second);
    const auto r12 = rho_mor(composite);
    const auto r_comp = compose(r1, r2);
    expect(r, r12.map1 == r_comp.map1 && r12.map2 == r_comp.map2, "rho preserves composition");

    const auto g1 = gr_mor(r1);
    const auto g2 = gr_mor(r2);
    expect(r, gr_mor(r12).map == compose(g1, g2).map, "gr preserves composition");

    absorb(r, check_naturality(first), "naturality (first): ");
    absorb(r, check_naturality(second), "naturality (second): ");
    absorb(r, check_naturality(composite), "naturality (composite): ");
    absorb(r, check_naturality(r1), "frame naturality (first): ");
    absorb(r, check_naturality(r12), "frame naturality (composite): ");
    return r;
  });
}

CheckReport canext_laws(const FiniteLattice& l) {
  return guarded([&] {
    CheckReport r;
    const auto t = canext_tandem(l);
    const auto p = canext_polarity(l);
    // Both embeddings are onto, so the comparison map is forced.
    std::vector<std::size_t> phi(t.embedding.target.size(), Bits::npos);
    for (std::size_t a = 0; a < l.size(); ++a) phi[t.embedding.map[a]] = p.embedding.map[a];
    const Graph gt = order_graph(t.embedding.target);
    const Graph gp = order_graph(p.embedding.target);
    bool total = true;
    for (auto v : phi) total = total && v != Bits::npos;
    expect(r, total && is_graph_isomorphism({gt, gp, phi}), "tandem iso polarity over L");
    expect(r, is_graph_isomorphism({order_graph(l), gt, t.embedding.map}), "tandem embedding iso");
    expect(r, is_graph_isomorphism({order_graph(l), gp, p.embedding.map}), "polarity embedding iso");
    irreducibles_of_galois(t.galois);
    // The polarity frame is not reduced: singleton closures also hit the bounds.
    const auto pj = irreducibles(p.galois.lattice);
    expect(r, pj.join_irreducible.is_subset_of(p.galois.j_infty), "polarity J within singleton closures");
    expect(r, pj.meet_irreducible.is_subset_of(p.galois.m_infty), "polarity M within extents");
    absorb(r, jinfty_via_maximal_pairs(t.embedding), "tandem maximal pairs: ");
    absorb(r, jinfty_via_maximal_pairs(p.embedding), "polarity maximal pairs: ");
    return r;
  });
}

}  // namespace tirs::laws
