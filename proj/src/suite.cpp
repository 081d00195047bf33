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

#include "tirs/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>

#include "tirs/errors.hpp"
#include "tirs/fixtures.hpp"
#include "tirs/functors.hpp"
#include "tirs/galois.hpp"
#include "tirs/generators.hpp"
#include "tirs/laws.hpp"
#include "tirs/ploscica.hpp"
#include "tirs/pti.hpp"

namespace tirs {

std::size_t suite_max_size_from_env() {
  const char* raw = std::getenv("TIRS_SUITE_MAXSIZE");
  if (raw == nullptr || *raw == '\0') return kDefaultSuiteMaxSize;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') return kDefaultSuiteMaxSize;
  return std::clamp<std::size_t>(v, 2, kMaxLatticeSize);
}

namespace {

constexpr std::size_t kSeedsPerSize = 4;
constexpr std::size_t kMapsPerSuite = 24;

struct Corpus {
  std::vector<std::pair<std::string, FiniteLattice>> lattices;
  std::vector<std::pair<std::string, FiniteLattice>> distributive;
  std::vector<std::pair<std::string, Graph>> posets;
  std::vector<std::pair<std::string, Graph>> graphs;
  std::vector<std::pair<std::string, Frame>> frames;
};

Corpus build_corpus(std::uint64_t seed, std::size_t max_size) {
  Corpus c;
  c.lattices = fixtures::lattices();
  for (std::size_t n = 2; n <= max_size; ++n) {
    GenSpec s{GenKind::Lattice, n, seed + n, kSeedsPerSize, false};
    const auto tag = "lattice/n" + std::to_string(n) + "/";
    std::size_t i = 0;
    for (auto& l : gen_lattice(s)) c.lattices.emplace_back(tag + std::to_string(i++), std::move(l));
    s.kind = GenKind::DistributiveLattice;
    i = 0;
    for (auto& l : gen_lattice(s))
      c.distributive.emplace_back("distributive/n" + std::to_string(n) + "/" + std::to_string(i++),
                                  std::move(l));
  }
  for (std::size_t n = 1; n <= std::min(max_size, kMaxExhaustivePosetSize); ++n) {
    std::size_t i = 0;
    for (auto& p : gen_poset({GenKind::Poset, n, seed + n, 3, false}))
      c.posets.emplace_back("poset/n" + std::to_string(n) + "/" + std::to_string(i++), std::move(p));
  }
  c.graphs.emplace_back("loop1", fixtures::loop1());
  for (const auto& [name, l] : c.lattices)
    if (l.size() >= 2) c.graphs.emplace_back("dual/" + name, dual_graph(l).graph);
  for (const auto& [name, p] : c.posets) c.graphs.emplace_back(name, p);

  c.frames.emplace_back("diagonal3", fixtures::diagonal3());
  c.frames.emplace_back("truncated3", fixtures::truncated_rs_frame(3));
  const std::size_t side = std::min<std::size_t>(3, max_size);
  std::size_t i = 0;
  for (auto& f : gen_rs_frame({GenKind::RSFrame, side, seed, 1, true}))
    c.frames.emplace_back("rs-frame/" + std::to_string(i++), std::move(f));
  return c;
}

using Battery = std::function<CheckReport()>;

void tagged(CheckReport& out, const std::string& item, const CheckReport& r) {
  for (const auto& w : r.witnesses()) {
    auto elems = w.elements;
    elems.insert(elems.begin(), item);
    out.add(w.condition, std::move(elems));
  }
}

template <class F>
void guarded(CheckReport& out, const std::string& item, F&& body) {
  try {
    tagged(out, item, body());
  } catch (const Error& e) {
    out.add(std::string("error:") + std::string(to_string(e.kind())), {item, e.what()});
  }
}

CheckReport core_lattice(const Corpus& c) {
  CheckReport r;
  for (const auto& [name, l] : c.lattices) guarded(r, name, [&] { return laws::lattice_laws(l); });
  for (const auto& [name, l] : c.distributive)
    guarded(r, name, [&] { return is_distributive(l); });
  return r;
}

CheckReport ploscica(const Corpus& c) {
  CheckReport r;
  for (const auto& [name, l] : c.lattices)
    if (l.size() >= 2) guarded(r, name, [&] { return laws::dual_graph_laws(l); });
  return r;
}

CheckReport structures(const Corpus& c) {
  CheckReport r;
  for (const auto& [name, g] : c.graphs)
    guarded(r, name, [&] {
      CheckReport out;
      const auto cond = check_graph(g);
      if (!cond.is_tirs()) out.add("graph not TiRS: " + cond.first_failure(), {});
      return out;
    });
  for (const auto& [name, p] : c.posets) guarded(r, name, [&] { return is_poset_graph(p); });
  for (const auto& [name, f] : c.frames)
    guarded(r, name, [&] {
      CheckReport out;
      if (!check_frame(f).is_rs()) out.add("frame not RS", {});
      return out;
    });
  guarded(r, "nt4", [] {
    CheckReport out;
    if (check_graph(fixtures::nt4()).ti.verdict()) out.add("NT4 passes Ti", {});
    return out;
  });
  guarded(r, "f2x1", [] {
    CheckReport out;
    const auto cond = check_frame(fixtures::f2x1());
    if (cond.separation.verdict() || cond.ti.verdict()) out.add("F2x1 passes S or Ti", {});
    return out;
  });
  return r;
}

CheckReport functors(const Corpus& c, std::uint64_t seed) {
  CheckReport r;
  for (const auto& [name, g] : c.graphs) guarded(r, name, [&] { return laws::graph_round_trip(g); });
  for (const auto& [name, f] : c.frames)
    if (check_frame(f).is_tirs()) guarded(r, name, [&] { return laws::frame_round_trip(f); });
  // Chains of monotone maps between posets.
  std::vector<const Graph*> posets;
  for (const auto& [name, p] : c.posets)
    if (p.size() <= 4) posets.push_back(&p);
  for (std::size_t i = 0; i < kMapsPerSuite && !posets.empty(); ++i) {
    const Graph& a = *posets[i % posets.size()];
    const Graph& b = *posets[(i * 7 + 3) % posets.size()];
    const Graph& d = *posets[(i * 13 + 5) % posets.size()];
    const auto f = random_monotone_map(a, b, seed + 2 * i);
    const auto g = random_monotone_map(b, d, seed + 2 * i + 1);
    if (!f || !g) continue;
    guarded(r, "maps/" + std::to_string(i), [&] { return laws::functor_laws(*f, *g); });
  }
  return r;
}

CheckReport galois(const Corpus& c) {
  CheckReport r;
  for (const auto& [name, f] : c.frames) guarded(r, name, [&] { return laws::galois_laws(f); });
  for (const auto& [name, l] : c.lattices)
    if (l.size() >= 2) guarded(r, name, [&] { return laws::canext_laws(l); });
  for (const auto& [name, l] : c.distributive)
    if (l.size() >= 2) guarded(r, name, [&] { return laws::birkhoff_laws(l); });
  return r;
}

CheckReport pti(const Corpus& c) {
  CheckReport r;
  for (const auto& [name, l] : c.lattices) guarded(r, name, [&] { return check_pti(l).report; });
  for (const auto& [name, f] : c.frames) guarded(r, name, [&] { return pti_bridge_suite(f); });
  return r;
}

CheckReport generators(std::uint64_t seed, std::size_t max_size) {
  CheckReport r;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto tag = "n" + std::to_string(n);
    guarded(r, "lattice/" + tag, [&] {
      CheckReport out;
      const GenSpec s{GenKind::Lattice, n, seed, 3, false};
      const auto a = gen_lattice(s);
      if (!(a == gen_lattice(s))) out.add("not deterministic", {});
      for (const auto& l : a)
        if (l.size() != n) out.add("wrong size", {std::to_string(l.size())});
      return out;
    });
    guarded(r, "distributive/" + tag, [&] {
      CheckReport out;
      for (const auto& l : gen_lattice({GenKind::DistributiveLattice, n, seed, 3, false}))
        if (l.size() != n || !is_distributive(l)) out.add("not distributive of requested size", {});
      return out;
    });
    guarded(r, "poset/" + tag, [&] {
      CheckReport out;
      for (const auto& p : gen_poset({GenKind::Poset, n, seed, 3, false}))
        out.merge(is_poset_graph(p));
      return out;
    });
    guarded(r, "tirs-graph/" + tag, [&] {
      CheckReport out;
      for (const auto& g : gen_tirs_graph({GenKind::TiRSGraph, n, seed, 3, false}))
        if (!check_graph(g).is_tirs()) out.add("generated graph not TiRS", {});
      return out;
    });
    if (n <= kMaxFrameSide)
      guarded(r, "rs-frame/" + tag, [&] {
        CheckReport out;
        for (const auto& f : gen_rs_frame({GenKind::RSFrame, n, seed, 3, false}))
          if (!check_frame(f).is_rs()) out.add("generated frame not RS", {});
        return out;
      });
  }
  return r;
}

}  // namespace

std::vector<std::pair<std::string, CheckReport>> run_suite(std::uint64_t seed,
                                                           std::size_t max_size) {
  if (max_size < 2 || max_size > kMaxLatticeSize)
    throw Error(ErrorKind::InvalidInput, "suite size out of range");
  const Corpus c = build_corpus(seed, max_size);
  std::map<std::string, Battery> tasks{
      {"core-lattice", [&] { return core_lattice(c); }},
      {"ploscica", [&] { return ploscica(c); }},
      {"structures", [&] { return structures(c); }},
      {"functors", [&] { return functors(c, seed); }},
      {"galois", [&] { return galois(c); }},
      {"pti", [&] { return pti(c); }},
      {"generators", [&] { return generators(seed, max_size); }},
  };
  // TODO: run the batteries on a thread pool; the corpus is shared read-only.
  std::vector<std::pair<std::string, CheckReport>> out;
  for (const auto& [name, task] : tasks) out.emplace_back(name, task());
  return out;
}

}  // namespace tirs
