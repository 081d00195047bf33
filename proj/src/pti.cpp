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

#include "tirs/pti.hpp"

#include "tirs/errors.hpp"
#include "tirs/functors.hpp"
#include "tirs/galois.hpp"

namespace tirs {

PTiReport check_pti_with(const FiniteLattice& l, const Bits& js, const Bits& ms,
                         WitnessMode mode) {
  if (js.size() != l.size() || ms.size() != l.size())
    throw Error(ErrorKind::MismatchedCarrier, "candidate sets sized for another lattice");
  PTiReport out;
  const auto irr = irreducibles(l);
  const auto jl = indices_of(irr.join_irreducible);
  const auto ml = indices_of(irr.meet_irreducible);
  const auto wl = indices_of(js);
  const auto zl = indices_of(ms);
  auto admissible = [&](std::size_t x, std::size_t y, std::size_t w, std::size_t z) {
    if (!l.leq(w, x) || !l.leq(y, z) || l.leq(w, z)) return false;
    for (auto u : jl)
      if (l.less(u, w) && !l.leq(u, z)) return false;
    for (auto v : ml)
      if (l.less(z, v) && !l.leq(w, v)) return false;
    return true;
  };
  for (auto x : jl)
    for (auto y : ml) {
      if (l.leq(x, y)) continue;
      bool any = false;
      for (auto w : wl) {
        for (auto z : zl) {
          if (!admissible(x, y, w, z)) continue;
          any = true;
          out.pairs.push_back({x, y, w, z});
          if (mode == WitnessMode::First) break;
        }
        if (any && mode == WitnessMode::First) break;
      }
      if (!any) {
        out.pairs.push_back({x, y, std::nullopt, std::nullopt});
        if (out.report.wants_more(mode)) out.report.add("PTi", {l.name(x), l.name(y)});
      }
    }
  return out;
}

PTiReport check_pti(const FiniteLattice& l, WitnessMode mode) {
  if (auto p = check_perfect(l); !p)
    throw Error(ErrorKind::NotPerfect, "lattice is not perfect", p.witnesses().front().elements);
  const auto irr = irreducibles(l);
  return check_pti_with(l, irr.join_irreducible, irr.meet_irreducible, mode);
}

PTiReport check_pti_frame_form_with(const Frame& f, const Bits& ps, const Bits& qs,
                                    WitnessMode mode) {
  if (ps.size() != f.size1() || qs.size() != f.size2())
    throw Error(ErrorKind::MismatchedCarrier, "candidate sets sized for another frame");
  PTiReport out;
  const auto pl = indices_of(ps);
  const auto ql = indices_of(qs);
  auto admissible = [&](std::size_t x, std::size_t y, std::size_t p, std::size_t q) {
    if (!f.row(x).is_subset_of(f.row(p)) || !f.col(y).is_subset_of(f.col(q))) return false;
    if (f.related(p, q)) return false;
    for (std::size_t u = 0; u < f.size1(); ++u)
      if (f.row(p).is_proper_subset_of(f.row(u)) && !f.related(u, q)) return false;
    for (std::size_t v = 0; v < f.size2(); ++v)
      if (f.col(q).is_proper_subset_of(f.col(v)) && !f.related(p, v)) return false;
    return true;
  };
  for (std::size_t x = 0; x < f.size1(); ++x)
    for (std::size_t y = 0; y < f.size2(); ++y) {
      if (f.related(x, y)) continue;
      bool any = false;
      for (auto p : pl) {
        for (auto q : ql) {
          if (!admissible(x, y, p, q)) continue;
          any = true;
          out.pairs.push_back({x, y, p, q});
          if (mode == WitnessMode::First) break;
        }
        if (any && mode == WitnessMode::First) break;
      }
      if (!any) {
        out.pairs.push_back({x, y, std::nullopt, std::nullopt});
        if (out.report.wants_more(mode)) out.report.add("PTi", {f.name1(x), f.name2(y)});
      }
    }
  return out;
}

PTiReport check_pti_frame_form(const Frame& f, WitnessMode mode) {
  return check_pti_frame_form_with(f, full_bits(f.size1()), full_bits(f.size2()), mode);
}

CheckReport pti_bridge_suite(const Frame& f) {
  const auto cond = check_frame(f);
  if (!cond.is_rs()) {
    const auto& failing = cond.separation ? cond.reduction : cond.separation;
    throw Error(ErrorKind::NotRS, "frame fails " + failing.witnesses().front().condition,
                failing.witnesses().front().elements);
  }
  CheckReport r;
  const auto gl = closed_sets(f);
  const bool lattice_pti = check_pti(gl.lattice).verdict();
  if (cond.ti.verdict() && !lattice_pti) r.add("(a) Ti => PTi", {});
  const auto back = frame_of_perfect(gl.lattice);
  if (lattice_pti && !check_frame(back).ti.verdict()) r.add("(b) PTi => Ti", {});
  if (!frame_iso(back, f)) r.add("(c) F(G(F)) iso F", {});
  return r;
}

}  // namespace tirs
