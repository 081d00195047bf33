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

#include "tirs/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "tirs/errors.hpp"
#include "tirs/functors.hpp"
#include "tirs/galois.hpp"
#include "tirs/generators.hpp"
#include "tirs/io.hpp"
#include "tirs/ploscica.hpp"
#include "tirs/pti.hpp"
#include "tirs/suite.hpp"

namespace tirs {

namespace {

struct Options {
  bool all_witnesses = false;
  std::string file;
  std::string source, target, morphism;
  std::string method = "tandem";
  bool frame_form = false;
  bool include_loops = false;
  bool hasse = false;
  std::string kind;
  std::size_t size = 0;
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;
  bool exhaustive = false;
  std::optional<std::size_t> suite_size;
};

// Failures of a mathematical property, as opposed to malformed input.
bool is_property_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPerfect:
    case ErrorKind::NotTiRS:
    case ErrorKind::NotRS:
    case ErrorKind::InvalidMorphism:
    case ErrorKind::IsoVerificationFailed:
    case ErrorKind::NotWellDefined:
    case ErrorKind::HNotPreserved:
    case ErrorKind::PostconditionFailed:
    case ErrorKind::IrreducibleMismatch:
    case ErrorKind::EmbeddingNotOnto:
      return true;
    default:
      return false;
  }
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  WitnessMode mode() const { return o_.all_witnesses ? WitnessMode::All : WitnessMode::First; }

  int emit(const Json& doc, bool pass) {
    out_ << doc.dump(2) << "\n";
    return pass ? kExitPass : kExitPropertyFailed;
  }

  int check() {
    const Json doc = read_json_file(o_.file);
    switch (detect_kind(doc)) {
      case StructureKind::Lattice: {
        const auto l = lattice_from_json(doc);
        const auto irr = irreducibles(l);
        return emit(Json{{"kind", "lattice"},
                         {"size", l.size()},
                         {"distributive", to_json(is_distributive(l, mode()))},
                         {"join_irreducible", indices_to_names(irr.join_irreducible, l.names())},
                         {"meet_irreducible", indices_to_names(irr.meet_irreducible, l.names())}},
                    true);
      }
      case StructureKind::Graph: {
        const auto r = check_graph(graph_from_json(doc), mode());
        Json j = to_json(r);
        j["kind"] = "graph";
        return emit(j, r.is_tirs());
      }
      case StructureKind::Frame: {
        const auto r = check_frame(frame_from_json(doc), mode());
        Json j = to_json(r);
        j["kind"] = "frame";
        return emit(j, r.is_tirs());
      }
      default:
        throw Error(ErrorKind::UnsupportedKind, "morphisms are checked with check-morphism");
    }
  }

  int dual() {
    const auto l = lattice_from_json(expect(read_json_file(o_.file), StructureKind::Lattice));
    return emit(to_json(dual_graph(l), l), true);
  }

  int rho_cmd() {
    const auto g = graph_from_json(expect(read_json_file(o_.file), StructureKind::Graph));
    return emit(to_json(rho(g).frame), true);
  }

  int gr_cmd() {
    const auto f = frame_from_json(expect(read_json_file(o_.file), StructureKind::Frame));
    return emit(to_json(gr(f).graph), true);
  }

  int rho_mor_cmd() {
    const auto s = graph_from_json(expect(read_json_file(o_.source), StructureKind::Graph));
    const auto t = graph_from_json(expect(read_json_file(o_.target), StructureKind::Graph));
    const auto m = graph_morphism_from_json(read_json_file(o_.morphism), s, t);
    const auto r = rho_mor(m);
    return emit(Json{{"source", to_json(r.source)}, {"target", to_json(r.target)}, {"morphism", to_json(r)}},
                true);
  }

  int gr_mor_cmd() {
    const auto s = frame_from_json(expect(read_json_file(o_.source), StructureKind::Frame));
    const auto t = frame_from_json(expect(read_json_file(o_.target), StructureKind::Frame));
    const auto m = frame_morphism_from_json(read_json_file(o_.morphism), s, t);
    const auto r = gr_mor(m);
    return emit(Json{{"source", to_json(r.source)}, {"target", to_json(r.target)}, {"morphism", to_json(r)}},
                true);
  }

  int canext() {
    const auto l = lattice_from_json(expect(read_json_file(o_.file), StructureKind::Lattice));
    Json doc{{"method", o_.method}};
    auto describe = [](const CanonicalExtension& c) {
      return Json{{"lattice", to_json(c.galois)}, {"embedding", to_json(c.embedding)}};
    };
    if (o_.method == "tandem") {
      doc["tandem"] = describe(canext_tandem(l));
      return emit(doc, true);
    }
    if (o_.method == "polarity") {
      doc["polarity"] = describe(canext_polarity(l));
      return emit(doc, true);
    }
    const auto t = canext_tandem(l);
    const auto p = canext_polarity(l);
    doc["tandem"] = describe(t);
    doc["polarity"] = describe(p);
    // Both embeddings are onto; the comparison map is forced by them.
    std::vector<std::size_t> phi(t.embedding.target.size());
    for (std::size_t a = 0; a < l.size(); ++a) phi[t.embedding.map[a]] = p.embedding.map[a];
    const bool iso = is_graph_isomorphism(
        {order_graph(t.embedding.target), order_graph(p.embedding.target), phi});
    Json m = Json::array();
    for (std::size_t i = 0; i < phi.size(); ++i)
      m.push_back({t.embedding.target.name(i), p.embedding.target.name(phi[i])});
    doc["isomorphism"] = m;
    doc["verdict"] = iso;
    return emit(doc, iso);
  }

  int roundtrip() {
    const Json doc = read_json_file(o_.file);
    switch (detect_kind(doc)) {
      case StructureKind::Lattice: {
        const auto l = lattice_from_json(doc);
        const auto c = canext_tandem(l);
        return emit(Json{{"kind", "lattice"},
                         {"isomorphism", to_json(c.embedding)["map"]},
                         {"closed_sets", to_json(c.galois)["closed_sets"]}},
                    true);
      }
      case StructureKind::Graph: {
        const auto a = alpha(graph_from_json(doc));
        return emit(Json{{"kind", "graph"}, {"alpha", to_json(a)["map"]}, {"gr_rho", to_json(a.target)}},
                    true);
      }
      case StructureKind::Frame: {
        const auto b = beta(frame_from_json(doc));
        Json j = to_json(b);
        return emit(Json{{"kind", "frame"},
                         {"beta1", j["map1"]},
                         {"beta2", j["map2"]},
                         {"rho_gr", to_json(b.target)}},
                    true);
      }
      default:
        throw Error(ErrorKind::UnsupportedKind, "round trips apply to lattices, graphs and frames");
    }
  }

  int check_pti_cmd() {
    const Json doc = read_json_file(o_.file);
    const auto kind = detect_kind(doc);
    if (kind == StructureKind::Frame) {
      const auto f = frame_from_json(doc);
      const auto r = check_pti_frame_form(f, mode());
      return emit(pti_to_json(r, f), r.verdict());
    }
    const auto l = lattice_from_json(expect(doc, StructureKind::Lattice));
    if (o_.frame_form) {
      const auto f = frame_of_perfect(l);
      const auto r = check_pti_frame_form(f, mode());
      return emit(pti_to_json(r, f), r.verdict());
    }
    const auto r = check_pti(l, mode());
    return emit(pti_to_json(r, l), r.verdict());
  }

  int check_morphism() {
    const Json s = read_json_file(o_.source);
    const Json t = read_json_file(o_.target);
    const Json m = read_json_file(o_.morphism);
    if (detect_kind(s) == StructureKind::Graph) {
      const auto gm = graph_morphism_from_json(m, graph_from_json(s),
                                               graph_from_json(expect(t, StructureKind::Graph)));
      const auto r = validate_graph_morphism(gm, mode());
      return emit(to_json(r), r.verdict());
    }
    const auto fm = frame_morphism_from_json(m, frame_from_json(expect(s, StructureKind::Frame)),
                                             frame_from_json(expect(t, StructureKind::Frame)));
    const auto r = validate_frame_morphism(fm, mode());
    return emit(to_json(r), r.verdict());
  }

  int check_naturality_cmd() {
    const Json s = read_json_file(o_.source);
    const Json t = read_json_file(o_.target);
    const Json m = read_json_file(o_.morphism);
    if (detect_kind(s) == StructureKind::Graph) {
      const auto gm = graph_morphism_from_json(m, graph_from_json(s),
                                               graph_from_json(expect(t, StructureKind::Graph)));
      const auto r = check_naturality(gm, mode());
      return emit(to_json(r), r.verdict());
    }
    const auto fm = frame_morphism_from_json(m, frame_from_json(expect(s, StructureKind::Frame)),
                                             frame_from_json(expect(t, StructureKind::Frame)));
    const auto r = check_naturality(fm, mode());
    return emit(to_json(r), r.verdict());
  }

  int gen() {
    const auto kind = parse_gen_kind(o_.kind);
    if (!kind) throw Error(ErrorKind::InvalidInput, "unknown --kind '" + o_.kind + "'");
    if (!o_.exhaustive && !o_.seed) throw Error(ErrorKind::InvalidInput, "random generation needs --seed");
    const GenSpec spec{*kind, o_.size, o_.seed.value_or(0), o_.count, o_.exhaustive};
    Json items = Json::array();
    switch (*kind) {
      case GenKind::Poset:
        for (const auto& g : gen_poset(spec)) items.push_back(to_json(g));
        break;
      case GenKind::TiRSGraph:
        for (const auto& g : gen_tirs_graph(spec)) items.push_back(to_json(g));
        break;
      case GenKind::Lattice:
      case GenKind::DistributiveLattice:
        for (const auto& l : gen_lattice(spec)) items.push_back(to_json(l));
        break;
      case GenKind::RSFrame:
        for (const auto& f : gen_rs_frame(spec)) items.push_back(to_json(f));
        break;
    }
    return emit(items, true);
  }

  int export_dot() {
    const Json doc = read_json_file(o_.file);
    switch (detect_kind(doc)) {
      case StructureKind::Lattice:
        if (!o_.hasse) throw Error(ErrorKind::UnsupportedKind, "lattices export with --hasse");
        out_ << hasse_dot(lattice_from_json(doc));
        return kExitPass;
      case StructureKind::Graph:
        out_ << to_dot(graph_from_json(doc), o_.include_loops);
        return kExitPass;
      case StructureKind::Frame:
        out_ << to_dot(frame_from_json(doc));
        return kExitPass;
      default:
        throw Error(ErrorKind::UnsupportedKind, "morphisms have no DOT rendering");
    }
  }

  int suite() {
    if (!o_.seed) throw Error(ErrorKind::InvalidInput, "suite needs --seed");
    const std::size_t n = o_.suite_size.value_or(suite_max_size_from_env());
    const auto results = run_suite(*o_.seed, n);
    Json tasks = Json::array();
    bool pass = true;
    for (const auto& [name, r] : results) {
      Json t = to_json(r);
      t["task"] = name;
      tasks.push_back(t);
      pass = pass && r.verdict();
    }
    return emit(Json{{"seed", *o_.seed}, {"max_size", n}, {"verdict", pass}, {"tasks", tasks}}, pass);
  }

 private:
  static Json indices_to_names(const Bits& b, const std::vector<std::string>& names) {
    Json out = Json::array();
    for_each_bit(b, [&](std::size_t i) { out.push_back(names[i]); });
    return out;
  }

  static const Json& expect(const Json& doc, StructureKind kind) {
    const auto got = detect_kind(doc);
    if (got != kind)
      throw Error(ErrorKind::UnsupportedKind, "expected a " + std::string(to_string(kind)) + ", got a " +
                                                  std::string(to_string(got)));
    return doc;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite lattices, TiRS graphs and frames", "tirs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--all-witnesses", o.all_witnesses, "Report every witness instead of the first");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("file", o.file, "Structure file")->required()->check(CLI::ExistingFile);
    return s;
  };
  auto triple_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("source", o.source)->required()->check(CLI::ExistingFile);
    s->add_option("target", o.target)->required()->check(CLI::ExistingFile);
    s->add_option("morphism", o.morphism)->required()->check(CLI::ExistingFile);
    return s;
  };

  auto* check = file_cmd("check", "Check lattice, graph or frame conditions");
  auto* dual = file_cmd("dual", "Dual graph of a lattice");
  auto* rho_c = file_cmd("rho", "Frame of a graph");
  auto* gr_c = file_cmd("gr", "Graph of a frame");
  auto* rho_mor_c = triple_cmd("rho-mor", "Frame morphism induced by a graph morphism");
  auto* gr_mor_c = triple_cmd("gr-mor", "Graph morphism induced by a frame morphism");
  auto* canext = file_cmd("canext", "Canonical extension of a lattice");
  canext->add_option("--method", o.method, "tandem, polarity or both")
      ->check(CLI::IsMember({"tandem", "polarity", "both"}));
  auto* roundtrip = file_cmd("roundtrip", "Round-trip isomorphism");
  auto* pti = file_cmd("check-pti", "PTi condition");
  pti->add_flag("--frame", o.frame_form, "Use the frame form on the irreducibles frame");
  auto* morph = triple_cmd("check-morphism", "Validate a morphism");
  auto* nat = triple_cmd("check-naturality", "Naturality square of a morphism");
  auto* gen = app.add_subcommand("gen", "Generate structures");
  gen->add_option("--kind", o.kind, "poset, lattice, distributive-lattice, tirs-graph, rs-frame")
      ->required();
  gen->add_option("--size", o.size)->required();
  gen->add_option("--seed", o.seed);
  gen->add_option("--count", o.count)->check(CLI::PositiveNumber);
  gen->add_flag("--exhaustive", o.exhaustive);
  auto* dot = file_cmd("export-dot", "DOT rendering");
  dot->add_flag("--include-loops", o.include_loops);
  dot->add_flag("--hasse", o.hasse, "Hasse diagram of a lattice");
  auto* suite = app.add_subcommand("suite", "Run every module battery");
  suite->add_option("--seed", o.seed)->required();
  suite->add_option("--size", o.suite_size, "Overrides TIRS_SUITE_MAXSIZE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Session s(o, out);
  try {
    if (check->parsed()) return s.check();
    if (dual->parsed()) return s.dual();
    if (rho_c->parsed()) return s.rho_cmd();
    if (gr_c->parsed()) return s.gr_cmd();
    if (rho_mor_c->parsed()) return s.rho_mor_cmd();
    if (gr_mor_c->parsed()) return s.gr_mor_cmd();
    if (canext->parsed()) return s.canext();
    if (roundtrip->parsed()) return s.roundtrip();
    if (pti->parsed()) return s.check_pti_cmd();
    if (morph->parsed()) return s.check_morphism();
    if (nat->parsed()) return s.check_naturality_cmd();
    if (gen->parsed()) return s.gen();
    if (dot->parsed()) return s.export_dot();
    if (suite->parsed()) return s.suite();
  } catch (const Error& e) {
    if (is_property_failure(e.kind())) {
      Json doc{{"verdict", false},
               {"error", std::string(to_string(e.kind()))},
               {"message", e.what()},
               {"witness", e.witness()}};
      out << doc.dump(2) << "\n";
      return kExitPropertyFailed;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace tirs
