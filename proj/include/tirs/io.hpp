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

#ifndef TIRS_IO_HPP_
#define TIRS_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"

#include "tirs/functors.hpp"
#include "tirs/galois.hpp"
#include "tirs/lattice.hpp"
#include "tirs/ploscica.hpp"
#include "tirs/pti.hpp"
#include "tirs/report.hpp"
#include "tirs/structures.hpp"

namespace tirs {

using Json = nlohmann::ordered_json;

enum class StructureKind { Lattice, Graph, Frame, GraphMorphism, FrameMorphism };

std::string_view to_string(StructureKind kind);

/// Kind of a structure document, by its distinguishing key. Throws
/// InvalidInput if none matches.
StructureKind detect_kind(const Json& doc);

Json read_json_file(const std::filesystem::path& path);

// Lattice: {"elements": [..], "covers": [[lo, hi], ..]}; serialization adds
// {"leq": [[a, b], ..]}. A "leq" on input is checked against the closure.
Json to_json(const FiniteLattice& lattice);
FiniteLattice lattice_from_json(const Json& doc);

// Graph: {"vertices": [..], "edges": [[x, y], ..]}.
Json to_json(const Graph& graph);
Graph graph_from_json(const Json& doc);
/// Graph plus {"vertex_meta": {"p0": {"ones": [..], "zeros": [..]}, ..}}.
Json to_json(const DualGraph& dual, const FiniteLattice& lattice);

// Frame: {"x1": [..], "x2": [..], "r": [[x, y], ..]}.
Json to_json(const Frame& frame);
Frame frame_from_json(const Json& doc);

// Morphisms: {"map": [[from, to], ..]} and {"map1": [..], "map2": [..]}.
Json to_json(const GraphMorphism& m);
GraphMorphism graph_morphism_from_json(const Json& doc, const Graph& source, const Graph& target);
Json to_json(const FrameMorphism& m);
FrameMorphism frame_morphism_from_json(const Json& doc, const Frame& source, const Frame& target);

/// Lattice document plus "closed_sets", "j_infty" and "m_infty".
Json to_json(const GaloisLattice& gl);

Json to_json(const LatticeEmbedding& emb);
Json to_json(const CheckReport& report);
Json to_json(const ConditionReport& report);
Json pti_to_json(const PTiReport& report, const FiniteLattice& lattice);
Json pti_to_json(const PTiReport& report, const Frame& frame);

/// Directed graph, loops omitted unless requested.
std::string to_dot(const Graph& graph, bool include_loops = false);
/// Bipartite rendering of R.
std::string to_dot(const Frame& frame);
/// Covers-only digraph drawn bottom to top.
std::string hasse_dot(const FiniteLattice& lattice);

}  // namespace tirs

#endif  // TIRS_IO_HPP_
