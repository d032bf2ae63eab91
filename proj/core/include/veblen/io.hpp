// Copyright 2026 The veblen Authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veblen/enumerate.hpp"
#include "veblen/hypergraph.hpp"
#include "veblen/simplex.hpp"
#include "veblen/spectra.hpp"

namespace veblen {

struct EdgeRecord {
  std::vector<Vertex> vertices;
  Multiplicity mult = 1;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct HypergraphDocument {
  unsigned k = 0;
  Vertex n = 0;
  std::optional<std::string> name;
  std::vector<EdgeRecord> edges;

  /// Repeated records accumulate.
  MultiHypergraph to_hypergraph() const;
  static HypergraphDocument from_hypergraph(const MultiHypergraph& h,
                                            std::optional<std::string> name = std::nullopt);
  friend bool operator==(const HypergraphDocument&, const HypergraphDocument&) = default;
};

/// Line format:
///
///   # comment
///   k=3 n=7 name=Fano plane
///   1 2 3
///   1 4 5 x2
///
/// A document whose first non-blank character is '{' is read as the
/// structured (JSON) format {"k", "n", "name", "edges": [{"vertices", "mult"}]}.
/// Throws ParseError, ArityError or VertexRangeError.
HypergraphDocument parse_document(std::string_view text);
MultiHypergraph parse_hypergraph(std::string_view text);

std::string serialize_line(const HypergraphDocument& doc);
std::string serialize_structured(const HypergraphDocument& doc);

enum class Format { structured, csv, human };
/// Throws UsageError for an unknown name.
Format parse_format(std::string_view name);

/// Rationals are rendered "p/q" (integers "p"); codegrees ascend.
std::string emit_table(const CoefficientTable& table, Format format, bool breakdown = false);
std::string emit_traces(const TraceVector& traces, unsigned k, Vertex n, Format format);

/// Edge multiset as "1,2,3^3 1,2,4".
std::string edges_text(const MultiHypergraph& h);
/// code<TAB>d<TAB>edges<TAB>C_H<TAB>aut; C_H is "-" when not computed.
std::string atlas_line(const IsoClassRecord& record);

std::string emit_simplex_report(const SimplexCoefficientReport& report, Format format,
                                bool asymptotics);

}  // namespace veblen
