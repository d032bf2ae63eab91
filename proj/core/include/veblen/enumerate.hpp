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

#include <cstdint>
#include <optional>
#include <vector>

#include "veblen/canon.hpp"
#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

/// Largest edge count accepted by the abstract enumerator. Every vertex of a
/// Veblen graph has degree at least k, so d edges span at most d vertices.
inline constexpr unsigned kMaxAbstractEdges = 12;

struct IsoClassRecord {
  CanonicalCode code;
  /// Canonical relabeling onto 1..s.
  MultiHypergraph representative;
  std::uint64_t edge_count = 0;
  Natural aut_count;
  std::optional<Rational> assoc_coeff;
  /// Labeled copies inside a host; 0 when the record is not host-relative.
  Natural labeled_count;
};

struct OccurrenceCount {
  Rational value;
};

/// Connected Veblen k-graphs with d edges up to isomorphism, ordered by code.
/// Throws SizeExceeded if d exceeds kMaxAbstractEdges.
std::vector<IsoClassRecord> enumerate_connected_veblen(unsigned k, unsigned d,
                                                       bool with_coefficients = false,
                                                       unsigned jobs = 1);

/// Euler transform: all[d] counts multisets of connected classes with total
/// size d, given connected[1..].
std::vector<Natural> euler_transform(const std::vector<Natural>& connected);

/// Veblen k-graphs with d edges up to isomorphism, connected or not.
Natural count_all_veblen(unsigned k, unsigned d, unsigned jobs = 1);

/// Every multiplicity function on the host's edges with total d whose
/// support is connected and k-valent, grouped by isomorphism class. Each
/// record carries its labeled count and |Aut|; C_H is left unset.
std::vector<IsoClassRecord> connected_infragraph_classes(const SimpleHypergraph& host, unsigned d,
                                                         unsigned jobs = 1);

/// Injective vertex maps sending every edge of `pattern` (isolated vertices
/// ignored) onto a host edge.
Natural count_embeddings(const SimpleHypergraph& host, const MultiHypergraph& pattern);

/// Sub-hypergraphs of the host isomorphic to the simple `pattern`.
Natural count_subgraphs(const SimpleHypergraph& host, const SimpleHypergraph& pattern);

/// Occurrences of a Veblen hypergraph in a host, composed from per-component
/// labeled counts. Components may overlap inside the host. Throws NotVeblen.
OccurrenceCount count_infragraph(const SimpleHypergraph& host, const MultiHypergraph& h,
                                 unsigned jobs = 1);

}  // namespace veblen
