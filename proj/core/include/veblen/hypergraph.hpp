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

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace veblen {

/// Vertices are 1-based.
using Vertex = std::uint32_t;
/// A k-element vertex set, kept sorted ascending.
using Edge = std::vector<Vertex>;
using Multiplicity = std::uint64_t;
using EdgeMap = std::map<Edge, Multiplicity>;

/// A k-uniform multi-hypergraph on vertices 1..n. Isolated vertices are
/// allowed and significant, so n is stored explicitly. Immutable.
class MultiHypergraph {
 public:
  MultiHypergraph(unsigned k, Vertex n);
  /// Validates every edge; throws DomainError on a malformed edge or a zero
  /// multiplicity. Unsorted edges are sorted.
  MultiHypergraph(unsigned k, Vertex n, const EdgeMap& edges);
  /// Accumulates repeated edges.
  static MultiHypergraph from_list(unsigned k, Vertex n,
                                   const std::vector<std::pair<Edge, Multiplicity>>& edges);

  unsigned k() const noexcept { return k_; }
  Vertex n() const noexcept { return n_; }
  const EdgeMap& edges() const noexcept { return edges_; }
  /// Total number of edges counted with multiplicity (d).
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  std::size_t distinct_edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  Multiplicity multiplicity(const Edge& e) const;

  /// Degrees counted with multiplicity; index 0 is unused.
  const std::vector<std::uint64_t>& degrees() const noexcept { return degree_; }
  std::uint64_t degree(Vertex v) const { return degree_.at(v); }
  /// Non-isolated vertices, ascending.
  std::vector<Vertex> support() const;

  /// Same edges on a different vertex count; n must cover every edge.
  MultiHypergraph with_vertex_count(Vertex n) const;

  friend bool operator==(const MultiHypergraph&, const MultiHypergraph&) = default;

 private:
  unsigned k_;
  Vertex n_;
  EdgeMap edges_;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> degree_;
};

/// A MultiHypergraph with every multiplicity equal to 1.
class SimpleHypergraph {
 public:
  /// Throws DomainError if some multiplicity exceeds 1.
  explicit SimpleHypergraph(MultiHypergraph graph);
  SimpleHypergraph(unsigned k, Vertex n, const std::vector<Edge>& edges);

  const MultiHypergraph& multi() const noexcept { return graph_; }
  operator const MultiHypergraph&() const noexcept { return graph_; }
  unsigned k() const noexcept { return graph_.k(); }
  Vertex n() const noexcept { return graph_.n(); }
  std::vector<Edge> edge_list() const;

  friend bool operator==(const SimpleHypergraph&, const SimpleHypergraph&) = default;

 private:
  MultiHypergraph graph_;
};

SimpleHypergraph flatten(const MultiHypergraph& h);

/// Connected components ordered by smallest vertex. Each keeps the original
/// labels and vertex count n; isolated vertices belong to no component.
std::vector<MultiHypergraph> components(const MultiHypergraph& h);
std::size_t component_count(const MultiHypergraph& h);
/// Exactly one component.
bool is_connected(const MultiHypergraph& h);

/// Every vertex degree (with multiplicity) is divisible by k.
bool is_veblen(const MultiHypergraph& h);

/// Relabels the support to 1..s in ascending order; n becomes s.
MultiHypergraph compact(const MultiHypergraph& h);
/// Applies v -> image[v] (index 0 unused) and sets the vertex count to n.
MultiHypergraph relabel(const MultiHypergraph& h, const std::vector<Vertex>& image, Vertex n);
/// Multiplicity-summing union on a common vertex count.
MultiHypergraph sum(const MultiHypergraph& a, const MultiHypergraph& b);

enum class PartKind {
  any,        // every part is a Veblen multi-hypergraph
  connected,  // every part is additionally connected
};

/// All multisets of nonempty Veblen parts whose multiplicities sum to h.
/// Parts are listed in non-increasing lexicographic order of their
/// multiplicity vectors, and partitions in lexicographic order of those
/// sequences, largest first. Requires is_veblen(h).
std::vector<std::vector<MultiHypergraph>> veblen_partitions(const MultiHypergraph& h,
                                                            PartKind kind = PartKind::any);

}  // namespace veblen
