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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

using Arc = std::pair<Vertex, Vertex>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Directed multigraph on an explicit vertex list. Parallel arcs are stored
/// as a multiplicity but treated as distinguishable when counting circuits.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  /// Throws DomainError if an arc leaves the vertex list or has
  /// multiplicity 0.
  MultiDigraph(std::vector<Vertex> vertices, const std::map<Arc, std::uint64_t>& arcs);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::map<Arc, std::uint64_t>& arcs() const noexcept { return arcs_; }
  std::uint64_t arc_count() const noexcept { return arc_count_; }
  std::uint64_t out_degree(Vertex v) const;
  std::uint64_t in_degree(Vertex v) const;

  friend bool operator==(const MultiDigraph&, const MultiDigraph&) = default;
  friend auto operator<=>(const MultiDigraph& a, const MultiDigraph& b) {
    return std::tie(a.vertices_, a.arcs_) <=> std::tie(b.vertices_, b.arcs_);
  }

 private:
  std::size_t index_of(Vertex v) const;

  std::vector<Vertex> vertices_;
  std::map<Arc, std::uint64_t> arcs_;
  std::uint64_t arc_count_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

/// Fraction-free Gaussian elimination; the empty matrix has determinant 1.
Integer determinant(IntegerMatrix m);

/// Out-degree Laplacian L = diag(deg+) - A over the vertex list (loops
/// ignored).
IntegerMatrix laplacian(const MultiDigraph& d);

/// Balanced at every vertex and weakly connected on the vertices that carry
/// arcs. A digraph without arcs is not Eulerian.
bool is_eulerian(const MultiDigraph& d);

/// Spanning in-trees converging to `root`, by the Matrix-Tree theorem.
Natural arborescence_count(const MultiDigraph& d, Vertex root);

/// Euler circuits up to rotation (BEST theorem). Throws NotEulerian.
Natural euler_circuit_count(const MultiDigraph& d);

/// Exhaustive tour enumeration for at most `max_arcs` arcs. Throws
/// NotEulerian or SizeExceeded.
Natural euler_circuit_count_bruteforce(const MultiDigraph& d, std::size_t max_arcs = 10);

}  // namespace veblen
