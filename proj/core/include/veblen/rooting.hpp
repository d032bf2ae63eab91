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
#include <vector>

#include "veblen/digraph.hpp"
#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

/// Root choices for the edge copies of H, up to permuting identical copies:
/// copies[i][j] copies of the i-th distinct edge are rooted at its j-th
/// vertex.
struct RootAssignment {
  std::vector<std::vector<Multiplicity>> copies;
  /// Edges rooted at each vertex (index 0 unused).
  std::vector<std::uint64_t> root_counts;
};

/// A distinct Eulerian digraph D_R together with the total weight of the
/// root assignments producing it.
struct EulerOrientation {
  MultiDigraph digraph;
  std::vector<std::uint64_t> root_counts;
  /// Sum over producing assignments of prod_v r_v! / prod_{v,e} m_{v,e}!,
  /// the number of ways the copies rooted at each vertex can be ordered.
  Natural weight;
  /// Spanning in-trees at any root.
  Natural arborescences;
};

/// Digraph of the union of rooted stars: every copy of e rooted at v
/// contributes an arc v -> u for each other u in e.
MultiDigraph rooted_digraph(const MultiHypergraph& h, const RootAssignment& roots);

/// Distinct Euler orientations of a connected Veblen hypergraph, ordered by
/// digraph. Throws NotVeblen or NotConnected.
std::vector<EulerOrientation> euler_orientations(const MultiHypergraph& h);

/// sum over orientations of weight * arborescences / prod_v deg^-(v).
/// Throws NotVeblen or NotConnected.
Rational assoc_coeff_connected(const MultiHypergraph& h);

/// Product over components, memoized by canonical code. The empty
/// hypergraph has coefficient 1. Throws NotVeblen.
Rational assoc_coeff(const MultiHypergraph& h);

}  // namespace veblen
