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

#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"
#include "veblen/polynomial.hpp"

namespace veblen {

/// Simple graphs are SimpleHypergraph values with k = 2.

inline constexpr Vertex kCharpolyMaxVertices = 12;
inline constexpr std::uint64_t kPartitionSumMaxEdges = 8;

/// det(xI - A) for the 0/1 adjacency matrix. Throws SizeExceeded above
/// kCharpolyMaxVertices vertices.
IntPolynomial charpoly_graph(const SimpleHypergraph& g);

/// Coefficient of x^{n-d}: sum over elementary subgraphs on d vertices of
/// (-1)^{components} 2^{cycles}.
Integer harary_sachs_coeffs(const SimpleHypergraph& g, unsigned d);

/// Euler circuits of a connected even multigraph, parallel edges
/// distinguishable and both traversal directions counted, over
/// prod_e m(e)!. Throws NotVeblen or NotConnected.
Rational graph_assoc_coeff(const MultiHypergraph& g);

/// -sum over partitions P of g into connected Veblen parts of
/// (-1)^{|P|} prod C_{P_i} / prod_j s_j!, where s_j counts parts that are
/// equal as labeled multigraphs. Evaluates to 1 on 2-cycles, 2 on simple
/// cycles and 0 otherwise. Throws NotVeblen, NotConnected or SizeExceeded.
Rational partition_sum_check(const MultiHypergraph& g);

/// 9 * 2^{v-3}; throws DomainError for v < 3.
Natural threshold_single_edge(unsigned v);
/// (-1)^t binom(3 * 2^{v-3}, t), the codegree-3t coefficient of a single
/// 3-edge on v vertices.
Integer single_edge_f(unsigned v, unsigned t);

struct ThresholdReport {
  unsigned k = 0;
  /// Ambient vertex count, taken as the host's n.
  Vertex v = 0;
  unsigned dmax = 0;
  /// Largest d <= dmax with c_d != 0.
  std::optional<unsigned> threshold;
  Rational witness;
  /// True only when a closed form certifies the threshold (single 3-edge
  /// host with dmax at or beyond it); otherwise `threshold` is a lower bound.
  bool exact = false;
};

ThresholdReport threshold_search(const SimpleHypergraph& host, unsigned dmax, unsigned jobs = 1);

/// One representative per isomorphism class of simple graphs on exactly n
/// vertices (isolated vertices allowed), in code order.
std::vector<SimpleHypergraph> graphs_up_to_isomorphism(Vertex n);

struct ClassicalSweepReport {
  std::uint64_t graphs = 0;
  std::uint64_t harary_sachs_mismatches = 0;
  std::uint64_t pipeline_mismatches = 0;
};

/// For every graph class on n <= max_n vertices, compares the Harary-Sachs
/// sum and the generalized k = 2 pipeline with the characteristic polynomial.
ClassicalSweepReport classical_sweep(Vertex max_n, unsigned jobs = 1);

}  // namespace veblen
