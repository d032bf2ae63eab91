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
#include <utility>
#include <vector>

#include "veblen/canon.hpp"
#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"

namespace veblen {

struct TraceVector {
  /// traces[d] = Tr_d for d in 0..D (traces[0] is unused and 0).
  std::vector<Rational> traces;
};

struct ClassContribution {
  CanonicalCode code;
  MultiHypergraph representative;
  Rational assoc_coeff;
  Natural labeled_count;
  /// -(k-1)^n * C_H * labeled_count: the single-component term of c_d.
  Rational contribution;
};

struct CoefficientTable {
  unsigned k = 0;
  Vertex n = 0;
  /// FNV-1a over the host's sorted edge list.
  std::uint64_t edge_hash = 0;
  unsigned max_codegree = 0;
  /// coefficients[d] = c_d for d in 0..max_codegree; c_0 = 1.
  std::vector<Rational> coefficients;
  TraceVector traces;
  /// Per codegree, the connected classes in code order.
  std::vector<std::vector<ClassContribution>> breakdown;
};

std::uint64_t edge_hash(const MultiHypergraph& h);

Rational trace_d(const SimpleHypergraph& host, unsigned d, unsigned jobs = 1);
TraceVector traces(const SimpleHypergraph& host, unsigned max_d, unsigned jobs = 1);

/// Literal expansion of the trace as differential operators drawn from the
/// adjacency hypermatrix, applied to tr(A^{d(k-1)}) by enumerating all n^L
/// closed index sequences. Throws SizeExceeded when n^L exceeds `budget`.
Rational trace_bruteforce(const SimpleHypergraph& host, unsigned d,
                          std::uint64_t budget = 10'000'000);

/// Schur polynomial P_d(t_1, ..., t_d) via P_d = (1/d) sum_j j t_j P_{d-j}.
/// t[0] is ignored; t must have at least d + 1 entries.
Rational schur_P(unsigned d, const std::vector<Rational>& t);

/// c_0..c_D assembled from the traces through Schur polynomials, checked
/// against the direct sum over (possibly disconnected) Veblen infragraphs.
/// Throws ConsistencyFailure with the first differing codegree.
CoefficientTable codegree_coefficients(const SimpleHypergraph& host, unsigned max_codegree,
                                       unsigned jobs = 1);

}  // namespace veblen
