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

#include "veblen/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "veblen/canon.hpp"
#include "veblen/digraph.hpp"
#include "veblen/errors.hpp"
#include "veblen/parallel.hpp"
#include "veblen/rooting.hpp"
#include "veblen/spectra.hpp"

namespace veblen {

namespace {

void require_graph(const MultiHypergraph& g) {
  if (g.k() != 2) throw DomainError("expected a graph (k = 2)");
}

}  // namespace

IntPolynomial charpoly_graph(const SimpleHypergraph& g) {
  require_graph(g);
  if (g.n() > kCharpolyMaxVertices) {
    throw SizeExceeded("characteristic polynomial oracle supports at most " +
                       std::to_string(kCharpolyMaxVertices) + " vertices");
  }
  IntegerMatrix a(g.n(), std::vector<Integer>(g.n(), 0));
  for (const auto& e : g.edge_list()) {
    a[e[0] - 1][e[1] - 1] = 1;
    a[e[1] - 1][e[0] - 1] = 1;
  }
  return charpoly_integer_matrix(a);
}

Integer harary_sachs_coeffs(const SimpleHypergraph& g, unsigned d) {
  require_graph(g);
  const Vertex n = g.n();
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (const auto& e : g.edge_list()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;

  std::vector<char> covered(n + 1, 0);
  Integer total = 0;
  // Each component is charged to its smallest vertex; a cycle through
  // v = min is listed once by requiring path[1] < path.back().
  std::function<void(Vertex, unsigned, int, unsigned)> walk;
  std::function<void(Vertex, std::vector<Vertex>&, unsigned, int, unsigned)> extend_cycle =
      [&](Vertex v, std::vector<Vertex>& path, unsigned left, int sign, unsigned cycles) {
        Vertex tail = path.back();
        if (path.size() >= 3 && adj[tail][v] && path[1] < tail) {
          walk(v + 1, left - static_cast<unsigned>(path.size()), -sign, cycles + 1);
        }
        if (path.size() >= left) return;
        for (Vertex u = v + 1; u <= n; ++u) {
          if (covered[u] || !adj[tail][u]) continue;
          covered[u] = 1;
          path.push_back(u);
          extend_cycle(v, path, left, sign, cycles);
          path.pop_back();
          covered[u] = 0;
        }
      };
  walk = [&](Vertex v, unsigned left, int sign, unsigned cycles) {
    if (left == 0) {
      Integer term = power(2, cycles);
      total += sign > 0 ? term : Integer(-term);
      return;
    }
    if (v > n) return;
    if (covered[v]) {
      walk(v + 1, left, sign, cycles);
      return;
    }
    walk(v + 1, left, sign, cycles);
    if (left < 2) return;
    covered[v] = 1;
    for (Vertex u = v + 1; u <= n; ++u) {
      if (covered[u] || !adj[v][u]) continue;
      covered[u] = 1;
      walk(v + 1, left - 2, -sign, cycles);
      covered[u] = 0;
    }
    std::vector<Vertex> path{v};
    extend_cycle(v, path, left, sign, cycles);
    covered[v] = 0;
  };
  walk(1, d, 1, 0);
  return total;
}

Rational graph_assoc_coeff(const MultiHypergraph& g) {
  require_graph(g);
  if (!is_veblen(g)) throw NotVeblen("graph has a vertex of odd degree");
  if (!is_connected(g)) throw NotConnected("graph is not connected");
  std::vector<std::pair<Edge, Multiplicity>> edges(g.edges().begin(), g.edges().end());
  std::vector<Multiplicity> forward(edges.size(), 0);
  std::vector<std::int64_t> balance(g.n() + 1, 0);
  Natural circuits = 0;
  // Orient o_e copies of e = {a, b} as a -> b and the rest as b -> a; parallel
  // copies are distinguishable, hence the binomial factor.
  std::function<void(std::size_t)> orient = [&](std::size_t i) {
    if (i == edges.size()) {
      if (std::any_of(balance.begin(), balance.end(), [](auto x) { return x != 0; })) return;
      std::map<Arc, std::uint64_t> arcs;
      Natural ways = 1;
      for (std::size_t j = 0; j < edges.size(); ++j) {
        const auto& [e, m] = edges[j];
        if (forward[j]) arcs[{e[0], e[1]}] += forward[j];
        if (m - forward[j]) arcs[{e[1], e[0]}] += m - forward[j];
        ways *= binomial(m, forward[j]);
      }
      circuits += ways * euler_circuit_count(MultiDigraph(g.support(), arcs));
      return;
    }
    const auto& [e, m] = edges[i];
    for (Multiplicity o = 0; o <= m; ++o) {
      auto shift = static_cast<std::int64_t>(2 * o) - static_cast<std::int64_t>(m);
      balance[e[0]] += shift;
      balance[e[1]] -= shift;
      forward[i] = o;
      orient(i + 1);
      balance[e[0]] -= shift;
      balance[e[1]] += shift;
    }
  };
  orient(0);
  Natural denominator = 1;
  for (const auto& [e, m] : edges) denominator *= factorial(m);
  Rational out(circuits, denominator);
  out.canonicalize();
  return out;
}

Rational partition_sum_check(const MultiHypergraph& g) {
  require_graph(g);
  if (!is_veblen(g)) throw NotVeblen("graph has a vertex of odd degree");
  if (!is_connected(g)) throw NotConnected("graph is not connected");
  if (g.edge_count() > kPartitionSumMaxEdges) {
    throw SizeExceeded("partition sum supports at most " + std::to_string(kPartitionSumMaxEdges) +
                       " edges");
  }
  Rational total = 0;
  for (const auto& partition : veblen_partitions(g, PartKind::connected)) {
    Rational term = partition.size() % 2 ? Rational(-1) : Rational(1);
    for (const auto& part : partition) term *= assoc_coeff_connected(part);
    // Parts arrive sorted, so equal parts are adjacent.
    for (std::size_t i = 0; i < partition.size();) {
      std::size_t j = i;
      while (j < partition.size() && partition[j] == partition[i]) ++j;
      term /= factorial(j - i);
      i = j;
    }
    total += term;
  }
  return -total;
}

Natural threshold_single_edge(unsigned v) {
  if (v < 3) throw DomainError("threshold of a single edge needs v >= 3");
  return 9 * power(2, v - 3);
}

Integer single_edge_f(unsigned v, unsigned t) {
  if (v < 3) throw DomainError("single-edge coefficients need v >= 3");
  Natural top = 3 * power(2, v - 3);
  Integer out = binomial(top.get_ui(), t);
  return t % 2 ? Integer(-out) : out;
}

ThresholdReport threshold_search(const SimpleHypergraph& host, unsigned dmax, unsigned jobs) {
  ThresholdReport report;
  report.k = host.k();
  report.v = host.n();
  report.dmax = dmax;
  report.witness = 0;
  CoefficientTable table = codegree_coefficients(host, dmax, jobs);
  for (unsigned d = dmax; d >= 1; --d) {
    if (table.coefficients[d] != 0) {
      report.threshold = d;
      report.witness = table.coefficients[d];
      break;
    }
  }
  if (host.k() == 3 && host.multi().distinct_edge_count() == 1 && host.n() >= 3 &&
      report.threshold) {
    report.exact = threshold_single_edge(host.n()) == *report.threshold;
  }
  return report;
}

std::vector<SimpleHypergraph> graphs_up_to_isomorphism(Vertex n) {
  if (n > 7) throw SizeExceeded("graph enumeration supports at most 7 vertices");
  std::vector<Edge> pairs;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) pairs.push_back({a, b});
  }
  std::map<CanonicalCode, SimpleHypergraph> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    SimpleHypergraph g(2, n, edges);
    classes.try_emplace(canonical_form(g), g);
  }
  std::vector<SimpleHypergraph> out;
  for (auto& entry : classes) out.push_back(std::move(entry.second));
  return out;
}

ClassicalSweepReport classical_sweep(Vertex max_n, unsigned jobs) {
  ClassicalSweepReport report;
  for (Vertex n = 1; n <= max_n; ++n) {
    std::vector<SimpleHypergraph> graphs = graphs_up_to_isomorphism(n);
    std::vector<char> hs_bad(graphs.size(), 0), pipe_bad(graphs.size(), 0);
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
      const auto& g = graphs[i];
      IntPolynomial p = charpoly_graph(g);
      CoefficientTable table = codegree_coefficients(g, n);
      for (unsigned d = 0; d <= n; ++d) {
        Integer expected = p[n - d];
        if (harary_sachs_coeffs(g, d) != expected) hs_bad[i] = 1;
        if (table.coefficients[d] != Rational(expected)) pipe_bad[i] = 1;
      }
    });
    report.graphs += graphs.size();
    report.harary_sachs_mismatches += std::count(hs_bad.begin(), hs_bad.end(), 1);
    report.pipeline_mismatches += std::count(pipe_bad.begin(), pipe_bad.end(), 1);
  }
  return report;
}

}  // namespace veblen
