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

#include "veblen/rooting.hpp"

#include <map>

#include "veblen/canon.hpp"
#include "veblen/errors.hpp"
#include "veblen/parallel.hpp"

namespace veblen {

namespace {

void require_connected_veblen(const MultiHypergraph& h) {
  if (!is_veblen(h)) throw NotVeblen("hypergraph is not Veblen");
  if (!is_connected(h)) throw NotConnected("hypergraph is not connected");
}

class RootingSearch {
 public:
  explicit RootingSearch(const MultiHypergraph& h) : h_(h) {
    for (const auto& [e, m] : h.edges()) {
      edges_.push_back(e);
      mult_.push_back(m);
    }
    capacity_.assign(h.n() + 1, 0);
    for (Vertex v = 1; v <= h.n(); ++v) capacity_[v] = h.degree(v) / h.k();
    roots_.copies.assign(edges_.size(), std::vector<Multiplicity>(h.k(), 0));
    roots_.root_counts = capacity_;
  }

  std::map<MultiDigraph, Natural> run() {
    assign_edge(0);
    return std::move(found_);
  }

 private:
  void assign_edge(std::size_t i) {
    if (i == edges_.size()) {
      Natural weight = 1;
      for (Vertex v = 1; v <= h_.n(); ++v) weight *= factorial(roots_.root_counts[v]);
      for (const auto& row : roots_.copies) {
        for (auto c : row) weight /= factorial(c);
      }
      found_[rooted_digraph(h_, roots_)] += weight;
      return;
    }
    split(i, 0, mult_[i]);
  }

  // Distributes the `left` copies of edge i over its vertices j.. with each
  // vertex bounded by its remaining root capacity deg(v)/k.
  void split(std::size_t i, std::size_t j, Multiplicity left) {
    const Edge& e = edges_[i];
    if (j + 1 == e.size()) {
      if (left > capacity_[e[j]]) return;
      place(i, j, left);
      assign_edge(i + 1);
      place(i, j, 0);
      return;
    }
    Multiplicity hi = std::min<Multiplicity>(left, capacity_[e[j]]);
    for (Multiplicity c = 0; c <= hi; ++c) {
      place(i, j, c);
      split(i, j + 1, left - c);
      place(i, j, 0);
    }
  }

  void place(std::size_t i, std::size_t j, Multiplicity c) {
    Vertex v = edges_[i][j];
    capacity_[v] += roots_.copies[i][j];
    capacity_[v] -= c;
    roots_.copies[i][j] = c;
  }

  const MultiHypergraph& h_;
  std::vector<Edge> edges_;
  std::vector<Multiplicity> mult_;
  std::vector<std::uint64_t> capacity_;
  RootAssignment roots_;
  std::map<MultiDigraph, Natural> found_;
};

}  // namespace

MultiDigraph rooted_digraph(const MultiHypergraph& h, const RootAssignment& roots) {
  std::map<Arc, std::uint64_t> arcs;
  std::size_t i = 0;
  for (const auto& entry : h.edges()) {
    const Edge& e = entry.first;
    for (std::size_t j = 0; j < e.size(); ++j) {
      Multiplicity c = roots.copies.at(i).at(j);
      if (!c) continue;
      for (Vertex u : e) {
        if (u != e[j]) arcs[{e[j], u}] += c;
      }
    }
    ++i;
  }
  return MultiDigraph(h.support(), arcs);
}

std::vector<EulerOrientation> euler_orientations(const MultiHypergraph& h) {
  require_connected_veblen(h);
  std::vector<EulerOrientation> out;
  for (auto& [digraph, weight] : RootingSearch(h).run()) {
    if (!is_eulerian(digraph)) continue;
    EulerOrientation o;
    o.root_counts.assign(h.n() + 1, 0);
    for (Vertex v : digraph.vertices()) o.root_counts[v] = digraph.out_degree(v) / (h.k() - 1);
    o.arborescences = arborescence_count(digraph, digraph.vertices().front());
    o.digraph = digraph;
    o.weight = weight;
    out.push_back(std::move(o));
  }
  return out;
}

Rational assoc_coeff_connected(const MultiHypergraph& h) {
  std::vector<EulerOrientation> orientations = euler_orientations(h);
  Natural denominator = 1;
  for (Vertex v : h.support()) denominator *= (h.k() - 1) * (h.degree(v) / h.k());
  Natural numerator = 0;
  for (const auto& o : orientations) numerator += o.weight * o.arborescences;
  Rational out(numerator, denominator);
  out.canonicalize();
  return out;
}

Rational assoc_coeff(const MultiHypergraph& h) {
  if (!is_veblen(h)) throw NotVeblen("hypergraph is not Veblen");
  static ConcurrentMemo<CanonicalCode, Rational> memo;
  Rational out = 1;
  for (const auto& part : components(h)) {
    CanonicalCode code;
    try {
      code = canonical_form(part);
    } catch (const SizeExceeded&) {
      out *= assoc_coeff_connected(part);
      continue;
    }
    out *= memo.get_or_compute(code, [&] { return assoc_coeff_connected(part); });
  }
  return out;
}

}  // namespace veblen
