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

#include "veblen/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "veblen/errors.hpp"

namespace veblen {

MultiDigraph::MultiDigraph(std::vector<Vertex> vertices, const std::map<Arc, std::uint64_t>& arcs)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  out_.assign(vertices_.size(), 0);
  in_.assign(vertices_.size(), 0);
  for (const auto& [arc, mult] : arcs) {
    if (mult == 0) continue;
    std::size_t from = index_of(arc.first);
    std::size_t to = index_of(arc.second);
    arcs_.emplace(arc, mult);
    arc_count_ += mult;
    out_[from] += mult;
    in_[to] += mult;
  }
}

std::size_t MultiDigraph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw DomainError("vertex " + std::to_string(v) + " is not in the digraph");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::uint64_t MultiDigraph::out_degree(Vertex v) const { return out_[index_of(v)]; }
std::uint64_t MultiDigraph::in_degree(Vertex v) const { return in_[index_of(v)]; }

Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntegerMatrix laplacian(const MultiDigraph& d) {
  const auto& vs = d.vertices();
  std::size_t n = vs.size();
  IntegerMatrix l(n, std::vector<Integer>(n, 0));
  auto pos = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const auto& [arc, mult] : d.arcs()) {
    if (arc.first == arc.second) continue;
    std::size_t a = pos(arc.first), b = pos(arc.second);
    l[a][a] += mult;
    l[a][b] -= mult;
  }
  return l;
}

namespace {

std::vector<Vertex> active_vertices(const MultiDigraph& d) {
  std::vector<Vertex> out;
  for (Vertex v : d.vertices()) {
    if (d.out_degree(v) + d.in_degree(v) > 0) out.push_back(v);
  }
  return out;
}

bool weakly_connected(const MultiDigraph& d, const std::vector<Vertex>& active) {
  if (active.empty()) return false;
  std::map<Vertex, std::vector<Vertex>> adjacent;
  for (const auto& entry : d.arcs()) {
    adjacent[entry.first.first].push_back(entry.first.second);
    adjacent[entry.first.second].push_back(entry.first.first);
  }
  std::map<Vertex, bool> seen;
  std::vector<Vertex> stack{active.front()};
  seen[active.front()] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adjacent[v]) {
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return std::all_of(active.begin(), active.end(), [&](Vertex v) { return seen[v]; });
}

}  // namespace

bool is_eulerian(const MultiDigraph& d) {
  for (Vertex v : d.vertices()) {
    if (d.out_degree(v) != d.in_degree(v)) return false;
  }
  return weakly_connected(d, active_vertices(d));
}

Natural arborescence_count(const MultiDigraph& d, Vertex root) {
  const auto& vs = d.vertices();
  auto it = std::lower_bound(vs.begin(), vs.end(), root);
  if (it == vs.end() || *it != root) {
    throw DomainError("root " + std::to_string(root) + " is not in the digraph");
  }
  std::size_t r = static_cast<std::size_t>(it - vs.begin());
  IntegerMatrix l = laplacian(d);
  l.erase(l.begin() + static_cast<std::ptrdiff_t>(r));
  for (auto& row : l) row.erase(row.begin() + static_cast<std::ptrdiff_t>(r));
  return determinant(std::move(l));
}

Natural euler_circuit_count(const MultiDigraph& d) {
  if (!is_eulerian(d)) throw NotEulerian("digraph is not Eulerian");
  std::vector<Vertex> active = active_vertices(d);
  MultiDigraph support(active, d.arcs());
  Natural out = arborescence_count(support, active.front());
  for (Vertex v : active) out *= factorial(d.in_degree(v) - 1);
  return out;
}

Natural euler_circuit_count_bruteforce(const MultiDigraph& d, std::size_t max_arcs) {
  if (!is_eulerian(d)) throw NotEulerian("digraph is not Eulerian");
  if (d.arc_count() > max_arcs) {
    throw SizeExceeded("brute-force circuit count supports at most " + std::to_string(max_arcs) +
                       " arcs");
  }
  std::vector<Arc> arcs;
  for (const auto& [arc, mult] : d.arcs()) {
    for (std::uint64_t i = 0; i < mult; ++i) arcs.push_back(arc);
  }
  std::vector<char> used(arcs.size(), 0);
  Natural tours = 0;
  // Counts closed tours with a distinguished first arc.
  std::function<void(Vertex, Vertex, std::size_t)> walk = [&](Vertex start, Vertex at,
                                                              std::size_t depth) {
    if (depth == arcs.size()) {
      if (at == start) tours += 1;
      return;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (used[i] || arcs[i].first != at) continue;
      used[i] = 1;
      walk(start, arcs[i].second, depth + 1);
      used[i] = 0;
    }
  };
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    used[i] = 1;
    walk(arcs[i].first, arcs[i].second, 1);
    used[i] = 0;
  }
  return tours / static_cast<unsigned long>(arcs.size());
}

}  // namespace veblen
