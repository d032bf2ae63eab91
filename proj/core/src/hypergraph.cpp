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

#include "veblen/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "veblen/errors.hpp"

namespace veblen {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_text(const Edge& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(e[i]);
  }
  return out + ")";
}

}  // namespace

MultiHypergraph::MultiHypergraph(unsigned k, Vertex n) : k_(k), n_(n), degree_(n + 1, 0) {
  if (k < 2) throw DomainError("uniformity must be at least 2");
}

MultiHypergraph::MultiHypergraph(unsigned k, Vertex n, const EdgeMap& edges)
    : MultiHypergraph(k, n) {
  for (const auto& [raw, mult] : edges) {
    Edge e = raw;
    std::sort(e.begin(), e.end());
    if (e.size() != k) {
      throw DomainError("edge " + edge_text(raw) + " does not have " + std::to_string(k) +
                        " vertices");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw DomainError("edge " + edge_text(raw) + " repeats a vertex");
    }
    if (e.front() < 1 || e.back() > n) {
      throw DomainError("edge " + edge_text(raw) + " leaves the vertex range 1.." +
                        std::to_string(n));
    }
    if (mult == 0) throw DomainError("edge " + edge_text(raw) + " has multiplicity 0");
    edges_[e] += mult;
    edge_count_ += mult;
    for (Vertex v : e) degree_[v] += mult;
  }
}

MultiHypergraph MultiHypergraph::from_list(
    unsigned k, Vertex n, const std::vector<std::pair<Edge, Multiplicity>>& edges) {
  MultiHypergraph out(k, n);
  EdgeMap merged;
  for (const auto& [e, mult] : edges) {
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (mult == 0) throw DomainError("edge " + edge_text(e) + " has multiplicity 0");
    merged[sorted] += mult;
  }
  return MultiHypergraph(k, n, merged);
}

Multiplicity MultiHypergraph::multiplicity(const Edge& e) const {
  auto it = edges_.find(e);
  return it == edges_.end() ? 0 : it->second;
}

std::vector<Vertex> MultiHypergraph::support() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n_; ++v) {
    if (degree_[v] > 0) out.push_back(v);
  }
  return out;
}

MultiHypergraph MultiHypergraph::with_vertex_count(Vertex n) const {
  return MultiHypergraph(k_, n, edges_);
}

SimpleHypergraph::SimpleHypergraph(MultiHypergraph graph) : graph_(std::move(graph)) {
  for (const auto& [e, mult] : graph_.edges()) {
    if (mult != 1) throw DomainError("simple hypergraph has repeated edge " + edge_text(e));
  }
}

SimpleHypergraph::SimpleHypergraph(unsigned k, Vertex n, const std::vector<Edge>& edges)
    : SimpleHypergraph([&] {
        EdgeMap map;
        for (Edge e : edges) {
          std::sort(e.begin(), e.end());
          map[e] += 1;
        }
        return MultiHypergraph(k, n, map);
      }()) {}

std::vector<Edge> SimpleHypergraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(graph_.distinct_edge_count());
  for (const auto& entry : graph_.edges()) out.push_back(entry.first);
  return out;
}

SimpleHypergraph flatten(const MultiHypergraph& h) {
  EdgeMap map;
  for (const auto& entry : h.edges()) map.emplace(entry.first, 1);
  return SimpleHypergraph(MultiHypergraph(h.k(), h.n(), map));
}

std::vector<MultiHypergraph> components(const MultiHypergraph& h) {
  DisjointSets sets(h.n() + 1);
  for (const auto& entry : h.edges()) {
    const Edge& e = entry.first;
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(e[0], e[i]);
  }
  std::map<std::size_t, std::size_t> slot_of_root;
  std::vector<EdgeMap> parts;
  for (Vertex v : h.support()) {
    if (slot_of_root.emplace(sets.find(v), parts.size()).second) parts.emplace_back();
  }
  for (const auto& [e, mult] : h.edges()) parts[slot_of_root.at(sets.find(e[0]))][e] = mult;
  std::vector<MultiHypergraph> out;
  out.reserve(parts.size());
  for (const auto& edges : parts) out.emplace_back(h.k(), h.n(), edges);
  return out;
}

std::size_t component_count(const MultiHypergraph& h) {
  DisjointSets sets(h.n() + 1);
  for (const auto& entry : h.edges()) {
    const Edge& e = entry.first;
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(e[0], e[i]);
  }
  std::size_t count = 0;
  for (Vertex v : h.support()) count += sets.find(v) == v;
  return count;
}

bool is_connected(const MultiHypergraph& h) { return component_count(h) == 1; }

bool is_veblen(const MultiHypergraph& h) {
  const auto& deg = h.degrees();
  return std::all_of(deg.begin(), deg.end(), [&](std::uint64_t d) { return d % h.k() == 0; });
}

MultiHypergraph compact(const MultiHypergraph& h) {
  std::vector<Vertex> image(h.n() + 1, 0);
  Vertex next = 0;
  for (Vertex v : h.support()) image[v] = ++next;
  return relabel(h, image, next);
}

MultiHypergraph relabel(const MultiHypergraph& h, const std::vector<Vertex>& image, Vertex n) {
  EdgeMap map;
  for (const auto& [e, mult] : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) mapped.push_back(image.at(v));
    std::sort(mapped.begin(), mapped.end());
    map[mapped] += mult;
  }
  return MultiHypergraph(h.k(), n, map);
}

MultiHypergraph sum(const MultiHypergraph& a, const MultiHypergraph& b) {
  if (a.k() != b.k()) throw DomainError("cannot add hypergraphs of different uniformity");
  EdgeMap map = a.edges();
  for (const auto& [e, mult] : b.edges()) map[e] += mult;
  return MultiHypergraph(a.k(), std::max(a.n(), b.n()), map);
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const MultiHypergraph& h, PartKind kind) : h_(h), kind_(kind) {
    for (const auto& [e, mult] : h.edges()) {
      edges_.push_back(e);
      remaining_.push_back(mult);
    }
  }

  std::vector<std::vector<MultiHypergraph>> run() {
    if (!edges_.empty()) extend(remaining_);
    return std::move(out_);
  }

 private:
  using Vec = std::vector<Multiplicity>;

  bool valid_part(const Vec& p) const {
    std::vector<std::uint64_t> deg(h_.n() + 1, 0);
    bool nonzero = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!p[i]) continue;
      nonzero = true;
      for (Vertex v : edges_[i]) deg[v] += p[i];
    }
    if (!nonzero) return false;
    for (auto d : deg) {
      if (d % h_.k()) return false;
    }
    return kind_ == PartKind::any || is_connected(to_graph(p));
  }

  MultiHypergraph to_graph(const Vec& p) const {
    EdgeMap map;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i]) map.emplace(edges_[i], p[i]);
    }
    return MultiHypergraph(h_.k(), h_.n(), map);
  }

  // Chooses the next part p <= bound (lexicographically) with p <= remaining.
  void extend(const Vec& bound) {
    if (std::all_of(remaining_.begin(), remaining_.end(), [](auto x) { return x == 0; })) {
      std::vector<MultiHypergraph> parts;
      for (const auto& p : stack_) parts.push_back(to_graph(p));
      out_.push_back(std::move(parts));
      return;
    }
    Vec p(edges_.size(), 0);
    choose(0, true, bound, p);
  }

  void choose(std::size_t i, bool tight, const Vec& bound, Vec& p) {
    if (i == p.size()) {
      if (!valid_part(p)) return;
      for (std::size_t j = 0; j < p.size(); ++j) remaining_[j] -= p[j];
      stack_.push_back(p);
      extend(p);
      stack_.pop_back();
      for (std::size_t j = 0; j < p.size(); ++j) remaining_[j] += p[j];
      return;
    }
    Multiplicity hi = remaining_[i];
    if (tight) hi = std::min(hi, bound[i]);
    for (Multiplicity x = hi + 1; x-- > 0;) {
      p[i] = x;
      choose(i + 1, tight && x == bound[i], bound, p);
    }
    p[i] = 0;
  }

  const MultiHypergraph& h_;
  PartKind kind_;
  std::vector<Edge> edges_;
  Vec remaining_;
  std::vector<Vec> stack_;
  std::vector<std::vector<MultiHypergraph>> out_;
};

}  // namespace

std::vector<std::vector<MultiHypergraph>> veblen_partitions(const MultiHypergraph& h,
                                                            PartKind kind) {
  if (!is_veblen(h)) throw NotVeblen("veblen_partitions requires a Veblen hypergraph");
  return PartitionSearch(h, kind).run();
}

}  // namespace veblen
