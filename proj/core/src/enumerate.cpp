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

#include "veblen/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "veblen/errors.hpp"
#include "veblen/parallel.hpp"
#include "veblen/rooting.hpp"

namespace veblen {

namespace {

struct ClassAccumulator {
  MultiHypergraph representative;
  Natural aut_count;
  Natural labeled = 0;
};
using ClassMap = std::map<CanonicalCode, ClassAccumulator>;

void record(ClassMap& classes, const MultiHypergraph& h) {
  CanonicalLabeling labeling = canonical_labeling(h);
  auto it = classes.lower_bound(labeling.code);
  if (it == classes.end() || it->first != labeling.code) {
    it = classes.emplace_hint(
        it, labeling.code,
        ClassAccumulator{labeling.representative, labeling.aut_count, 0});
  }
  it->second.labeled += 1;
}

void merge_into(ClassMap& target, ClassMap&& source) {
  for (auto& [code, acc] : source) {
    auto [it, inserted] = target.try_emplace(code, std::move(acc));
    if (!inserted) it->second.labeled += acc.labeled;
  }
}

std::vector<IsoClassRecord> to_records(ClassMap&& classes, bool host_relative) {
  std::vector<IsoClassRecord> out;
  out.reserve(classes.size());
  for (auto& [code, acc] : classes) {
    IsoClassRecord r{code, std::move(acc.representative), 0, std::move(acc.aut_count),
                     std::nullopt, host_relative ? acc.labeled : Natural(0)};
    r.edge_count = r.representative.edge_count();
    out.push_back(std::move(r));
  }
  return out;
}

void fill_coefficients(std::vector<IsoClassRecord>& records, unsigned jobs) {
  parallel_for(records.size(), jobs, [&](std::size_t i) {
    records[i].assoc_coeff = assoc_coeff(records[i].representative);
  });
}

// Non-increasing sequences r_1 >= ... >= r_n >= 1 with sum d and r_1 <= cap.
void degree_sequences(unsigned left, unsigned cap, std::vector<unsigned>& prefix,
                      std::vector<std::vector<unsigned>>& out) {
  if (left == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned r = std::min(left, cap); r >= 1; --r) {
    prefix.push_back(r);
    degree_sequences(left - r, r, prefix, out);
    prefix.pop_back();
  }
}

// Builds every Veblen k-graph with root-count sequence r (deg v = k r_v) by
// settling vertices in order: the edges whose smallest vertex is v must use
// up exactly the remaining degree of v. Untouched vertices with equal r are
// interchangeable, so the ones a step touches must form a prefix of them.
class DegreeSequenceGenerator {
 public:
  DegreeSequenceGenerator(unsigned k, const std::vector<unsigned>& r, ClassMap& out)
      : k_(k), n_(static_cast<Vertex>(r.size())), out_(out) {
    remaining_.assign(n_ + 1, 0);
    cls_.assign(n_ + 1, 0);
    touched_.assign(n_ + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      remaining_[v] = k * r[v - 1];
      cls_[v] = r[v - 1];
    }
  }

  void run() { settle(1); }

 private:
  void settle(Vertex v) {
    if (v > n_) {
      MultiHypergraph h(k_, n_, edges_);
      if (is_connected(h)) record(out_, h);
      return;
    }
    if (remaining_[v] == 0) {
      if (closes_component(v)) return;
      settle(v + 1);
      return;
    }
    candidates_.emplace_back();
    std::vector<Vertex> subset;
    subsets(v + 1, subset, candidates_.back());
    std::vector<char> before(touched_.begin(), touched_.end());
    choose(v, 0, remaining_[v], before);
    candidates_.pop_back();
  }

  void subsets(Vertex from, std::vector<Vertex>& subset, std::vector<Edge>& out) {
    if (subset.size() + 1 == k_) {
      out.push_back(subset);
      return;
    }
    for (Vertex u = from; u <= n_; ++u) {
      if (remaining_[u] == 0) continue;
      subset.push_back(u);
      subsets(u + 1, subset, out);
      subset.pop_back();
    }
  }

  void choose(Vertex v, std::size_t idx, std::uint64_t need, const std::vector<char>& before) {
    if (need == 0) {
      if (!fresh_prefix(v, before)) return;
      if (closes_component(v)) return;
      settle(v + 1);
      return;
    }
    const auto& cands = candidates_.back();
    if (idx == cands.size()) return;
    const Edge& others = cands[idx];
    std::uint64_t hi = need;
    for (Vertex u : others) hi = std::min<std::uint64_t>(hi, remaining_[u]);
    Edge e{v};
    e.insert(e.end(), others.begin(), others.end());
    for (std::uint64_t c = hi; c >= 1; --c) {
      std::vector<char> saved;
      for (Vertex u : e) {
        remaining_[u] -= c;
        saved.push_back(touched_[u]);
        touched_[u] = 1;
      }
      edges_[e] = c;
      choose(v, idx + 1, need - c, before);
      edges_.erase(e);
      for (std::size_t i = 0; i < e.size(); ++i) {
        remaining_[e[i]] += c;
        touched_[e[i]] = saved[i];
      }
    }
    choose(v, idx + 1, need, before);
  }

  bool fresh_prefix(Vertex v, const std::vector<char>& before) const {
    // Within each class, among vertices > v untouched before this step, the
    // touched ones must precede the untouched ones.
    std::map<unsigned, bool> gap;
    for (Vertex u = v + 1; u <= n_; ++u) {
      if (before[u]) continue;
      bool& seen_gap = gap[cls_[u]];
      if (touched_[u]) {
        if (seen_gap) return false;
      } else {
        seen_gap = true;
      }
    }
    return true;
  }

  // After settling vertices 1..v, a component with no open vertex is final;
  // it must then span all n vertices.
  bool closes_component(Vertex v) const {
    std::vector<Vertex> parent(n_ + 1);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::function<Vertex(Vertex)> find = [&](Vertex x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& entry : edges_) {
      for (std::size_t i = 1; i < entry.first.size(); ++i) {
        parent[find(entry.first[i])] = find(entry.first[0]);
      }
    }
    std::vector<char> open(n_ + 1, 0);
    std::vector<Vertex> size(n_ + 1, 0);
    for (Vertex u = 1; u <= n_; ++u) {
      if (u > v && !touched_[u]) continue;
      Vertex root = find(u);
      size[root] += 1;
      if (remaining_[u] > 0) open[root] = 1;
    }
    for (Vertex u = 1; u <= n_; ++u) {
      if (size[u] > 0 && !open[u] && size[u] != n_) return true;
    }
    return false;
  }

  unsigned k_;
  Vertex n_;
  ClassMap& out_;
  std::vector<std::uint64_t> remaining_;
  std::vector<unsigned> cls_;
  std::vector<char> touched_;
  EdgeMap edges_;
  std::vector<std::vector<Edge>> candidates_;
};

}  // namespace

std::vector<IsoClassRecord> enumerate_connected_veblen(unsigned k, unsigned d,
                                                       bool with_coefficients, unsigned jobs) {
  if (k < 2) throw DomainError("k must be at least 2");
  if (d > kMaxAbstractEdges) {
    throw SizeExceeded("abstract enumeration supports at most " +
                       std::to_string(kMaxAbstractEdges) + " edges");
  }
  std::vector<std::vector<unsigned>> sequences;
  std::vector<unsigned> prefix;
  if (d >= 1) degree_sequences(d, d / k, prefix, sequences);
  std::erase_if(sequences, [&](const auto& r) { return r.size() < k; });

  std::vector<ClassMap> partial(sequences.size());
  parallel_for(sequences.size(), jobs, [&](std::size_t i) {
    DegreeSequenceGenerator(k, sequences[i], partial[i]).run();
  });
  ClassMap all;
  for (auto& part : partial) merge_into(all, std::move(part));
  auto records = to_records(std::move(all), false);
  if (with_coefficients) fill_coefficients(records, jobs);
  return records;
}

std::vector<Natural> euler_transform(const std::vector<Natural>& connected) {
  // b_n = (1/n) sum_{j=1}^n c_j b_{n-j} with c_j = sum_{i | j} i a_i.
  std::size_t top = connected.empty() ? 0 : connected.size() - 1;
  std::vector<Natural> c(top + 1, 0), b(top + 1, 0);
  for (std::size_t i = 1; i <= top; ++i) {
    for (std::size_t j = i; j <= top; j += i) c[j] += Natural(static_cast<unsigned long>(i)) * connected[i];
  }
  b[0] = 1;
  for (std::size_t n = 1; n <= top; ++n) {
    Natural s = 0;
    for (std::size_t j = 1; j <= n; ++j) s += c[j] * b[n - j];
    b[n] = s / static_cast<unsigned long>(n);
  }
  return b;
}

Natural count_all_veblen(unsigned k, unsigned d, unsigned jobs) {
  std::vector<Natural> connected(d + 1, 0);
  for (unsigned j = 1; j <= d; ++j) {
    connected[j] = static_cast<unsigned long>(enumerate_connected_veblen(k, j, false, jobs).size());
  }
  return euler_transform(connected)[d];
}

namespace {

class InfragraphSearch {
 public:
  InfragraphSearch(const SimpleHypergraph& host, unsigned d) : host_(host), d_(d) {
    edges_ = host.edge_list();
    last_use_.assign(host.n() + 1, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (Vertex v : edges_[i]) last_use_[v] = i;
    }
  }

  std::size_t edge_total() const { return edges_.size(); }

  // Multiplicity prefixes for the first `depth` edges that pass the local
  // checks; used to split the search across workers.
  std::vector<std::vector<Multiplicity>> prefixes(std::size_t depth) const {
    std::vector<std::vector<Multiplicity>> out;
    std::vector<Multiplicity> mult;
    std::vector<std::uint64_t> degree(host_.n() + 1, 0);
    collect(0, depth, d_, mult, degree, out);
    return out;
  }

  void run_from(const std::vector<Multiplicity>& prefix, ClassMap& out) const {
    std::vector<Multiplicity> mult = prefix;
    std::vector<std::uint64_t> degree(host_.n() + 1, 0);
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      for (Vertex v : edges_[i]) degree[v] += prefix[i];
      used += prefix[i];
    }
    descend(prefix.size(), d_ - used, mult, degree, out);
  }

 private:
  bool settled_ok(std::size_t i, const std::vector<std::uint64_t>& degree) const {
    for (Vertex v : edges_[i]) {
      if (last_use_[v] == i && degree[v] % host_.k() != 0) return false;
    }
    return true;
  }

  void collect(std::size_t i, std::size_t depth, std::uint64_t left,
               std::vector<Multiplicity>& mult, std::vector<std::uint64_t>& degree,
               std::vector<std::vector<Multiplicity>>& out) const {
    if (i == depth || i == edges_.size()) {
      out.push_back(mult);
      return;
    }
    for (std::uint64_t c = 0; c <= left; ++c) {
      for (Vertex v : edges_[i]) degree[v] += c;
      mult.push_back(c);
      if (settled_ok(i, degree)) collect(i + 1, depth, left - c, mult, degree, out);
      mult.pop_back();
      for (Vertex v : edges_[i]) degree[v] -= c;
    }
  }

  void descend(std::size_t i, std::uint64_t left, std::vector<Multiplicity>& mult,
               std::vector<std::uint64_t>& degree, ClassMap& out) const {
    if (left == 0) {
      for (std::size_t j = i; j < edges_.size(); ++j) {
        // Remaining edges get multiplicity 0; their settled vertices must
        // still be k-valent.
        if (!settled_ok(j, degree)) return;
      }
      EdgeMap map;
      for (std::size_t j = 0; j < mult.size(); ++j) {
        if (mult[j]) map.emplace(edges_[j], mult[j]);
      }
      MultiHypergraph h(host_.k(), host_.n(), map);
      if (is_connected(h)) record(out, h);
      return;
    }
    if (i == edges_.size()) return;
    for (std::uint64_t c = 0; c <= left; ++c) {
      for (Vertex v : edges_[i]) degree[v] += c;
      mult.push_back(c);
      if (settled_ok(i, degree)) descend(i + 1, left - c, mult, degree, out);
      mult.pop_back();
      for (Vertex v : edges_[i]) degree[v] -= c;
    }
  }

  const SimpleHypergraph& host_;
  unsigned d_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> last_use_;
};

}  // namespace

std::vector<IsoClassRecord> connected_infragraph_classes(const SimpleHypergraph& host, unsigned d,
                                                         unsigned jobs) {
  if (d == 0) return {};
  InfragraphSearch search(host, d);
  std::size_t depth = 0;
  std::vector<std::vector<Multiplicity>> prefixes{{}};
  while (jobs > 1 && prefixes.size() < 8u * jobs && depth < search.edge_total()) {
    prefixes = search.prefixes(++depth);
  }
  std::vector<ClassMap> partial(prefixes.size());
  parallel_for(prefixes.size(), jobs,
               [&](std::size_t i) { search.run_from(prefixes[i], partial[i]); });
  ClassMap all;
  for (auto& part : partial) merge_into(all, std::move(part));
  return to_records(std::move(all), true);
}

Natural count_embeddings(const SimpleHypergraph& host, const MultiHypergraph& pattern) {
  std::vector<Vertex> verts = pattern.support();
  std::vector<Edge> pattern_edges;
  for (const auto& entry : pattern.edges()) pattern_edges.push_back(entry.first);
  const auto& host_edges = host.multi().edges();

  std::vector<Vertex> image(pattern.n() + 1, 0);
  std::vector<char> used(host.n() + 1, 0);
  // Edges fully mapped once vertex verts[i] is placed.
  std::vector<std::vector<std::size_t>> closes(verts.size());
  {
    std::vector<std::size_t> position(pattern.n() + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) position[verts[i]] = i;
    for (std::size_t j = 0; j < pattern_edges.size(); ++j) {
      std::size_t last = 0;
      for (Vertex v : pattern_edges[j]) last = std::max(last, position[v]);
      closes[last].push_back(j);
    }
  }
  Natural count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == verts.size()) {
      count += 1;
      return;
    }
    for (Vertex w = 1; w <= host.n(); ++w) {
      if (used[w]) continue;
      image[verts[i]] = w;
      bool ok = true;
      for (std::size_t j : closes[i]) {
        Edge mapped;
        for (Vertex v : pattern_edges[j]) mapped.push_back(image[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!host_edges.count(mapped)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[w] = 1;
      place(i + 1);
      used[w] = 0;
    }
  };
  if (pattern.k() == host.k()) place(0);
  return count;
}

Natural count_subgraphs(const SimpleHypergraph& host, const SimpleHypergraph& pattern) {
  return count_embeddings(host, pattern) / automorphisms(pattern).aut_count;
}

OccurrenceCount count_infragraph(const SimpleHypergraph& host, const MultiHypergraph& h,
                                 unsigned jobs) {
  if (!is_veblen(h)) throw NotVeblen("hypergraph is not Veblen");
  std::map<CanonicalCode, std::pair<std::uint64_t, std::size_t>> groups;  // d, multiplicity
  for (const auto& part : components(h)) {
    auto& g = groups[canonical_form(part)];
    g.first = part.edge_count();
    g.second += 1;
  }
  std::map<std::uint64_t, std::vector<IsoClassRecord>> by_size;
  Rational value = 1;
  for (const auto& [code, g] : groups) {
    auto [it, fresh] = by_size.try_emplace(g.first);
    if (fresh) it->second = connected_infragraph_classes(host, static_cast<unsigned>(g.first), jobs);
    const auto& records = it->second;
    auto rec = std::find_if(records.begin(), records.end(),
                            [&](const IsoClassRecord& r) { return r.code == code; });
    if (rec == records.end()) return {Rational(0)};
    for (std::size_t i = 0; i < g.second; ++i) value *= rec->labeled_count;
    value /= factorial(g.second);
  }
  return {value};
}

}  // namespace veblen
