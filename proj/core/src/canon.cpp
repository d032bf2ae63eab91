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

#include "veblen/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "veblen/errors.hpp"
#include "veblen/parallel.hpp"

namespace veblen {

namespace {

void put_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

// A connected component relabeled onto 0..s-1.
struct Component {
  unsigned k = 0;
  std::size_t s = 0;
  std::vector<std::vector<std::uint32_t>> edges;
  std::vector<Multiplicity> mult;
  std::vector<std::vector<std::size_t>> incident;
  std::vector<Vertex> original;  // local index -> original vertex
};

Component make_component(const MultiHypergraph& part) {
  Component c;
  c.k = part.k();
  c.original = part.support();
  c.s = c.original.size();
  std::vector<std::uint32_t> local(part.n() + 1, 0);
  for (std::size_t i = 0; i < c.s; ++i) local[c.original[i]] = static_cast<std::uint32_t>(i);
  c.incident.resize(c.s);
  for (const auto& [e, m] : part.edges()) {
    std::vector<std::uint32_t> mapped;
    for (Vertex v : e) {
      c.incident[local[v]].push_back(c.edges.size());
      mapped.push_back(local[v]);
    }
    c.edges.push_back(std::move(mapped));
    c.mult.push_back(m);
  }
  return c;
}

using Coloring = std::vector<std::uint32_t>;

// Splits color classes by the multiset of (multiplicity, colors of the other
// vertices) over incident edges until the partition is equitable.
std::size_t refine(const Component& c, Coloring& col) {
  std::size_t classes = 0;
  {
    std::vector<char> seen(c.s, 0);
    for (auto x : col) classes += !seen[x]++;
  }
  std::vector<std::vector<std::uint64_t>> sig(c.s);
  std::vector<std::uint64_t> tuple;
  std::vector<std::vector<std::uint64_t>> tuples;
  std::vector<std::size_t> order(c.s);
  for (;;) {
    for (std::size_t v = 0; v < c.s; ++v) {
      tuples.clear();
      for (std::size_t ei : c.incident[v]) {
        tuple.clear();
        tuple.push_back(c.mult[ei]);
        std::size_t base = tuple.size();
        for (auto u : c.edges[ei]) {
          if (u != v) tuple.push_back(col[u]);
        }
        std::sort(tuple.begin() + static_cast<std::ptrdiff_t>(base), tuple.end());
        tuples.push_back(tuple);
      }
      std::sort(tuples.begin(), tuples.end());
      auto& s = sig[v];
      s.clear();
      s.push_back(col[v]);
      s.push_back(tuples.size());
      for (const auto& t : tuples) s.insert(s.end(), t.begin(), t.end());
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < c.s; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
      col[order[i]] = next;
    }
    std::size_t now = c.s ? next + 1 : 0;
    if (now == classes) return classes;
    classes = now;
  }
}

std::string leaf_code(const Component& c, const Coloring& col) {
  std::vector<std::pair<std::vector<std::uint32_t>, Multiplicity>> mapped;
  mapped.reserve(c.edges.size());
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    std::vector<std::uint32_t> e;
    for (auto v : c.edges[i]) e.push_back(col[v]);
    std::sort(e.begin(), e.end());
    mapped.emplace_back(std::move(e), c.mult[i]);
  }
  std::sort(mapped.begin(), mapped.end());
  std::string out;
  put_varint(out, c.s);
  put_varint(out, mapped.size());
  for (const auto& [e, m] : mapped) {
    for (auto v : e) out.push_back(static_cast<char>(v));
    put_varint(out, m);
  }
  return out;
}

struct ComponentResult {
  std::string code;
  Coloring labeling;  // local index -> canonical position
  Natural leaves_at_best = 0;
};

// Individualization-refinement without pruning: every leaf reaching the
// minimal code corresponds to exactly one automorphism.
void search(const Component& c, Coloring col, ComponentResult& best) {
  std::size_t classes = refine(c, col);
  if (classes == c.s) {
    std::string code = leaf_code(c, col);
    if (best.leaves_at_best == 0 || code < best.code) {
      best.code = std::move(code);
      best.labeling = col;
      best.leaves_at_best = 1;
    } else if (code == best.code) {
      best.leaves_at_best += 1;
    }
    return;
  }
  std::vector<std::size_t> size(c.s, 0);
  for (auto x : col) ++size[x];
  std::uint32_t target = 0;
  while (size[target] < 2) ++target;
  for (std::size_t v = 0; v < c.s; ++v) {
    if (col[v] != target) continue;
    Coloring next = col;
    for (std::size_t u = 0; u < c.s; ++u) {
      if (u != v && col[u] >= target) ++next[u];
    }
    search(c, std::move(next), best);
  }
}

ComponentResult canonize_component(const MultiHypergraph& part, std::size_t bound,
                                   Component* out_component) {
  Component c = make_component(part);
  if (c.s > bound || c.s > 255) {
    throw SizeExceeded("component with " + std::to_string(c.s) +
                       " vertices exceeds the canonicalization bound of " +
                       std::to_string(std::min<std::size_t>(bound, 255)));
  }
  ComponentResult best;
  search(c, Coloring(c.s, 0), best);
  if (out_component) *out_component = std::move(c);
  return best;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const MultiHypergraph& h, std::size_t vertex_bound) {
  struct Entry {
    Component component;
    ComponentResult result;
  };
  std::vector<Entry> entries;
  for (const auto& part : components(h)) {
    Entry entry;
    entry.result = canonize_component(part, vertex_bound, &entry.component);
    entries.push_back(std::move(entry));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.result.code < b.result.code;
  });

  std::string bytes;
  put_varint(bytes, h.k());
  put_varint(bytes, entries.size());
  std::vector<Vertex> image(h.n() + 1, 0);
  Natural aut = 1;
  Vertex offset = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [component, result] = entries[i];
    put_varint(bytes, result.code.size());
    bytes += result.code;
    for (std::size_t v = 0; v < component.s; ++v) {
      image[component.original[v]] = offset + result.labeling[v] + 1;
    }
    offset += static_cast<Vertex>(component.s);
    aut *= result.leaves_at_best;
  }
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].result.code == entries[i].result.code) ++j;
    aut *= factorial(j - i);
    i = j;
  }
  return CanonicalLabeling{CanonicalCode(std::move(bytes)), relabel(h, image, offset), image,
                           aut};
}

CanonicalCode canonical_form(const MultiHypergraph& h, std::size_t vertex_bound) {
  return canonical_labeling(h, vertex_bound).code;
}

AutReport automorphisms(const MultiHypergraph& h, std::size_t vertex_bound) {
  static ConcurrentMemo<CanonicalCode, AutReport> memo;
  CanonicalLabeling labeling = canonical_labeling(h, vertex_bound);
  return memo.get_or_compute(labeling.code, [&] {
    AutReport report;
    report.aut_count = labeling.aut_count;
    report.flat_aut_count = canonical_labeling(flatten(h), vertex_bound).aut_count;
    report.ratio = 1;
    for (const auto& part : components(h)) {
      Natural own = canonical_labeling(part, vertex_bound).aut_count;
      Natural flat = canonical_labeling(flatten(part), vertex_bound).aut_count;
      if (flat % own != 0) {
        throw ConsistencyFailure(part.edge_count(),
                                 "automorphism group of a component does not divide that of "
                                 "its flattening");
      }
      report.ratio *= flat / own;
    }
    return report;
  });
}

}  // namespace veblen
