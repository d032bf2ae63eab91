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

#include "veblen/spectra.hpp"

#include <functional>
#include <map>
#include <string>

#include "veblen/enumerate.hpp"
#include "veblen/errors.hpp"
#include "veblen/parallel.hpp"
#include "veblen/rooting.hpp"

namespace veblen {

namespace {

struct ClassesAtD {
  std::vector<IsoClassRecord> records;
  Rational weighted_sum;  // sum of C_H * labeled_count
};

ClassesAtD classes_with_coefficients(const SimpleHypergraph& host, unsigned d, unsigned jobs) {
  ClassesAtD out;
  out.records = connected_infragraph_classes(host, d, jobs);
  parallel_for(out.records.size(), jobs, [&](std::size_t i) {
    out.records[i].assoc_coeff = assoc_coeff(out.records[i].representative);
  });
  out.weighted_sum = 0;
  for (const auto& r : out.records) out.weighted_sum += *r.assoc_coeff * r.labeled_count;
  return out;
}

Rational trace_from(const SimpleHypergraph& host, unsigned d, const Rational& weighted_sum) {
  Rational scale(power(host.k() - 1, host.n()) * d);
  return scale * weighted_sum;
}

}  // namespace

std::uint64_t edge_hash(const MultiHypergraph& h) {
  std::uint64_t hash = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (x >> (8 * i)) & 0xff;
      hash *= 1099511628211ull;
    }
  };
  mix(h.k());
  mix(h.n());
  for (const auto& [e, m] : h.edges()) {
    for (Vertex v : e) mix(v);
    mix(m);
  }
  return hash;
}

Rational trace_d(const SimpleHypergraph& host, unsigned d, unsigned jobs) {
  if (d == 0) return 0;
  return trace_from(host, d, classes_with_coefficients(host, d, jobs).weighted_sum);
}

TraceVector traces(const SimpleHypergraph& host, unsigned max_d, unsigned jobs) {
  TraceVector out;
  out.traces.assign(max_d + 1, Rational(0));
  for (unsigned d = 1; d <= max_d; ++d) out.traces[d] = trace_d(host, d, jobs);
  return out;
}

Rational trace_bruteforce(const SimpleHypergraph& host, unsigned d, std::uint64_t budget) {
  const unsigned k = host.k();
  const std::size_t n = host.n();
  const std::size_t length = static_cast<std::size_t>(d) * (k - 1);
  if (d == 0 || n == 0) return 0;
  {
    Natural sequences = power(static_cast<unsigned long>(n), length);
    if (sequences > budget) {
      throw SizeExceeded("trace oracle needs " + sequences.get_str() +
                         " index sequences; budget is " + std::to_string(budget));
    }
  }

  // Coefficients of tr(A^L): closed index sequences grouped by arc counts.
  using ArcCounts = std::vector<std::uint8_t>;
  std::map<ArcCounts, std::uint64_t> walks;
  std::vector<std::size_t> seq(length, 0);
  for (;;) {
    ArcCounts counts(n * n, 0);
    for (std::size_t t = 0; t < length; ++t) counts[seq[t] * n + seq[(t + 1) % length]] += 1;
    walks[counts] += 1;
    std::size_t pos = 0;
    while (pos < length && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == length) break;
  }

  // f_i-hat is the sum over edges e containing i of prod_{j in e - i} d/dA_ij,
  // the (k-1)! orderings cancelling the 1/(k-1)! hypermatrix entries.
  std::vector<std::vector<Edge>> incident(n + 1);
  for (const auto& e : host.edge_list()) {
    for (Vertex v : e) incident[v].push_back(e);
  }
  struct Slot {
    Vertex vertex;
    const Edge* edge;
  };
  std::vector<Slot> slots;
  for (Vertex v = 1; v <= n; ++v) {
    for (const auto& e : incident[v]) slots.push_back({v, &e});
  }

  Rational total = 0;
  std::vector<std::uint64_t> per_vertex(n + 1, 0);
  ArcCounts op(n * n, 0);
  Rational coef_denominators = 1;  // prod over slots of c!
  std::function<void(std::size_t, unsigned)> expand = [&](std::size_t s, unsigned left) {
    if (s == slots.size()) {
      if (left) return;
      auto it = walks.find(op);
      if (it == walks.end()) return;
      Rational term(it->second);
      for (std::size_t i = 0; i < n * n; ++i) term *= factorial(op[i]);
      for (Vertex v = 1; v <= n; ++v) {
        term *= factorial(per_vertex[v]);
        term /= factorial(per_vertex[v] * (k - 1));
      }
      total += term / coef_denominators;
      return;
    }
    const Slot& slot = slots[s];
    for (unsigned c = 0; c <= left; ++c) {
      for (Vertex u : *slot.edge) {
        if (u != slot.vertex) op[(slot.vertex - 1) * n + (u - 1)] += c;
      }
      per_vertex[slot.vertex] += c;
      Rational saved = coef_denominators;
      coef_denominators *= factorial(c);
      expand(s + 1, left - c);
      coef_denominators = saved;
      per_vertex[slot.vertex] -= c;
      for (Vertex u : *slot.edge) {
        if (u != slot.vertex) op[(slot.vertex - 1) * n + (u - 1)] -= c;
      }
    }
  };
  expand(0, d);
  return total * Rational(power(k - 1, n - 1));
}

namespace {

std::vector<Rational> schur_prefix(unsigned d, const std::vector<Rational>& t) {
  std::vector<Rational> p(d + 1, Rational(0));
  p[0] = 1;
  for (unsigned m = 1; m <= d; ++m) {
    Rational s = 0;
    for (unsigned j = 1; j <= m; ++j) s += Rational(j) * t[j] * p[m - j];
    p[m] = s / m;
  }
  return p;
}

}  // namespace

Rational schur_P(unsigned d, const std::vector<Rational>& t) {
  if (t.size() < d + 1) throw DomainError("schur_P needs t_1..t_d");
  return schur_prefix(d, t)[d];
}

CoefficientTable codegree_coefficients(const SimpleHypergraph& host, unsigned max_codegree,
                                       unsigned jobs) {
  CoefficientTable table;
  table.k = host.k();
  table.n = host.n();
  table.edge_hash = edge_hash(host);
  table.max_codegree = max_codegree;
  table.traces.traces.assign(max_codegree + 1, Rational(0));
  table.breakdown.resize(max_codegree + 1);

  const Rational component_factor = -Rational(power(host.k() - 1, host.n()));
  struct Item {
    unsigned size;
    Rational value;
  };
  std::vector<Item> items;
  for (unsigned d = 1; d <= max_codegree; ++d) {
    ClassesAtD classes = classes_with_coefficients(host, d, jobs);
    table.traces.traces[d] = trace_from(host, d, classes.weighted_sum);
    for (auto& r : classes.records) {
      Rational value = component_factor * *r.assoc_coeff * r.labeled_count;
      items.push_back({d, value});
      table.breakdown[d].push_back(
          {r.code, r.representative, *r.assoc_coeff, r.labeled_count, value});
    }
  }

  // Schur route.
  std::vector<Rational> t(max_codegree + 1, Rational(0));
  for (unsigned j = 1; j <= max_codegree; ++j) t[j] = -table.traces.traces[j] / j;
  table.coefficients = schur_prefix(max_codegree, t);

  // Direct route: a Veblen infragraph is a multiset of connected classes;
  // class G taken m times contributes (-(k-1)^n C_G #G)^m / m!.
  std::vector<Rational> direct(max_codegree + 1, Rational(0));
  std::function<void(std::size_t, unsigned, const Rational&)> choose =
      [&](std::size_t i, unsigned size, const Rational& product) {
        // Items are sorted by size, so once one no longer fits none do.
        if (i == items.size() || size + items[i].size > max_codegree) {
          direct[size] += product;
          return;
        }
        choose(i + 1, size, product);
        Rational power_term = product;
        unsigned s = size;
        for (unsigned m = 1; s + items[i].size <= max_codegree; ++m) {
          s += items[i].size;
          power_term = power_term * items[i].value / m;
          choose(i + 1, s, power_term);
        }
      };
  choose(0, 0, Rational(1));

  for (unsigned d = 0; d <= max_codegree; ++d) {
    if (direct[d] != table.coefficients[d]) {
      throw ConsistencyFailure(d, "codegree " + std::to_string(d) + ": trace route gives " +
                                      to_string(table.coefficients[d]) +
                                      ", infragraph route gives " + to_string(direct[d]));
    }
  }
  return table;
}

}  // namespace veblen
