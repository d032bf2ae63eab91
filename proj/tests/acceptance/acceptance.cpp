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

// Acceptance runner: one PASS/FAIL line per criterion.
//
//   veblen_acceptance [--extended] [--expect-fail=2,4]
//
// Without --expect-fail the exit status is 0 iff every criterion passes.
// With it, the status is 0 iff the failing set equals the given set, so a
// known, documented failure stays visible without masking new ones.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "veblen/classical.hpp"
#include "veblen/enumerate.hpp"
#include "veblen/errors.hpp"
#include "veblen/rooting.hpp"
#include "veblen/simplex.hpp"
#include "veblen/spectra.hpp"

using namespace veblen;

namespace {

// Reference decimal expansion of C_100.
constexpr const char* kReferenceC100 =
    "3433452419824795908447767175863463034526896098903587111390139137587799578881707167888656395980536429532089292092788483092970696863742066180314961018984853143002532488553340756095279156863753866258109707788141825460673693192753149464456033881155778923548722860127826516615553106527369037122060186686535415242639036685247999141722280565954661452080249009900";
constexpr const char* kC100Prefix = "3433452419824795908447767175";
constexpr std::size_t kReferenceC100Digits = 344;

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

MultiHypergraph hyper(unsigned k, std::vector<std::pair<Edge, Multiplicity>> edges) {
  Vertex n = 0;
  for (const auto& [e, m] : edges) n = std::max(n, *std::max_element(e.begin(), e.end()));
  return MultiHypergraph::from_list(k, n, edges);
}

/// "(123)^3(145)" style edge lists over single-digit vertices.
MultiHypergraph parse_cycles(const std::string& text) {
  std::vector<std::pair<Edge, Multiplicity>> edges;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t close = text.find(')', i);
    Edge e;
    for (std::size_t j = i + 1; j < close; ++j) e.push_back(static_cast<Vertex>(text[j] - '0'));
    Multiplicity m = 1;
    i = close + 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t end = i + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      m = std::stoull(text.substr(i + 1, end - i - 1));
      i = end;
    }
    edges.push_back({e, m});
  }
  return hyper(static_cast<unsigned>(edges.front().first.size()), edges);
}

SimpleHypergraph simple(Vertex n, std::vector<Edge> edges) { return SimpleHypergraph(3, n, std::move(edges)); }

SimpleHypergraph random_graph(std::mt19937_64& rng, unsigned k, Vertex n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  std::vector<char> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  do {
    if (!coin(rng)) continue;
    Edge e;
    for (Vertex v = 0; v < n; ++v) {
      if (pick[v]) e.push_back(v + 1);
    }
    edges.push_back(e);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return SimpleHypergraph(k, n, edges);
}

const SimpleHypergraph& host_by_name(const std::string& name) {
  static const std::map<std::string, SimpleHypergraph> hosts{
      {"FP-2", simple(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 5, 6}, {3, 5, 7}})},
      {"FP-1", simple(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 7}, {2, 5, 6}, {3, 5, 7}})},
      {"FP", simple(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 7}, {2, 5, 6}, {3, 4, 6}, {3, 5, 7}})},
  };
  return hosts.at(name);
}

struct FanoColumn {
  std::string host;
  std::vector<long long> reference;  // c_0..c_15
};

const std::vector<FanoColumn>& fano_table() {
  static const std::vector<FanoColumn> table{
      {"FP-2", {1, 0, 0, -240, 0, 0, 28320, 0, 0, -2190860, 0, 0, 125012034, 0, 0, 5612445168}},
      {"FP-1", {1, 0, 0, -288, 0, 0, 40788, 0, 0, -3788016, 0, 0, 259553826, 0, 0, -13997317932}},
      {"FP", {1, 0, 0, -336, 0, 0, 55524, -696, 0, -6017746, 220038, 0, 481293561, -34237560, -122004,
              -30303162330}},
  };
  return table;
}

Outcome fano_coefficients(unsigned top, double budget_seconds) {
  Outcome o;
  auto start = Clock::now();
  for (const auto& column : fano_table()) {
    auto table = codegree_coefficients(host_by_name(column.host), top);
    for (unsigned d = 0; d <= top; ++d) {
      o.expect(table.coefficients[d] == Rational(static_cast<long>(column.reference[d])),
               column.host + " c_" + std::to_string(d) + " = " + to_string(table.coefficients[d]));
    }
  }
  double elapsed = seconds_since(start);
  o.expect(elapsed < budget_seconds, "runtime " + std::to_string(elapsed) + " s");
  o.summary = "Fano family c_0..c_" + std::to_string(top);
  return o;
}

Outcome criterion1(bool extended) {
  Outcome o = fano_coefficients(9, 60);
  if (extended) {
    Outcome more = fano_coefficients(12, 600);
    for (auto& f : more.failures) o.expect(false, f);
    o.summary = "Fano family c_0..c_12";
  }
  return o;
}

Outcome criterion2(bool fano_coefficients_pass) {
  Outcome o;
  auto start = Clock::now();
  struct Row {
    const char* edges;
    Rational reference;
  };
  const std::vector<Row> rows{
      {"(123)(125)(145)(234)(345)", Rational(51, 16)},
      {"(123)(145)(145)(234)(235)", Rational(27, 16)},
      {"(123)^3(124)^3", Rational(9, 8)},
      {"(123)^3(145)^3", Rational(9, 32)},
      {"(123)^2(124)(135)(145)^2", Rational(99, 32)},
      {"(123)(124)(125)(134)(135)(145)", Rational(213, 16)},
      {"(123)(124)(156)(256)(345)(346)", Rational(69, 16)},
      {"(123)^2(124)(356)(456)^2", Rational(27, 32)},
      {"(123)(124)(134)(256)(356)(456)", Rational(63, 16)},
      {"(123)^6(145)^3", Rational(9, 32)},
      {"(123)^3(145)^3(246)^3", Rational(9, 8)},
      {"(123)^3(145)^3(167)^3", Rational(81, 128)},
      {"(123)^9(145)^3", Rational(9, 32)},
      {"(123)^6(145)^6", Rational(27, 64)},
      {"(123)^6(145)^3(167)^3", Rational(81, 128)},
      {"(123)^6(145)^3(246)^3", Rational(63, 32)},
      {"(123)^3(145)^3(167)^3(246)^3", Rational(459, 64)},
      {"(123)^3(145)^3(246)^3(356)^3", Rational(255, 16)},
      {"(123)(145)(167)(246)(257)(347)(356)", Rational(87, 16)},
  };
  for (const auto& row : rows) {
    Rational value = assoc_coeff_connected(parse_cycles(row.edges));
    o.expect(value == row.reference,
             std::string(row.edges) + " = " + to_string(value) + " (reference " + to_string(row.reference) + ")");
  }

  // Two reference rows list edge sets that are not 3-valent; their values
  // must each belong to exactly one enumerated codegree-6 class.
  std::multiset<Rational> values;
  for (const auto& c : enumerate_connected_veblen(3, 6, true)) values.insert(*c.assoc_coeff);
  o.expect(values.count(Rational(63, 32)) == 1, "63/32 is not the value of exactly one codegree-6 class");
  o.expect(values.count(Rational(129, 32)) == 1, "129/32 is not the value of exactly one codegree-6 class");

  // Two reference values exist for this class (117/16 and 117/32); the
  // computed one must be among them and must reproduce the Fano family.
  Rational g610 = assoc_coeff_connected(parse_cycles("(123)(124)(135)(246)(356)(456)"));
  o.expect(g610 == Rational(117, 16) || g610 == Rational(117, 32), "(123)(124)(135)(246)(356)(456) = " + to_string(g610));
  o.expect(fano_coefficients_pass, "class value " + to_string(g610) + " does not reproduce the Fano family coefficients");

  double elapsed = seconds_since(start);
  o.expect(elapsed < 120, "runtime " + std::to_string(elapsed) + " s");
  o.summary = "21 reference coefficients plus Fano; (123)(124)(135)(246)(356)(456) = " + to_string(g610);
  return o;
}

Outcome criterion3(bool extended) {
  Outcome o;
  auto start = Clock::now();
  const std::vector<unsigned> connected{0, 0, 1, 1, 2, 11, 26};
  const std::vector<unsigned> all{0, 0, 1, 1, 2, 12, 27};
  std::vector<Natural> counts{0};
  for (unsigned d = 1; d <= 7; ++d) counts.push_back(enumerate_connected_veblen(3, d).size());
  auto totals = euler_transform(counts);
  for (unsigned d = 1; d <= 7; ++d) {
    o.expect(counts[d] == connected[d - 1], "connected d=" + std::to_string(d) + ": " + to_string(Integer(counts[d])));
    o.expect(totals[d] == all[d - 1], "all d=" + std::to_string(d) + ": " + to_string(Integer(totals[d])));
  }
  double elapsed = seconds_since(start);
  o.expect(elapsed < 60, "runtime " + std::to_string(elapsed) + " s");
  o.summary = "k=3 counts d=1..7";
  if (extended) {
    auto ext_start = Clock::now();
    counts.push_back(enumerate_connected_veblen(3, 8).size());
    totals = euler_transform(counts);
    o.expect(counts[8] == 122, "connected d=8: " + to_string(Integer(counts[8])));
    o.expect(totals[8] == 125, "all d=8: " + to_string(Integer(totals[8])));
    double ext = seconds_since(ext_start);
    o.expect(ext < 1800, "d=8 runtime " + std::to_string(ext) + " s");
    o.summary = "k=3 counts d=1..8";
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::vector<std::string> expected{"2",           "21",           "588",
                                          "28230",       "2092206",      "220611384",
                                          "31373370936", "5785037767440", "1342136211324090"};
  for (unsigned k = 2; k <= 10; ++k) {
    std::string value = to_string(Integer(simplex_Ck(k).Ck));
    o.expect(value == expected[k - 2], "C_" + std::to_string(k) + " = " + value);
  }
  auto start = Clock::now();
  std::string c100 = to_string(Integer(simplex_Ck(100).Ck));
  double elapsed = seconds_since(start);
  o.expect(elapsed < 5, "C_100 runtime " + std::to_string(elapsed) + " s");
  o.expect(c100.rfind(kC100Prefix, 0) == 0, "C_100 prefix " + c100.substr(0, 28));
  o.expect(c100.size() == kReferenceC100Digits,
           "C_100 has " + std::to_string(c100.size()) + " digits, not " + std::to_string(kReferenceC100Digits));
  if (c100 != kReferenceC100) {
    std::size_t i = 0;
    while (i < c100.size() && c100[i] == kReferenceC100[i]) ++i;
    o.expect(false, "C_100 differs from the reference digits at position " + std::to_string(i + 1) + " (" +
                        std::to_string(std::strlen(kReferenceC100)) + " reference digits)");
  }
  o.summary = "C_2..C_10 and C_100 (" + std::to_string(c100.size()) + " digits, " +
              std::to_string(static_cast<int>(elapsed * 1000)) + " ms)";
  return o;
}

Outcome criterion5(bool extended) {
  Outcome o;
  std::mt19937_64 rng(20260515);
  unsigned agreed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto host = random_graph(rng, 3, 3 + trial % 4, 0.4);
    try {
      auto table = codegree_coefficients(host, 7);
      std::vector<Rational> t{0};
      for (unsigned d = 1; d <= 7; ++d) t.push_back(-table.traces.traces[d] / d);
      bool same = true;
      for (unsigned d = 0; d <= 7; ++d) same = same && table.coefficients[d] == schur_P(d, t);
      o.expect(same, "random host " + std::to_string(trial) + ": table is not the Schur image of its traces");
      agreed += same;
    } catch (const ConsistencyFailure& e) {
      o.expect(false, "random host " + std::to_string(trial) + ": " + e.what());
    }
  }

  std::vector<Edge> triples{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  unsigned oracle_checks = 0;
  for (Vertex n = 3; n <= 4; ++n) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<Edge> edges;
      bool fits = true;
      for (unsigned i = 0; i < 4; ++i) {
        if (!(mask >> i & 1)) continue;
        if (triples[i].back() > n) fits = false;
        edges.push_back(triples[i]);
      }
      if (!fits) continue;
      SimpleHypergraph host(3, n, edges);
      for (unsigned d = 1; d <= 4; ++d) {
        Rational fast = trace_d(host, d);
        Rational slow = trace_bruteforce(host, d);
        o.expect(fast == slow, "trace mismatch n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                                   " d=" + std::to_string(d));
        ++oracle_checks;
      }
    }
  }

  unsigned top_k = extended ? 5 : 4;
  for (unsigned k = 2; k <= top_k; ++k) {
    std::vector<std::pair<Edge, Multiplicity>> edges;
    for (Vertex skip = 1; skip <= k + 1; ++skip) {
      Edge e;
      for (Vertex v = 1; v <= k + 1; ++v) {
        if (v != skip) e.push_back(v);
      }
      edges.push_back({e, 1});
    }
    Rational scaled = assoc_coeff_connected(hyper(k, edges)) * power(Integer(k - 1), k);
    o.expect(scaled == Rational(simplex_Ck(k).Ck), "simplex k=" + std::to_string(k) + ": " + to_string(scaled));
  }
  o.summary = std::to_string(agreed) + "/100 random hosts, " + std::to_string(oracle_checks) +
              " trace oracle checks, simplex k=2.." + std::to_string(top_k);
  return o;
}

MultiHypergraph graph_cycle(Vertex length) {
  std::vector<std::pair<Edge, Multiplicity>> edges;
  for (Vertex v = 1; v <= length; ++v) edges.push_back({{v, v % length + 1}, 1});
  return hyper(2, edges);
}

Outcome criterion6() {
  Outcome o;
  auto start = Clock::now();
  auto check_graph = [&](const SimpleHypergraph& g, const std::string& label) {
    auto p = charpoly_graph(g);
    IntegerMatrix a(g.n(), std::vector<Integer>(g.n(), 0));
    for (const auto& e : g.edge_list()) a[e[0] - 1][e[1] - 1] = a[e[1] - 1][e[0] - 1] = 1;
    for (unsigned d = 0; d <= g.n(); ++d) {
      o.expect(harary_sachs_coeffs(g, d) == p[g.n() - d], label + " d=" + std::to_string(d));
    }
    // Independent evaluation of det(xI - A) at x = 0..n.
    for (long x = 0; x <= static_cast<long>(g.n()); ++x) {
      IntegerMatrix m = a;
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (auto& entry : m[i]) entry = -entry;
        m[i][i] += x;
      }
      Integer value = 0;
      for (std::size_t i = p.coefficients().size(); i-- > 0;) value = value * x + p[i];
      o.expect(value == determinant(m), label + " charpoly at " + std::to_string(x));
    }
  };
  std::size_t on_five = 0;
  for (Vertex n = 1; n <= 5; ++n) {
    auto graphs = graphs_up_to_isomorphism(n);
    if (n == 5) on_five = graphs.size();
    for (const auto& g : graphs) check_graph(g, "class on " + std::to_string(n));
  }
  o.expect(on_five == 34, "classes on 5 vertices: " + std::to_string(on_five));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    check_graph(random_graph(rng, 2, 6 + trial % 3, 0.5), "random graph " + std::to_string(trial));
  }

  o.expect(partition_sum_check(hyper(2, {{{1, 2}, 2}})) == 1, "2-cycle");
  for (Vertex len = 3; len <= 7; ++len) {
    o.expect(partition_sum_check(graph_cycle(len)) == 2, "C_" + std::to_string(len));
  }
  unsigned non_cycles = 0;
  unsigned coeff_checks = 0;
  for (unsigned d = 2; d <= kPartitionSumMaxEdges; ++d) {
    for (const auto& c : enumerate_connected_veblen(2, d)) {
      const auto& g = c.representative;
      if (d <= 6) {
        o.expect(graph_assoc_coeff(g) == assoc_coeff_connected(g), "graph coefficient " + c.code.hex());
        ++coeff_checks;
      }
      bool is_cycle = g.edge_count() == g.support().size() && g.distinct_edge_count() == g.edge_count();
      bool is_digon = g.edge_count() == 2 && g.distinct_edge_count() == 1;
      if (is_cycle || is_digon || non_cycles == 20) continue;
      o.expect(partition_sum_check(g) == 0, "non-cycle " + c.code.hex());
      ++non_cycles;
    }
  }
  o.expect(non_cycles == 20, "only " + std::to_string(non_cycles) + " non-cycle multigraphs");
  double elapsed = seconds_since(start);
  o.expect(elapsed < 300, "runtime " + std::to_string(elapsed) + " s");
  o.summary = "34 classes on 5 vertices, 200 random graphs, " + std::to_string(non_cycles) + " non-cycles, " +
              std::to_string(coeff_checks) + " coefficient classes";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (unsigned v = 3; v <= 4; ++v) {
    SimpleHypergraph edge(3, v, std::vector<Edge>{{1, 2, 3}});
    unsigned top = 9u << (v - 3);
    auto table = codegree_coefficients(edge, top + 3);
    for (unsigned d = 0; d <= top + 3; ++d) {
      Rational expected = 0;
      if (d % 3 == 0) {
        unsigned t = d / 3;
        expected = binomial(3u << (v - 3), t);
        if (t % 2) expected = -expected;
      }
      o.expect(table.coefficients[d] == expected, "v=" + std::to_string(v) + " c_" + std::to_string(d));
    }
    auto report = threshold_search(edge, top + 3);
    o.expect(report.threshold && *report.threshold == top,
             "threshold v=" + std::to_string(v) + ": " + (report.threshold ? std::to_string(*report.threshold) : "none"));
  }
  o.summary = "single edge v=3,4; thresholds 9 and 18";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::vector<std::pair<Edge, Multiplicity>> edges;
  for (Vertex apex : {4u, 5u, 6u}) {
    for (Edge base : {Edge{1, 2}, Edge{1, 3}, Edge{2, 3}}) {
      base.push_back(apex);
      edges.push_back({base, 1});
    }
  }
  auto tetra = hyper(3, edges);
  auto partitions = veblen_partitions(tetra);
  o.expect(partitions.size() == 1 && partitions[0].size() == 1 && partitions[0][0] == tetra,
           "three tetrahedra: " + std::to_string(partitions.size()) + " partitions");

  auto k4 = parse_cycles("(123)(124)(134)(234)");
  auto orientations = euler_orientations(k4);
  o.expect(orientations.size() == 9, std::to_string(orientations.size()) + " orientations of the simplex");
  // Vertex v roots the edge missing sigma(v); distinct digraphs give distinct sigma.
  std::set<std::vector<Vertex>> sigmas;
  for (const auto& orientation : orientations) {
    std::vector<Vertex> sigma(5, 0);
    for (const auto& [arc, count] : orientation.digraph.arcs()) sigma[arc.first] += arc.second;
    bool derangement = true;
    for (Vertex v = 1; v <= 4; ++v) {
      sigma[v] = 10 - v - sigma[v];
      derangement = derangement && sigma[v] != v && sigma[v] >= 1 && sigma[v] <= 4;
    }
    std::vector<Vertex> image(sigma.begin() + 1, sigma.end());
    std::vector<Vertex> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    derangement = derangement && sorted == std::vector<Vertex>{1, 2, 3, 4};
    o.expect(derangement, "orientation is not a derangement digraph");
    sigmas.insert(image);
  }
  o.expect(sigmas.size() == 9, "derangements covered: " + std::to_string(sigmas.size()));
  o.summary = "trivial partition only; 9 orientations <-> 9 derangements";
  return o;
}

Outcome asymptotic_substitute() {
  Outcome o;
  Natural previous = 0;
  for (unsigned k = 2; k <= 100; ++k) {
    Natural c = simplex_Ck(k).Ck;
    o.expect(c > previous, "C_k not increasing at k=" + std::to_string(k));
    previous = c;
  }
  auto report = simplex_Ck(100);
  o.summary = "C_k increasing on 2..100; k=100 ratio " + report.asymptotic_ratio + ", derangement fraction " +
              report.derangement_fraction;
  return o;
}

std::string late_rows_note() {
  std::ostringstream out;
  unsigned agree = 0;
  std::vector<std::string> differ;
  for (const auto& column : fano_table()) {
    auto table = codegree_coefficients(host_by_name(column.host), 15);
    for (unsigned d = 13; d <= 15; ++d) {
      if (table.coefficients[d] == Rational(static_cast<long>(column.reference[d]))) {
        ++agree;
      } else {
        differ.push_back(column.host + " c_" + std::to_string(d) + " computed " + to_string(table.coefficients[d]) +
                         " reference " + std::to_string(column.reference[d]));
      }
    }
  }
  out << "note: Fano family c_13..c_15: " << agree << "/9 match the reference values";
  for (const auto& d : differ) out << "; " << d;
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  std::optional<std::set<int>> expect_fail;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--extended") {
      extended = true;
    } else if (arg.rfind("--expect-fail=", 0) == 0) {
      expect_fail.emplace();
      std::stringstream list(arg.substr(14));
      for (std::string item; std::getline(list, item, ',');) {
        if (!item.empty()) expect_fail->insert(std::stoi(item));
      }
    } else {
      std::cerr << "usage: veblen_acceptance [--extended] [--expect-fail=N,M]\n";
      return 2;
    }
  }

  std::set<int> failed;
  auto report = [&](int id, const std::string& label, const std::function<Outcome()>& run) {
    auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.expect(false, std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(start));
    std::cout << "criterion " << id << " [" << label << "]: " << (outcome.pass ? "PASS" : "FAIL") << " ("
              << timing << ") " << outcome.summary << '\n';
    for (const auto& f : outcome.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
    if (!outcome.pass) failed.insert(id);
    return outcome.pass;
  };

  bool fano_pass = report(1, "golden coefficients", [&] { return criterion1(extended); });
  report(2, "associated coefficients", [&] { return criterion2(fano_pass); });
  report(3, "enumeration", [&] { return criterion3(extended); });
  report(4, "simplex coefficients", criterion4);
  report(5, "cross-path consistency", [&] { return criterion5(extended); });
  report(6, "classical deduction", criterion6);
  report(7, "thresholds", criterion7);
  report(8, "structural", criterion8);
  report(9, "asymptotic substitute", asymptotic_substitute);
  if (extended) std::cout << late_rows_note() << '\n';

  std::cout << "failed:";
  for (int id : failed) std::cout << ' ' << id;
  std::cout << (failed.empty() ? " none" : "") << '\n';
  if (expect_fail) {
    bool as_expected = failed == *expect_fail;
    std::cout << (as_expected ? "failing set matches the expected set" : "failing set differs from the expected set")
              << '\n';
    return as_expected ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
