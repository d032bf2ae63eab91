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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "veblen/errors.hpp"
#include "veblen/hypergraph.hpp"

using namespace veblen;
using oracle::H;

namespace {

MultiHypergraph tetra_t() {
  std::vector<std::pair<Edge, Multiplicity>> edges;
  for (Vertex apex : {4u, 5u, 6u}) {
    edges.push_back({{1, 2, apex}, 1});
    edges.push_back({{1, 3, apex}, 1});
    edges.push_back({{2, 3, apex}, 1});
  }
  return H(3, 6, edges);
}

MultiHypergraph random_multi(std::mt19937_64& rng, unsigned k, Vertex n, unsigned edges) {
  std::vector<std::pair<Edge, Multiplicity>> list;
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{1});
  for (unsigned i = 0; i < edges; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    list.push_back({Edge(pool.begin(), pool.begin() + k), 1});
  }
  return H(k, n, list);
}

}  // namespace

TEST_SUITE("hypergraph") {
  TEST_CASE("construction validates edges") {
    CHECK_THROWS_AS(H(3, 3, {{{1, 2}, 1}}), DomainError);
    CHECK_THROWS_AS(H(3, 3, {{{1, 2, 4}, 1}}), DomainError);
    CHECK_THROWS_AS(H(3, 3, {{{1, 1, 2}, 1}}), DomainError);
    CHECK_THROWS_AS(H(3, 3, {{{1, 2, 3}, 0}}), DomainError);
    CHECK_THROWS_AS(MultiHypergraph(1, 3), DomainError);
    auto h = H(3, 4, {{{3, 1, 2}, 2}, {{1, 2, 3}, 1}});
    CHECK(h.multiplicity({1, 2, 3}) == 3);
    CHECK(h.edge_count() == 3);
    CHECK(h.distinct_edge_count() == 1);
    CHECK(h.support() == std::vector<Vertex>{1, 2, 3});
    CHECK(h.degree(4) == 0);
  }

  TEST_CASE("degree sum equals k times edge count") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      unsigned k = 2 + trial % 3;
      auto h = random_multi(rng, k, 7, 1 + trial % 9);
      std::uint64_t total = 0;
      for (Vertex v = 1; v <= h.n(); ++v) total += h.degree(v);
      CHECK(total == k * h.edge_count());
    }
  }

  TEST_CASE("flatten is idempotent") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      auto h = random_multi(rng, 3, 6, 8);
      auto once = flatten(h);
      CHECK(flatten(once.multi()) == once);
      for (const auto& [e, m] : once.multi().edges()) CHECK(m == 1);
      CHECK(once.multi().distinct_edge_count() == h.distinct_edge_count());
    }
  }

  TEST_CASE("components and connectivity") {
    auto h = H(3, 8, {{{1, 2, 3}, 3}, {{4, 5, 6}, 1}, {{5, 6, 7}, 2}});
    auto parts = components(h);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].edges().begin()->first == Edge{1, 2, 3});
    CHECK(parts[1].edge_count() == 3);
    CHECK(parts[0].n() == 8);
    CHECK_FALSE(is_connected(h));
    CHECK(is_connected(H(3, 5, {{{1, 2, 3}, 1}, {{3, 4, 5}, 1}})));
    CHECK(component_count(MultiHypergraph(3, 4)) == 0);
  }

  TEST_CASE("veblen iff every component is veblen") {
    std::mt19937_64 rng(13);
    int veblen_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto h = random_multi(rng, 2, 5, 2 + trial % 7);
      bool all = true;
      for (const auto& c : components(h)) all = all && is_veblen(c);
      CHECK(is_veblen(h) == all);
      veblen_seen += is_veblen(h);
    }
    CHECK(veblen_seen > 0);
    CHECK(is_veblen(H(3, 3, {{{1, 2, 3}, 3}})));
    CHECK_FALSE(is_veblen(H(3, 3, {{{1, 2, 3}, 2}})));
  }

  TEST_CASE("compact relabel and sum") {
    auto h = H(3, 9, {{{2, 5, 9}, 2}});
    auto c = compact(h);
    CHECK(c.n() == 3);
    CHECK(c.multiplicity({1, 2, 3}) == 2);
    auto a = H(3, 4, {{{1, 2, 3}, 1}});
    auto b = H(3, 4, {{{1, 2, 3}, 2}, {{2, 3, 4}, 1}});
    auto s = sum(a, b);
    CHECK(s.multiplicity({1, 2, 3}) == 3);
    CHECK(s.edge_count() == 4);
    std::vector<Vertex> image{0, 4, 3, 2, 1};
    CHECK(relabel(b, image, 4).multiplicity({1, 2, 3}) == 1);
  }

  TEST_CASE("three-tetrahedra host admits only the trivial partition") {
    auto t = tetra_t();
    REQUIRE(is_veblen(t));
    for (auto kind : {PartKind::any, PartKind::connected}) {
      auto parts = veblen_partitions(t, kind);
      REQUIRE(parts.size() == 1);
      REQUIRE(parts[0].size() == 1);
      CHECK(parts[0][0] == t);
    }
  }

  TEST_CASE("partitions reconstruct the input") {
    std::vector<MultiHypergraph> corpus{
        H(3, 3, {{{1, 2, 3}, 6}}),
        H(3, 5, {{{1, 2, 3}, 3}, {{1, 4, 5}, 3}}),
        H(2, 4, {{{1, 2}, 2}, {{2, 3}, 2}, {{1, 3}, 2}}),
        H(2, 4, {{{1, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{1, 4}, 1}, {{1, 3}, 2}}),
        H(3, 4, {{{1, 2, 3}, 2}, {{1, 2, 4}, 2}, {{1, 3, 4}, 2}, {{2, 3, 4}, 2}}),
    };
    for (const auto& h : corpus) {
      for (auto kind : {PartKind::any, PartKind::connected}) {
        auto all = veblen_partitions(h, kind);
        REQUIRE_FALSE(all.empty());
        CHECK(all.front().size() == 1);
        for (const auto& p : all) {
          MultiHypergraph total(h.k(), h.n());
          for (const auto& part : p) {
            CHECK(is_veblen(part));
            if (kind == PartKind::connected) CHECK(is_connected(part));
            total = sum(total, part);
          }
          CHECK(total == h);
        }
      }
    }
    // e^6 splits as {e^6} or {e^3, e^3}.
    CHECK(veblen_partitions(corpus[0]).size() == 2);
    // The doubled triangle: whole, two triangles, three digons, or one digon
    // plus the remaining pair of digons (three ways).
    CHECK(veblen_partitions(corpus[2], PartKind::connected).size() == 6);
  }
}
